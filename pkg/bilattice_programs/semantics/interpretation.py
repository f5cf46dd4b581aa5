from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from bilattice_programs.bilattice.bilattice import BilatticeSpec
from bilattice_programs.core.exceptions import InterpretationError
from bilattice_programs.program.syntax import (
    Atom, Binary, Connective, Const, Formula, Negation, Quantified, Quantifier, Truth, substitute,
)

CONNECTIVE_OPERATIONS: Dict[Connective, Callable[[BilatticeSpec, Any, Any], Any]] = {
    Connective.AND: BilatticeSpec.meet_t,
    Connective.OR: BilatticeSpec.join_t,
    Connective.TIMES: BilatticeSpec.consensus,
    Connective.PLUS: BilatticeSpec.gullibility,
}


class Interpretation:
    """
    A valuation of a Herbrand base in a bilattice.

    Only defined atoms (value other than U) are stored; every other atom of
    the base reads as U. Instances are never mutated after construction.
    """

    def __init__(self, bilattice: BilatticeSpec, base: Iterable[Atom], values: Optional[Mapping[Atom, Any]] = None):
        self.bilattice = bilattice
        self.base: FrozenSet[Atom] = frozenset(base)
        under = bilattice.under
        stored: Dict[Atom, Any] = {}
        for atom, value in (values or {}).items():
            if atom not in self.base:
                raise InterpretationError(f'{atom} is not in the Herbrand base')
            bilattice.check(value)
            if value != under:
                stored[atom] = value
        self._values = stored

    @classmethod
    def everywhere(cls, bilattice: BilatticeSpec, base: Iterable[Atom], value: Any) -> 'Interpretation':
        base = frozenset(base)
        return cls(bilattice, base, {atom: value for atom in base})

    def __getitem__(self, atom: Atom) -> Any:
        if atom not in self.base:
            raise InterpretationError(f'{atom} is not in the Herbrand base')
        return self._values.get(atom, self.bilattice.under)

    def __eq__(self, other):
        if not isinstance(other, Interpretation):
            return NotImplemented
        return self.bilattice == other.bilattice and self.base == other.base and self._values == other._values

    def __hash__(self):
        return hash((self.bilattice, self.base, frozenset(self._values.items())))

    def __repr__(self):
        return f'Interpretation({self.bilattice.name}, {{{", ".join(self.table())}}})'

    def __len__(self):
        return len(self._values)

    def defined_atoms(self) -> FrozenSet[Atom]:
        return frozenset(self._values)

    def items(self) -> List[Tuple[Atom, Any]]:
        """Defined atoms with their values, sorted by atom text."""
        return sorted(self._values.items(), key=lambda item: str(item[0]))

    def _same_frame(self, other: 'Interpretation'):
        if self.bilattice != other.bilattice:
            raise InterpretationError(f'Interpretations over {self.bilattice.name} and {other.bilattice.name}')
        if self.base != other.base:
            raise InterpretationError('Interpretations over different Herbrand bases')

    def part_of(self, other: 'Interpretation') -> bool:
        """I ≤ J: every atom defined by I has the same value in J."""
        self._same_frame(other)
        return all(other._values.get(atom) == value for atom, value in self._values.items())

    def incompatible_atoms(self, other: 'Interpretation') -> FrozenSet[Atom]:
        self._same_frame(other)
        return frozenset(atom for atom, value in self._values.items()
                         if atom in other._values and other._values[atom] != value)

    def compatible(self, other: 'Interpretation') -> bool:
        return not self.incompatible_atoms(other)

    def restrict(self, atoms: Iterable[Atom]) -> 'Interpretation':
        keep = frozenset(atoms)
        return self._with({atom: value for atom, value in self._values.items() if atom in keep})

    def _with(self, values: Mapping[Atom, Any]) -> 'Interpretation':
        return Interpretation(self.bilattice, self.base, values)

    def _pointwise(self, other: 'Interpretation', operation) -> 'Interpretation':
        # Every bilattice operation maps (U, U) to U, so undefined atoms on both sides stay undefined.
        self._same_frame(other)
        atoms = self._values.keys() | other._values.keys()
        return self._with({atom: operation(self[atom], other[atom]) for atom in atoms})

    def knowledge_join(self, other: 'Interpretation') -> 'Interpretation':
        """Pointwise ⊕."""
        return self._pointwise(other, self.bilattice.gullibility)

    def consensus(self, other: 'Interpretation') -> 'Interpretation':
        """Pointwise ⊗."""
        return self._pointwise(other, self.bilattice.consensus)

    def meet_t(self, other: 'Interpretation') -> 'Interpretation':
        return self._pointwise(other, self.bilattice.meet_t)

    def join_t(self, other: 'Interpretation') -> 'Interpretation':
        return self._pointwise(other, self.bilattice.join_t)

    def negate(self) -> 'Interpretation':
        return self._with({atom: self.bilattice.negate(value) for atom, value in self._values.items()})

    def leq_k(self, other: 'Interpretation') -> bool:
        self._same_frame(other)
        atoms = self._values.keys() | other._values.keys()
        return all(self.bilattice.leq_k(self[atom], other[atom]) for atom in atoms)

    def leq_t(self, other: 'Interpretation') -> bool:
        self._same_frame(other)
        atoms = self._values.keys() | other._values.keys()
        return all(self.bilattice.leq_t(self[atom], other[atom]) for atom in atoms)

    def saturate(self) -> 'Interpretation':
        """I_O: I on its defined atoms, O everywhere else."""
        over = self.bilattice.over
        return self._with({atom: self._values.get(atom, over) for atom in self.base})

    def evaluate(self, formula: Formula, universe: Sequence[Const] = ()) -> Any:
        """
        Computes the value of a closed formula.

        Args:
            formula (Formula): The formula; quantifiers range over universe.
            universe (Sequence[Const]): Constants for quantifier expansion.

        Returns:
            Any: A value of the interpretation's bilattice.
        """
        if isinstance(formula, Atom):
            if not formula.is_ground:
                raise InterpretationError(f'{formula} has free variables')
            return self[formula]
        if isinstance(formula, Negation):
            return self.bilattice.negate(self.evaluate(formula.atom, universe))
        if isinstance(formula, Truth):
            self.bilattice.check(formula.value)
            return formula.value
        if isinstance(formula, Binary):
            operation = CONNECTIVE_OPERATIONS[formula.connective]
            return operation(self.bilattice, self.evaluate(formula.left, universe),
                             self.evaluate(formula.right, universe))
        if isinstance(formula, Quantified):
            if not universe:
                raise InterpretationError(f'Cannot evaluate {formula} without constants to range over')
            values = [self.evaluate(substitute(formula.body, {formula.var: const}), universe) for const in universe]
            if formula.quantifier is Quantifier.EXISTS:
                return self.bilattice.join_all_t(values)
            return self.bilattice.meet_all_t(values)
        raise InterpretationError(f'Cannot evaluate {formula!r}')

    def robust_value(self, formula: Formula, saturated: Optional['Interpretation'] = None,
                     universe: Sequence[Const] = ()) -> Optional[Any]:
        """
        The value α with formula ≡ α w.r.t. this interpretation, if any.

        Every completion J ≥ I gives the formula the same value exactly when
        I and I_O do, so two evaluations settle it. Pass a precomputed
        saturate() result when evaluating many formulas against one I.
        """
        if saturated is None:
            saturated = self.saturate()
        value = self.evaluate(formula, universe)
        if saturated.evaluate(formula, universe) == value:
            return value
        return None

    def table(self) -> List[str]:
        return [f'{atom} = {self.bilattice.format_value(value)}' for atom, value in self.items()]

    def records(self) -> List[Dict[str, str]]:
        return [{'atom': str(atom), 'value': self.bilattice.format_value(value)} for atom, value in self.items()]
