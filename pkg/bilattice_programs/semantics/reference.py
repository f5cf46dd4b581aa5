"""
Well-founded and Kripke-Kleene semantics of Datalog with negation, computed
directly from their classical definitions. They serve as oracles for the
hypothesis-founded semantics under the everywhere-F and everywhere-U
hypotheses.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from bilattice_programs.bilattice.bilattice import FOUR, FourValue
from bilattice_programs.core.exceptions import ConsistencyError, ConvergenceError, FragmentError, InterpretationError
from bilattice_programs.core.logger import logger
from bilattice_programs.program.grounder import GroundProgram
from bilattice_programs.program.syntax import Atom, Binary, Connective, Formula, Negation, Truth
from bilattice_programs.semantics.interpretation import Interpretation

Conjunction = Tuple[FrozenSet[Atom], FrozenSet[Atom]]


@dataclass(frozen=True)
class PartialInterpretation:
    """A consistent set of ground literals, split into positive and negated atoms."""

    pos: FrozenSet[Atom] = frozenset()
    neg: FrozenSet[Atom] = frozenset()

    def __post_init__(self):
        clash = self.pos & self.neg
        if clash:
            raise ConsistencyError(f"Both A and ~A for {', '.join(sorted(str(atom) for atom in clash))}")

    def to_three_valued(self, base: Iterable[Atom]) -> Interpretation:
        values = {atom: FourValue.TRUE for atom in self.pos}
        values.update({atom: FourValue.FALSE for atom in self.neg})
        return Interpretation(FOUR, base, values)

    @classmethod
    def from_three_valued(cls, interpretation: Interpretation) -> 'PartialInterpretation':
        if interpretation.bilattice != FOUR:
            raise InterpretationError(f'Expected an interpretation over four, got {interpretation.bilattice.name}')
        pos, neg = set(), set()
        for atom, value in interpretation.items():
            if value is FourValue.TRUE:
                pos.add(atom)
            elif value is FourValue.FALSE:
                neg.add(atom)
            else:
                raise ConsistencyError(f'{atom} = {value} has no counterpart as a set of literals')
        return cls(frozenset(pos), frozenset(neg))


@dataclass(frozen=True)
class DatalogRule:
    head: Atom
    pos: FrozenSet[Atom] = frozenset()
    neg: FrozenSet[Atom] = frozenset()

    def __str__(self):
        body = [str(atom) for atom in sorted(self.pos, key=str)] + [f'~{atom}' for atom in sorted(self.neg, key=str)]
        return f"{self.head} <- {' & '.join(body)}." if body else f'{self.head}.'


def _disjuncts(formula: Formula) -> List[Conjunction]:
    if isinstance(formula, Atom):
        return [(frozenset([formula]), frozenset())]
    if isinstance(formula, Negation):
        return [(frozenset(), frozenset([formula.atom]))]
    if isinstance(formula, Truth) and formula.value is FourValue.TRUE:
        return [(frozenset(), frozenset())]
    if isinstance(formula, Binary) and formula.connective is Connective.OR:
        return _disjuncts(formula.left) + _disjuncts(formula.right)
    if isinstance(formula, Binary) and formula.connective is Connective.AND:
        return [(left_pos | right_pos, left_neg | right_neg)
                for left_pos, left_neg in _disjuncts(formula.left)
                for right_pos, right_neg in _disjuncts(formula.right)]
    raise FragmentError(f'{formula} is outside Datalog with negation')


@dataclass(frozen=True)
class DatalogProgram:
    """
    A ground normal program: rules with literal conjunctions as bodies.
    Facts are rules with an empty body.
    """

    rules: Tuple[DatalogRule, ...]
    base: FrozenSet[Atom]

    @classmethod
    def from_ground(cls, program: GroundProgram) -> 'DatalogProgram':
        """
        Splits each merged ∨ body back into one rule per disjunct of its
        disjunctive normal form.
        """
        if not program.is_datalog_neg():
            raise FragmentError('The program is not in the Datalog with negation fragment '
                                '(four only, true facts, no (*), (+), forall or constants other than T)')
        rules = [DatalogRule(atom) for atom in program.facts]
        for head, body in program.rules.items():
            rules.extend(DatalogRule(head, pos, neg) for pos, neg in _disjuncts(body))
        return cls(tuple(rules), program.base)

    def heads(self) -> FrozenSet[Atom]:
        return frozenset(rule.head for rule in self.rules)

    def tp(self, interpretation: PartialInterpretation) -> FrozenSet[Atom]:
        """Heads of the rules whose whole body is in the interpretation."""
        return frozenset(rule.head for rule in self.rules
                         if rule.pos <= interpretation.pos and rule.neg <= interpretation.neg)

    @staticmethod
    def _contradicted(rule: DatalogRule, interpretation: PartialInterpretation) -> bool:
        return bool(rule.pos & interpretation.neg or rule.neg & interpretation.pos)

    def spf(self, interpretation: PartialInterpretation) -> FrozenSet[Atom]:
        """
        Potentially founded atoms: the limit of adding heads of rules whose
        body is not contradicted and whose positive atoms are already founded.
        """
        usable = [rule for rule in self.rules if not self._contradicted(rule, interpretation)]
        founded: FrozenSet[Atom] = frozenset()
        while True:
            following = frozenset(rule.head for rule in usable if rule.pos <= founded)
            if following == founded:
                return founded
            founded = following

    def unfounded(self, interpretation: PartialInterpretation) -> FrozenSet[Atom]:
        """The greatest unfounded set, as the complement of spf."""
        return self.base - self.spf(interpretation)

    def is_unfounded_set(self, atoms: FrozenSet[Atom], interpretation: PartialInterpretation) -> bool:
        """
        Every rule for a member has a body literal false in the interpretation
        or a positive body atom in the set.
        """
        return all(self._contradicted(rule, interpretation) or rule.pos & atoms
                   for rule in self.rules if rule.head in atoms)

    def well_founded_stages(self) -> List[PartialInterpretation]:
        """
        Iterates W(I) = T_P(I) ∪ ¬U_P(I) from the empty set of literals.
        """
        stages = [PartialInterpretation()]
        for _ in range(len(self.base) + 2):
            current = stages[-1]
            following = PartialInterpretation(self.tp(current), self.unfounded(current))
            if following == current:
                logger.debug(f'Well-founded model after {len(stages)} stages')
                return stages
            stages.append(following)
        raise ConvergenceError('The well-founded iteration did not stabilize', stages[-2:])

    def well_founded(self) -> PartialInterpretation:
        return self.well_founded_stages()[-1]

    def _body_value(self, rule: DatalogRule, valuation: Interpretation) -> FourValue:
        values = [valuation[atom] for atom in rule.pos] + [FOUR.negate(valuation[atom]) for atom in rule.neg]
        if any(value is FourValue.FALSE for value in values):
            return FourValue.FALSE
        if all(value is FourValue.TRUE for value in values):
            return FourValue.TRUE
        return FourValue.UNDER

    def phi(self, valuation: Interpretation) -> Interpretation:
        """
        One Kripke-Kleene step: true if some rule body is true, false if the
        atom has rules and all their bodies are false, unknown otherwise.
        """
        bodies = {}
        for rule in self.rules:
            bodies.setdefault(rule.head, []).append(self._body_value(rule, valuation))
        values = {}
        for head, head_values in bodies.items():
            if FourValue.TRUE in head_values:
                values[head] = FourValue.TRUE
            elif all(value is FourValue.FALSE for value in head_values):
                values[head] = FourValue.FALSE
        return Interpretation(FOUR, self.base, values)

    def kripke_kleene_stages(self) -> List[Interpretation]:
        stages = [Interpretation(FOUR, self.base)]
        for _ in range(len(self.base) + 2):
            following = self.phi(stages[-1])
            if following == stages[-1]:
                logger.debug(f'Kripke-Kleene model after {len(stages)} stages')
                return stages
            stages.append(following)
        raise ConvergenceError('The Kripke-Kleene iteration did not stabilize', stages[-2:])

    def kripke_kleene(self) -> Interpretation:
        return self.kripke_kleene_stages()[-1]
