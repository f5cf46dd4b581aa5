from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from bilattice_programs.bilattice.bilattice import FOUR, BilatticeSpec


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


Term = Union[Const, Var]


@dataclass(frozen=True)
class Atom:
    """
    An atom p(t1,...,tn); a zero-ary atom prints without parentheses.

    The source position is kept for diagnostics and ignored by equality.
    """

    predicate: str
    args: Tuple[Term, ...] = ()
    position: Optional[Tuple[int, int]] = field(default=None, compare=False, repr=False)

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def signature(self) -> Tuple[str, int]:
        return self.predicate, len(self.args)

    @property
    def is_ground(self) -> bool:
        return all(isinstance(arg, Const) for arg in self.args)

    def __str__(self):
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(str(arg) for arg in self.args)})"


@dataclass(frozen=True)
class Negation:
    """A negative literal; negation only ever applies to atoms."""

    atom: Atom

    def __str__(self):
        return f'~{self.atom}'


@dataclass(frozen=True)
class Truth:
    """A bilattice constant inside a formula."""

    value: Any

    def __str__(self):
        return str(self.value)


class Connective(Enum):
    AND = '&'
    OR = '|'
    TIMES = '(*)'
    PLUS = '(+)'

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def precedence(self) -> int:
        return _PRECEDENCE[self]


# Higher binds tighter.
_PRECEDENCE = {
    Connective.AND: 4,
    Connective.OR: 3,
    Connective.TIMES: 2,
    Connective.PLUS: 1,
}


class Quantifier(Enum):
    EXISTS = 'exists'
    FORALL = 'forall'


@dataclass(frozen=True)
class Binary:
    connective: Connective
    left: 'Formula'
    right: 'Formula'

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Quantified:
    quantifier: Quantifier
    var: Var
    body: 'Formula'

    def __str__(self):
        return format_formula(self)


Formula = Union[Atom, Negation, Truth, Binary, Quantified]


@dataclass(frozen=True)
class Clause:
    head: Atom
    body: Formula

    def __str__(self):
        return f'{self.head} <- {format_formula(self.body)}.'


@dataclass(frozen=True)
class Program:
    """
    A Fitting program <F, R>: ground facts with their values plus rules.
    """

    facts: Mapping[Atom, Any] = field(default_factory=dict)
    rules: Tuple[Clause, ...] = ()
    bilattice: BilatticeSpec = FOUR

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return self.bilattice == other.bilattice and dict(self.facts) == dict(other.facts) \
            and self.rules == other.rules

    def normalized(self) -> 'Program':
        """
        Merges the bodies of rules with identical heads by ∨, keeping the
        order in which heads first appear.
        """
        bodies: Dict[Atom, List[Formula]] = {}
        for rule in self.rules:
            bodies.setdefault(rule.head, []).append(rule.body)
        rules = tuple(Clause(head, join_balanced(Connective.OR, merged)) for head, merged in bodies.items())
        return Program(dict(self.facts), rules, self.bilattice)

    def to_text(self) -> str:
        lines = [f'{atom} = {self.bilattice.format_value(value)}.'
                 for atom, value in sorted(self.facts.items(), key=lambda item: str(item[0]))]
        lines.extend(str(rule) for rule in self.rules)
        return '\n'.join(lines) + ('\n' if lines else '')

    def constants(self) -> FrozenSet[Const]:
        found = set()
        for atom in self.facts:
            found.update(atom.args)
        for rule in self.rules:
            found.update(arg for arg in rule.head.args if isinstance(arg, Const))
            found.update(arg for atom in atoms_of(rule.body) for arg in atom.args if isinstance(arg, Const))
        return frozenset(found)

    def signatures(self) -> FrozenSet[Tuple[str, int]]:
        found = {atom.signature for atom in self.facts}
        for rule in self.rules:
            found.add(rule.head.signature)
            found.update(atom.signature for atom in atoms_of(rule.body))
        return frozenset(found)


def join_balanced(connective: Connective, operands: Sequence[Formula]) -> Formula:
    """
    Combines operands with an associative connective into a tree of depth
    log2(n), pairing neighbours so the left-to-right order is kept.
    """
    if not operands:
        raise ValueError(f"join_balanced needs at least one operand for {connective.symbol}")
    level = list(operands)
    while len(level) > 1:
        paired = [Binary(connective, level[index], level[index + 1]) for index in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0]


def atoms_of(formula: Formula) -> Iterator[Atom]:
    if isinstance(formula, Atom):
        yield formula
    elif isinstance(formula, Negation):
        yield formula.atom
    elif isinstance(formula, Binary):
        yield from atoms_of(formula.left)
        yield from atoms_of(formula.right)
    elif isinstance(formula, Quantified):
        yield from atoms_of(formula.body)


def connectives_of(formula: Formula) -> Iterator[Union[Connective, Quantifier]]:
    if isinstance(formula, Binary):
        yield formula.connective
        yield from connectives_of(formula.left)
        yield from connectives_of(formula.right)
    elif isinstance(formula, Quantified):
        yield formula.quantifier
        yield from connectives_of(formula.body)


def constants_of(formula: Formula) -> Iterator[Any]:
    """Bilattice constants occurring in a formula."""
    if isinstance(formula, Truth):
        yield formula.value
    elif isinstance(formula, Binary):
        yield from constants_of(formula.left)
        yield from constants_of(formula.right)
    elif isinstance(formula, Quantified):
        yield from constants_of(formula.body)


def free_variables(formula: Formula) -> FrozenSet[Var]:
    if isinstance(formula, Atom):
        return frozenset(arg for arg in formula.args if isinstance(arg, Var))
    if isinstance(formula, Negation):
        return free_variables(formula.atom)
    if isinstance(formula, Binary):
        return free_variables(formula.left) | free_variables(formula.right)
    if isinstance(formula, Quantified):
        return free_variables(formula.body) - {formula.var}
    return frozenset()


def _substitute_atom(atom: Atom, binding: Mapping[Var, Const]) -> Atom:
    if atom.is_ground:
        return atom
    return Atom(atom.predicate, tuple(binding.get(arg, arg) if isinstance(arg, Var) else arg for arg in atom.args),
                atom.position)


def substitute(formula: Formula, binding: Mapping[Var, Const]) -> Formula:
    """
    Replaces free variables by constants; bound occurrences are left alone.
    """
    if not binding:
        return formula
    if isinstance(formula, Atom):
        return _substitute_atom(formula, binding)
    if isinstance(formula, Negation):
        return Negation(_substitute_atom(formula.atom, binding))
    if isinstance(formula, Binary):
        return Binary(formula.connective, substitute(formula.left, binding), substitute(formula.right, binding))
    if isinstance(formula, Quantified):
        inner = {var: const for var, const in binding.items() if var != formula.var}
        return Quantified(formula.quantifier, formula.var, substitute(formula.body, inner))
    return formula


def format_formula(formula: Formula) -> str:
    """
    Prints a formula with the fewest parentheses that read back to the same tree.
    """
    if isinstance(formula, Binary):
        left = format_formula(formula.left)
        right = format_formula(formula.right)
        if _needs_parentheses(formula.left, formula.connective.precedence):
            left = f'({left})'
        if _needs_parentheses(formula.right, formula.connective.precedence + 1):
            right = f'({right})'
        return f'{left} {formula.connective.symbol} {right}'
    if isinstance(formula, Quantified):
        body = format_formula(formula.body)
        if isinstance(formula.body, Binary):
            body = f'({body})'
        return f'{formula.quantifier.value} {formula.var} {body}'
    return str(formula)


def _needs_parentheses(operand: Formula, minimum: int) -> bool:
    if isinstance(operand, Quantified):
        return True
    return isinstance(operand, Binary) and operand.connective.precedence < minimum
