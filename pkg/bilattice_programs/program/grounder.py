from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Dict, FrozenSet, List, Mapping, Tuple

from bilattice_programs.bilattice.bilattice import FOUR, BilatticeSpec
from bilattice_programs.core.exceptions import GroundingError, InterpretationError
from bilattice_programs.core.logger import logger
from bilattice_programs.program.syntax import (
    Atom, Binary, Clause, Connective, Const, Formula, Program, Quantified, Quantifier, Truth,
    connectives_of, constants_of, free_variables, join_balanced, substitute,
)
from bilattice_programs.semantics.interpretation import Interpretation


@dataclass(frozen=True)
class GroundProgram:
    """
    A program instantiated over its constants.

    rules maps each ground head to the ∨ of its instantiated, quantifier-free
    rule bodies; facts keeps the fact values separately. clauses merges both,
    a fact being the clause A <- v.
    """

    bilattice: BilatticeSpec
    universe: Tuple[Const, ...]
    base: FrozenSet[Atom]
    facts: Mapping[Atom, Any] = field(default_factory=dict)
    rules: Mapping[Atom, Formula] = field(default_factory=dict)
    uses_forall: bool = field(default=False, compare=False)

    def __hash__(self):
        return hash((self.bilattice, self.universe, self.base))

    @cached_property
    def clauses(self) -> Dict[Atom, Formula]:
        merged: Dict[Atom, Formula] = {atom: Truth(value) for atom, value in self.facts.items()}
        for head, body in self.rules.items():
            merged[head] = Binary(Connective.OR, merged[head], body) if head in merged else body
        return merged

    @cached_property
    def heads(self) -> FrozenSet[Atom]:
        return frozenset(self.clauses)

    @cached_property
    def facts_interpretation(self) -> Interpretation:
        return Interpretation(self.bilattice, self.base, self.facts)

    def empty(self) -> Interpretation:
        return Interpretation(self.bilattice, self.base)

    def everywhere(self, value: Any) -> Interpretation:
        return Interpretation.everywhere(self.bilattice, self.base, value)

    def align(self, interpretation: Interpretation) -> Interpretation:
        """
        Re-bases an interpretation (e.g. a parsed hypothesis) on this program's
        Herbrand base.
        """
        if interpretation.bilattice != self.bilattice:
            raise InterpretationError(
                f'Interpretation over {interpretation.bilattice.name}, program over {self.bilattice.name}')
        outside = sorted(str(atom) for atom in interpretation.defined_atoms() - self.base)
        if outside:
            raise InterpretationError(f"Atoms outside the Herbrand base: {', '.join(outside)}")
        return Interpretation(self.bilattice, self.base, dict(interpretation.items()))

    def is_datalog_neg(self) -> bool:
        """
        Whether the program is plain Datalog with negation: FOUR, every fact
        true, and rule bodies built from literals, T, ∧, ∨ and ∃ only.
        """
        if self.bilattice != FOUR or self.uses_forall:
            return False
        if any(value != FOUR.true for value in self.facts.values()):
            return False
        for body in self.rules.values():
            if any(connective in (Connective.TIMES, Connective.PLUS, Quantifier.FORALL)
                   for connective in connectives_of(body)):
                return False
            if any(value != FOUR.true for value in constants_of(body)):
                return False
        return True

    def as_program(self) -> Program:
        rules = tuple(Clause(head, body) for head, body in self.rules.items())
        return Program(dict(self.facts), rules, self.bilattice)


class Grounder:
    """
    Instantiates programs over their Herbrand universe.
    """

    @staticmethod
    def expand_quantifiers(formula: Formula, universe: Tuple[Const, ...]) -> Formula:
        """
        Rewrites ∃x φ as φ(c1) ∨ ... ∨ φ(cn) and ∀x φ as φ(c1) ∧ ... ∧ φ(cn).
        """
        if isinstance(formula, Binary):
            return Binary(formula.connective, Grounder.expand_quantifiers(formula.left, universe),
                          Grounder.expand_quantifiers(formula.right, universe))
        if isinstance(formula, Quantified):
            if not universe:
                raise GroundingError(f'{formula.quantifier.value} {formula.var} ranges over an empty universe')
            connective = Connective.OR if formula.quantifier is Quantifier.EXISTS else Connective.AND
            instances = [Grounder.expand_quantifiers(substitute(formula.body, {formula.var: const}), universe)
                         for const in universe]
            return join_balanced(connective, instances)
        return formula

    @staticmethod
    def herbrand_base(program: Program, universe: Tuple[Const, ...]) -> FrozenSet[Atom]:
        return frozenset(Atom(predicate, args)
                         for predicate, arity in program.signatures()
                         for args in product(universe, repeat=arity))

    @staticmethod
    def ground(program: Program) -> GroundProgram:
        """
        Instantiates every rule over all assignments of constants to its head
        variables and merges instances sharing a head by ∨.

        Args:
            program (Program): The program to instantiate.

        Returns:
            GroundProgram: The quantifier-free ground program.
        """
        universe = tuple(sorted(program.constants(), key=lambda const: const.name))
        base = Grounder.herbrand_base(program, universe)
        uses_forall = False
        bodies: Dict[Atom, List[Formula]] = {}
        for rule in program.rules:
            head_variables = sorted(free_variables(rule.head), key=lambda var: var.name)
            unbound = free_variables(rule.body) - set(head_variables)
            if unbound:
                names = ', '.join(sorted(var.name for var in unbound))
                raise GroundingError(f'Rule for {rule.head} uses {names} without binding it in the head '
                                     f'or a quantifier')
            if head_variables and not universe:
                raise GroundingError(f'Rule for {rule.head} has variables but the program has no constants')
            uses_forall = uses_forall or Quantifier.FORALL in connectives_of(rule.body)
            for constants in product(universe, repeat=len(head_variables)):
                binding = dict(zip(head_variables, constants))
                head = Atom(rule.head.predicate, tuple(binding.get(arg, arg) for arg in rule.head.args))
                body = Grounder.expand_quantifiers(substitute(rule.body, binding), universe)
                bodies.setdefault(head, []).append(body)
        rules = {head: join_balanced(Connective.OR, merged) for head, merged in bodies.items()}
        facts = dict(program.facts)
        for atom, value in facts.items():
            if atom in rules and value != program.bilattice.true:
                logger.warning(f'Fact {atom} = {program.bilattice.format_value(value)} also heads a rule; '
                               f'the rule bodies are joined to the fact value with |')
        logger.debug(f'Grounded {len(program.rules)} rules into {len(rules)} ground clauses over '
                     f'{len(universe)} constants, |HB| = {len(base)}')
        return GroundProgram(program.bilattice, universe, base, facts, rules, uses_forall)


def ground(program: Program) -> GroundProgram:
    return Grounder.ground(program)
