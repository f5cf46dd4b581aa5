from decimal import Decimal
from functools import reduce
from itertools import product
from typing import Dict, List, Sequence

import hypothesis.strategies as st

from bilattice_programs.bilattice.base_lattice import FiniteChain
from bilattice_programs.bilattice.bilattice import (
    FOUR, FourValue, IntervalValue, ProductValue, make_interval_bilattice, make_product_bilattice,
)
from bilattice_programs.program.grounder import GroundProgram
from bilattice_programs.program.syntax import Atom, Binary, Clause, Connective, Formula, Negation, Program, Truth
from bilattice_programs.semantics.interpretation import Interpretation

ATOMS = tuple(Atom(f'p{index}') for index in range(8))

UNIT_PRODUCT = make_product_bilattice('unit')
CHAIN_PRODUCT = make_product_bilattice(FiniteChain(2))
CHAIN_INTERVAL = make_interval_bilattice(FiniteChain(3))
BOOL_INTERVAL = make_interval_bilattice('bool')

four_values = st.sampled_from(tuple(FourValue))

unit_elements = st.integers(min_value=0, max_value=20).map(lambda n: Decimal(n) / 20)
unit_pairs = st.builds(ProductValue, unit_elements, unit_elements)
chain_intervals = st.builds(IntervalValue, st.integers(0, 3), st.integers(0, 3))
chain_pairs = st.builds(ProductValue, st.integers(0, 2), st.integers(0, 2))


def conjunction(literals: Sequence[Formula]) -> Formula:
    return reduce(lambda left, right: Binary(Connective.AND, left, right), literals)


@st.composite
def datalog_programs(draw, max_atoms: int = 8, max_rules: int = 12, max_body: int = 3) -> Program:
    """
    Propositional normal programs: true facts plus rules whose bodies are
    conjunctions of literals.
    """
    atoms = ATOMS[:draw(st.integers(1, max_atoms))]
    literals = st.tuples(st.sampled_from(atoms), st.booleans()).map(
        lambda pair: pair[0] if pair[1] else Negation(pair[0]))
    rules = draw(st.lists(st.tuples(st.sampled_from(atoms), st.lists(literals, min_size=1, max_size=max_body)),
                          max_size=max_rules))
    facts = draw(st.lists(st.sampled_from(atoms), max_size=2, unique=True))
    return Program({atom: FOUR.true for atom in facts},
                   tuple(Clause(head, conjunction(body)) for head, body in rules), FOUR)


def four_formulas(atoms: Sequence[Atom], max_leaves: int = 4):
    leaves = st.one_of(
        st.sampled_from(atoms),
        st.sampled_from(atoms).map(Negation),
        four_values.map(Truth),
    )
    return st.recursive(
        leaves,
        lambda children: st.builds(Binary, st.sampled_from(tuple(Connective)), children, children),
        max_leaves=max_leaves,
    )


@st.composite
def four_programs(draw, max_atoms: int = 6, max_rules: int = 6) -> Program:
    """
    Programs over FOUR with arbitrary connectives and fact values. Fact atoms
    never head a rule, so every fact is reproduced by the rules.
    """
    atoms = ATOMS[:draw(st.integers(1, max_atoms))]
    heads = draw(st.lists(st.sampled_from(atoms), max_size=max_rules))
    rules = tuple(Clause(head, draw(four_formulas(atoms))) for head in heads)
    free = [atom for atom in atoms if atom not in set(heads)]
    facts: Dict[Atom, FourValue] = {}
    if free:
        facts = draw(st.dictionaries(st.sampled_from(free), four_values, max_size=3))
    return Program(facts, rules, FOUR)


@st.composite
def hypotheses(draw, program: GroundProgram, max_defined: int = 4) -> Interpretation:
    atoms = sorted(program.base, key=str)
    if not atoms:
        return program.empty()
    values = draw(st.dictionaries(st.sampled_from(atoms), st.sampled_from(program.bilattice.values()),
                                  max_size=max_defined))
    return Interpretation(program.bilattice, program.base, values)


@st.composite
def three_valued(draw, base: Sequence[Atom]) -> Interpretation:
    values = draw(st.lists(st.sampled_from((FourValue.TRUE, FourValue.FALSE, FourValue.UNDER)),
                           min_size=len(base), max_size=len(base)))
    return Interpretation(FOUR, base, dict(zip(base, values)))


def restrictions(interpretation: Interpretation) -> List[Interpretation]:
    """Every restriction of an interpretation to a subset of its defined atoms."""
    defined = sorted(interpretation.defined_atoms(), key=str)
    return [interpretation.restrict(atom for atom, keep in zip(defined, mask) if keep)
            for mask in product((False, True), repeat=len(defined))]
