import os

from bilattice_programs.bilattice.bilattice import FOUR, BilatticeSpec
from bilattice_programs.handlers.file_handler import FileHandler
from bilattice_programs.program.grounder import GroundProgram, Grounder
from bilattice_programs.program.parser import parse_program
from bilattice_programs.program.syntax import Atom, Binary, Const, Quantified
from bilattice_programs.semantics.interpretation import Interpretation

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def load_ground(name: str, bilattice: BilatticeSpec = FOUR) -> GroundProgram:
    return Grounder.ground(FileHandler.load_program(data_path(name), bilattice))


def load_hypothesis(name: str, program: GroundProgram) -> Interpretation:
    return program.align(FileHandler.load_hypothesis(data_path(name), program.bilattice))


def ground_text(text: str, bilattice: BilatticeSpec = FOUR) -> GroundProgram:
    return Grounder.ground(parse_program(text, bilattice))


def atom(text: str) -> Atom:
    """atom('friends(john,ted)') builds the ground atom."""
    predicate, _, rest = text.partition('(')
    args = tuple(Const(name) for name in rest.rstrip(')').split(',')) if rest else ()
    return Atom(predicate, args)


def wide_program_text(size: int = 1200) -> str:
    """Facts q(c0) .. q(c<size-1>) and one rule whose quantifier ranges over all of them."""
    facts = ''.join(f'q(c{index}).\n' for index in range(size))
    return facts + 'p <- exists X q(X).\n'


def formula_depth(formula) -> int:
    if isinstance(formula, Binary):
        return 1 + max(formula_depth(formula.left), formula_depth(formula.right))
    if isinstance(formula, Quantified):
        return 1 + formula_depth(formula.body)
    return 0
