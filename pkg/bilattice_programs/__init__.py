__version__ = "0.2.0"

from bilattice_programs.bilattice.bilattice import (  # noqa: E402
    FOUR, BilatticeSpec, FourValue, IntervalValue, ProductValue, bilattice_from_name, make_interval_bilattice,
    make_product_bilattice,
)
from bilattice_programs.program.grounder import GroundProgram, Grounder, ground  # noqa: E402
from bilattice_programs.program.parser import parse_hypothesis, parse_program  # noqa: E402
from bilattice_programs.semantics.engine import SemanticsEngine, SemanticsResult, SupportResult  # noqa: E402
from bilattice_programs.semantics.interpretation import Interpretation  # noqa: E402
from bilattice_programs.semantics.reference import DatalogProgram, PartialInterpretation  # noqa: E402
