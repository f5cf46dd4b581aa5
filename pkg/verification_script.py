import os
import sys

# Add the current directory to sys.path to ensure we can import the package
sys.path.append(os.getcwd())

try:
    print("Importing bilattice_programs...")
    import bilattice_programs

    print(f"Success! version {bilattice_programs.__version__}")

    print("Importing core modules...")
    from bilattice_programs.core.logger import logger
    from bilattice_programs.core.exceptions import BilatticeProgramsError
    from bilattice_programs.core.constants import MAX_WORKERS

    print("Success!")

    print("Importing semantics...")
    from bilattice_programs.bilattice.bilattice import FOUR
    from bilattice_programs.program.grounder import Grounder
    from bilattice_programs.program.parser import parse_program
    from bilattice_programs.semantics.engine import SemanticsEngine
    from bilattice_programs.semantics.reference import DatalogProgram

    print("Success!")

    print("Testing SemanticsEngine...")
    program = Grounder.ground(parse_program("c.\nb <- ~c.\na <- ~b.\n"))
    model = SemanticsEngine(program).h_founded_semantics(program.everywhere(FOUR.false)).model
    if model.table() == ["a = T", "b = F", "c = T"]:
        print(f"SemanticsEngine passed: {model.table()}")
    else:
        print(f"SemanticsEngine failed: {model.table()}")
        sys.exit(1)

    print("Testing DatalogProgram...")
    expected = DatalogProgram.from_ground(program).well_founded().to_three_valued(program.base)
    if expected == model:
        print("DatalogProgram passed")
    else:
        print(f"DatalogProgram failed: {expected.table()}")
        sys.exit(1)

    print("All checks passed!")

except Exception as e:
    print(f"Verification failed: {e}")
    import traceback

    traceback.print_exc()
    sys.exit(1)
