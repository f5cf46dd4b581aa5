import os

MAX_WORKERS = min(32, (os.cpu_count() or 1) + 4)

LOG_LEVEL = os.environ.get("BILATTICE_PROGRAMS_LOG_LEVEL", "WARNING").upper()

DEFAULT_BILATTICE = "four"

# Fixpoint loops give up after ITERATION_FACTOR * |HB| + ITERATION_SLACK steps.
ITERATION_FACTOR = 10
ITERATION_SLACK = 10

PROGRAM_SUFFIX = ".blp"
HYPOTHESIS_SUFFIX = ".blh"
