import sys

from bilattice_programs.cli import main

sys.exit(main())
