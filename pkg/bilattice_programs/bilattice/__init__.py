from bilattice_programs.bilattice.base_lattice import (
    BaseLattice, FiniteChain, TwoPointLattice, UnitInterval, base_lattice, format_element,
)
from bilattice_programs.bilattice.bilattice import (
    FOUR, BilatticeSpec, FourBilattice, FourValue, IntervalBilattice, IntervalValue, ProductBilattice,
    ProductValue, bilattice_from_name, four_to_product, make_interval_bilattice, make_product_bilattice,
)
