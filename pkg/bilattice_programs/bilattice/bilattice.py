import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Any, Dict, Iterable, Tuple

from bilattice_programs.bilattice.base_lattice import BaseLattice, base_lattice, format_element
from bilattice_programs.core.exceptions import BilatticeError, ConfigurationError, UnsupportedOperationError

_PAIR = re.compile(r'^\s*([<\[])\s*([^,<>\[\]]+?)\s*,\s*([^,<>\[\]]+?)\s*([>\]])\s*$')

NAMED_VALUES = ('T', 'F', 'U', 'O')


class FourValue(Enum):
    """Belnap's four values."""

    FALSE = 'F'
    TRUE = 'T'
    UNDER = 'U'
    OVER = 'O'

    @property
    def bits(self) -> Tuple[bool, bool]:
        """(told true, told false)"""
        return _FOUR_BITS[self]

    @classmethod
    def from_bits(cls, told_true: bool, told_false: bool) -> 'FourValue':
        return _BITS_FOUR[(bool(told_true), bool(told_false))]

    def __str__(self):
        return self.value


_FOUR_BITS: Dict[FourValue, Tuple[bool, bool]] = {
    FourValue.TRUE: (True, False),
    FourValue.FALSE: (False, True),
    FourValue.UNDER: (False, False),
    FourValue.OVER: (True, True),
}
_BITS_FOUR = {bits: value for value, bits in _FOUR_BITS.items()}


@dataclass(frozen=True)
class ProductValue:
    """A pair <belief, doubt> of the product construction."""

    belief: Any
    doubt: Any

    def __str__(self):
        return f'<{format_element(self.belief)},{format_element(self.doubt)}>'


@dataclass(frozen=True)
class IntervalValue:
    """A pair [lo, hi] of the interval construction; lo > hi marks an overdetermined value."""

    lo: Any
    hi: Any

    @property
    def is_consistent(self) -> bool:
        return self.lo <= self.hi

    def __str__(self):
        return f'[{format_element(self.lo)},{format_element(self.hi)}]'


class BilatticeSpec(ABC):
    """
    The algebra in force: a carrier with the truth and knowledge orders.

    Binary operations:
        meet_t / join_t      ∧ / ∨, the truth order's meet and join
        consensus            ⊗, the knowledge order's meet
        gullibility          ⊕, the knowledge order's join

    All operations raise BilatticeError when given values of another carrier.
    """

    kind: str = ''

    @property
    @abstractmethod
    def name(self) -> str:
        ...

    @property
    @abstractmethod
    def is_finite(self) -> bool:
        ...

    @property
    @abstractmethod
    def has_negation(self) -> bool:
        ...

    @property
    @abstractmethod
    def has_conflation(self) -> bool:
        ...

    @property
    @abstractmethod
    def true(self) -> Any:
        ...

    @property
    @abstractmethod
    def false(self) -> Any:
        ...

    @property
    @abstractmethod
    def under(self) -> Any:
        ...

    @property
    @abstractmethod
    def over(self) -> Any:
        ...

    @abstractmethod
    def contains(self, value: Any) -> bool:
        ...

    @abstractmethod
    def values(self) -> Tuple[Any, ...]:
        """Every element of a finite carrier."""

    @abstractmethod
    def _meet_t(self, a, b):
        ...

    @abstractmethod
    def _join_t(self, a, b):
        ...

    @abstractmethod
    def _consensus(self, a, b):
        ...

    @abstractmethod
    def _gullibility(self, a, b):
        ...

    @abstractmethod
    def _negate(self, a):
        ...

    @abstractmethod
    def _conflate(self, a):
        ...

    @abstractmethod
    def _leq_t(self, a, b) -> bool:
        ...

    @abstractmethod
    def _leq_k(self, a, b) -> bool:
        ...

    @abstractmethod
    def _parse_pair(self, opening: str, first: str, second: str) -> Any:
        ...

    def check(self, *values: Any) -> None:
        for value in values:
            if not self.contains(value):
                raise BilatticeError(f'{value!r} is not an element of {self.name}')

    def meet_t(self, a, b):
        self.check(a, b)
        return self._meet_t(a, b)

    def join_t(self, a, b):
        self.check(a, b)
        return self._join_t(a, b)

    def consensus(self, a, b):
        self.check(a, b)
        return self._consensus(a, b)

    def gullibility(self, a, b):
        self.check(a, b)
        return self._gullibility(a, b)

    def negate(self, a):
        if not self.has_negation:
            raise UnsupportedOperationError(f'{self.name} has no negation')
        self.check(a)
        return self._negate(a)

    def conflate(self, a):
        if not self.has_conflation:
            raise UnsupportedOperationError(f'{self.name} has no conflation')
        self.check(a)
        return self._conflate(a)

    def leq_t(self, a, b) -> bool:
        self.check(a, b)
        return self._leq_t(a, b)

    def leq_k(self, a, b) -> bool:
        self.check(a, b)
        return self._leq_k(a, b)

    def join_all_t(self, values: Iterable[Any]):
        return reduce(self.join_t, values, self.false)

    def meet_all_t(self, values: Iterable[Any]):
        return reduce(self.meet_t, values, self.true)

    def parse_value(self, text: str) -> Any:
        """
        Reads a value literal: T, F, U, O, <b,d> or [lo,hi].

        Args:
            text (str): The literal as written in a program file.

        Returns:
            Any: The element of this bilattice it denotes.
        """
        literal = text.strip()
        if literal in NAMED_VALUES:
            return self.named(literal)
        match = _PAIR.match(literal)
        if not match or {'<': '>', '[': ']'}[match.group(1)] != match.group(4):
            raise BilatticeError(f"'{literal}' is not a value literal of {self.name}")
        return self._parse_pair(match.group(1), match.group(2), match.group(3))

    def named(self, letter: str) -> Any:
        return {'T': self.true, 'F': self.false, 'U': self.under, 'O': self.over}[letter]

    def format_value(self, value: Any) -> str:
        self.check(value)
        return str(value)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FourBilattice(BilatticeSpec):
    """FOUR, computed on (told true, told false) bit pairs."""

    kind: str = 'four'

    @property
    def name(self) -> str:
        return 'four'

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def has_negation(self) -> bool:
        return True

    @property
    def has_conflation(self) -> bool:
        return True

    @property
    def true(self) -> FourValue:
        return FourValue.TRUE

    @property
    def false(self) -> FourValue:
        return FourValue.FALSE

    @property
    def under(self) -> FourValue:
        return FourValue.UNDER

    @property
    def over(self) -> FourValue:
        return FourValue.OVER

    def contains(self, value: Any) -> bool:
        return isinstance(value, FourValue)

    def values(self) -> Tuple[FourValue, ...]:
        return tuple(FourValue)

    def _meet_t(self, a, b):
        return _FOUR_MEET_T[a, b]

    def _join_t(self, a, b):
        return _FOUR_JOIN_T[a, b]

    def _consensus(self, a, b):
        return _FOUR_CONSENSUS[a, b]

    def _gullibility(self, a, b):
        return _FOUR_GULLIBILITY[a, b]

    def _negate(self, a):
        told_true, told_false = a.bits
        return FourValue.from_bits(told_false, told_true)

    def _conflate(self, a):
        told_true, told_false = a.bits
        return FourValue.from_bits(not told_false, not told_true)

    def _leq_t(self, a, b) -> bool:
        (a_true, a_false), (b_true, b_false) = a.bits, b.bits
        return a_true <= b_true and b_false <= a_false

    def _leq_k(self, a, b) -> bool:
        (a_true, a_false), (b_true, b_false) = a.bits, b.bits
        return a_true <= b_true and a_false <= b_false

    def _parse_pair(self, opening, first, second):
        raise BilatticeError(f"'{opening}{first},{second}' is not a value literal of four (use T, F, U or O)")


def _four_table(operation) -> Dict[Tuple[FourValue, FourValue], FourValue]:
    return {(a, b): FourValue.from_bits(*operation(a.bits, b.bits)) for a in FourValue for b in FourValue}


_FOUR_MEET_T = _four_table(lambda a, b: (a[0] and b[0], a[1] or b[1]))
_FOUR_JOIN_T = _four_table(lambda a, b: (a[0] or b[0], a[1] and b[1]))
_FOUR_CONSENSUS = _four_table(lambda a, b: (a[0] and b[0], a[1] and b[1]))
_FOUR_GULLIBILITY = _four_table(lambda a, b: (a[0] or b[0], a[1] or b[1]))


@dataclass(frozen=True)
class ProductBilattice(BilatticeSpec):
    """L1 ⊙ L2: pairs <belief, doubt>, belief from L1 and doubt from L2."""

    first: BaseLattice
    second: BaseLattice
    kind: str = 'product'

    @property
    def name(self) -> str:
        if self.first == self.second:
            return f'product:{self.first.name}'
        return f'product:{self.first.name},{self.second.name}'

    @property
    def is_finite(self) -> bool:
        return self.first.is_finite and self.second.is_finite

    @property
    def has_negation(self) -> bool:
        return self.first == self.second

    @property
    def has_conflation(self) -> bool:
        return self.first == self.second

    @property
    def true(self) -> ProductValue:
        return ProductValue(self.first.top, self.second.bottom)

    @property
    def false(self) -> ProductValue:
        return ProductValue(self.first.bottom, self.second.top)

    @property
    def under(self) -> ProductValue:
        return ProductValue(self.first.bottom, self.second.bottom)

    @property
    def over(self) -> ProductValue:
        return ProductValue(self.first.top, self.second.top)

    def contains(self, value: Any) -> bool:
        return isinstance(value, ProductValue) and self.first.contains(value.belief) \
            and self.second.contains(value.doubt)

    def values(self) -> Tuple[ProductValue, ...]:
        return tuple(ProductValue(x, y) for x in self.first.elements() for y in self.second.elements())

    def _meet_t(self, a, b):
        return ProductValue(self.first.meet(a.belief, b.belief), self.second.join(a.doubt, b.doubt))

    def _join_t(self, a, b):
        return ProductValue(self.first.join(a.belief, b.belief), self.second.meet(a.doubt, b.doubt))

    def _consensus(self, a, b):
        return ProductValue(self.first.meet(a.belief, b.belief), self.second.meet(a.doubt, b.doubt))

    def _gullibility(self, a, b):
        return ProductValue(self.first.join(a.belief, b.belief), self.second.join(a.doubt, b.doubt))

    def _negate(self, a):
        return ProductValue(a.doubt, a.belief)

    def _conflate(self, a):
        return ProductValue(self.second.invert(a.doubt), self.first.invert(a.belief))

    def _leq_t(self, a, b) -> bool:
        return self.first.leq(a.belief, b.belief) and self.second.leq(b.doubt, a.doubt)

    def _leq_k(self, a, b) -> bool:
        return self.first.leq(a.belief, b.belief) and self.second.leq(a.doubt, b.doubt)

    def _parse_pair(self, opening, first, second):
        if opening != '<':
            raise BilatticeError(f"{self.name} values are written <belief,doubt>, got '{opening}{first},{second}'")
        return ProductValue(self.first.parse(first), self.second.parse(second))


@dataclass(frozen=True)
class IntervalBilattice(BilatticeSpec):
    """
    Intervals [lo, hi] over a base lattice, extended with overdetermined
    pairs (lo > hi) so that ⊕ is total and [top, bottom] is the knowledge top.
    """

    lattice: BaseLattice
    kind: str = 'interval'

    @property
    def name(self) -> str:
        return f'interval:{self.lattice.name}'

    @property
    def is_finite(self) -> bool:
        return self.lattice.is_finite

    @property
    def has_negation(self) -> bool:
        return True

    @property
    def has_conflation(self) -> bool:
        return True

    @property
    def true(self) -> IntervalValue:
        return IntervalValue(self.lattice.top, self.lattice.top)

    @property
    def false(self) -> IntervalValue:
        return IntervalValue(self.lattice.bottom, self.lattice.bottom)

    @property
    def under(self) -> IntervalValue:
        return IntervalValue(self.lattice.bottom, self.lattice.top)

    @property
    def over(self) -> IntervalValue:
        return IntervalValue(self.lattice.top, self.lattice.bottom)

    def contains(self, value: Any) -> bool:
        return isinstance(value, IntervalValue) and self.lattice.contains(value.lo) \
            and self.lattice.contains(value.hi)

    def values(self) -> Tuple[IntervalValue, ...]:
        elements = self.lattice.elements()
        return tuple(IntervalValue(lo, hi) for lo in elements for hi in elements)

    def _meet_t(self, a, b):
        return IntervalValue(self.lattice.meet(a.lo, b.lo), self.lattice.meet(a.hi, b.hi))

    def _join_t(self, a, b):
        return IntervalValue(self.lattice.join(a.lo, b.lo), self.lattice.join(a.hi, b.hi))

    def _consensus(self, a, b):
        return IntervalValue(self.lattice.meet(a.lo, b.lo), self.lattice.join(a.hi, b.hi))

    def _gullibility(self, a, b):
        return IntervalValue(self.lattice.join(a.lo, b.lo), self.lattice.meet(a.hi, b.hi))

    def _negate(self, a):
        return IntervalValue(self.lattice.invert(a.hi), self.lattice.invert(a.lo))

    def _conflate(self, a):
        return IntervalValue(a.hi, a.lo)

    def _leq_t(self, a, b) -> bool:
        return self.lattice.leq(a.lo, b.lo) and self.lattice.leq(a.hi, b.hi)

    def _leq_k(self, a, b) -> bool:
        return self.lattice.leq(a.lo, b.lo) and self.lattice.leq(b.hi, a.hi)

    def _parse_pair(self, opening, first, second):
        if opening != '[':
            raise BilatticeError(f"{self.name} values are written [lo,hi], got '{opening}{first},{second}'")
        return IntervalValue(self.lattice.parse(first), self.lattice.parse(second))


FOUR = FourBilattice()


def make_product_bilattice(first: BaseLattice, second: BaseLattice = None) -> ProductBilattice:
    """
    Builds L1 ⊙ L2. With a single lattice, builds L ⊙ L.
    """
    if isinstance(first, str):
        first = base_lattice(first)
    if second is None:
        second = first
    elif isinstance(second, str):
        second = base_lattice(second)
    return ProductBilattice(first, second)


def make_interval_bilattice(lattice: BaseLattice) -> IntervalBilattice:
    if isinstance(lattice, str):
        lattice = base_lattice(lattice)
    return IntervalBilattice(lattice)


def bilattice_from_name(name: str) -> BilatticeSpec:
    """
    Resolves a bilattice selector such as 'four', 'product:unit',
    'product:bool,chain3' or 'interval:bool'.

    Args:
        name (str): The selector.

    Returns:
        BilatticeSpec: The selected bilattice.
    """
    kind, _, argument = name.strip().partition(':')
    if kind == 'four' and not argument:
        return FOUR
    if kind == 'product' and argument:
        lattices = argument.split(',')
        if len(lattices) == 1:
            return make_product_bilattice(lattices[0])
        if len(lattices) == 2:
            return make_product_bilattice(lattices[0], lattices[1])
    if kind == 'interval' and argument:
        return make_interval_bilattice(argument)
    raise ConfigurationError(
        f"Unsupported bilattice '{name}' (expected four, product:L, product:L1,L2 or interval:L)")


def four_to_product(value: FourValue) -> ProductValue:
    """Embeds FOUR into the product over the two-point lattice."""
    return ProductValue(*value.bits)
