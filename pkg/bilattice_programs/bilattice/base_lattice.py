import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from typing import Any, Tuple

from bilattice_programs.core.exceptions import BilatticeError, ConfigurationError

_CHAIN_NAME = re.compile(r'chain(\d+)$')


def format_element(element: Any) -> str:
    """
    Renders a base lattice element the way it is written in program files.
    """
    if isinstance(element, bool):
        return 'true' if element else 'false'
    if isinstance(element, Decimal):
        return format(element.normalize(), 'f')
    return str(element)


class BaseLattice(ABC):
    """
    A complete chain with an order-reversing involution.

    Every base lattice offered here is totally ordered, so meet and join are
    min and max of the natural order of its elements.
    """

    name: str = ''

    @property
    @abstractmethod
    def bottom(self) -> Any:
        ...

    @property
    @abstractmethod
    def top(self) -> Any:
        ...

    @abstractmethod
    def contains(self, element: Any) -> bool:
        ...

    @abstractmethod
    def invert(self, element: Any) -> Any:
        """Order-reversing involution."""

    @abstractmethod
    def parse(self, text: str) -> Any:
        ...

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> Tuple[Any, ...]:
        raise BilatticeError(f'{self.name} has infinitely many elements')

    def leq(self, a: Any, b: Any) -> bool:
        return a <= b

    def meet(self, a: Any, b: Any) -> Any:
        return a if a <= b else b

    def join(self, a: Any, b: Any) -> Any:
        return b if a <= b else a

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class TwoPointLattice(BaseLattice):
    """The lattice false < true."""

    name: str = 'bool'

    @property
    def bottom(self) -> bool:
        return False

    @property
    def top(self) -> bool:
        return True

    def contains(self, element: Any) -> bool:
        return isinstance(element, bool)

    def invert(self, element: bool) -> bool:
        return not element

    def elements(self) -> Tuple[bool, ...]:
        return False, True

    def parse(self, text: str) -> bool:
        text = text.strip()
        if text in ('true', '1'):
            return True
        if text in ('false', '0'):
            return False
        raise BilatticeError(f"'{text}' is not an element of {self.name}")


@dataclass(frozen=True)
class FiniteChain(BaseLattice):
    """The chain 0 < 1 < ... < length."""

    length: int = 1

    def __post_init__(self):
        if self.length < 1:
            raise ConfigurationError(f'A finite chain needs at least two elements, got length {self.length}')

    @property
    def name(self) -> str:
        return f'chain{self.length}'

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.length

    def contains(self, element: Any) -> bool:
        return isinstance(element, int) and not isinstance(element, bool) and 0 <= element <= self.length

    def invert(self, element: int) -> int:
        return self.length - element

    def elements(self) -> Tuple[int, ...]:
        return tuple(range(self.length + 1))

    def parse(self, text: str) -> int:
        text = text.strip()
        if not text.isdigit() or int(text) > self.length:
            raise BilatticeError(f"'{text}' is not an element of {self.name}")
        return int(text)


@dataclass(frozen=True)
class UnitInterval(BaseLattice):
    """The real interval [0,1] with exact decimal coordinates."""

    name: str = 'unit'

    @property
    def bottom(self) -> Decimal:
        return Decimal(0)

    @property
    def top(self) -> Decimal:
        return Decimal(1)

    @property
    def is_finite(self) -> bool:
        return False

    def contains(self, element: Any) -> bool:
        return isinstance(element, Decimal) and element.is_finite() and 0 <= element <= 1

    def invert(self, element: Decimal) -> Decimal:
        return Decimal(1) - element

    def parse(self, text: str) -> Decimal:
        text = text.strip()
        try:
            element = Decimal(text)
        except InvalidOperation:
            raise BilatticeError(f"'{text}' is not an element of {self.name}")
        if not self.contains(element):
            raise BilatticeError(f"'{text}' is not an element of {self.name}")
        return element


def base_lattice(name: str) -> BaseLattice:
    """
    Looks up a built-in base lattice by name.

    Args:
        name (str): 'bool', 'unit' or 'chainN' with N >= 1.

    Returns:
        BaseLattice: The matching lattice.
    """
    name = name.strip()
    if name == 'bool':
        return TwoPointLattice()
    if name == 'unit':
        return UnitInterval()
    match = _CHAIN_NAME.match(name)
    if match:
        return FiniteChain(int(match.group(1)))
    raise ConfigurationError(f"Unsupported base lattice '{name}' (expected bool, unit or chainN)")
