"""Elements of the completed algebra, known up to a word-length order."""

from fractions import Fraction
from typing import Optional, Union

from hptkit.freealg.differential import apply_differential, twist_differential
from hptkit.freealg.element import FreeElement


def meet(a: Optional[int], b: Optional[int]) -> Optional[int]:
    """Smaller of two truncation orders; ``None`` stands for an exact element."""
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class HatElement:
    """``body + O(order + 1)``: an element whose words longer than ``order`` are unknown.

    ``order=None`` marks an exact element. Sums and products are known up to the
    smaller order of their operands, since every element has nonnegative valuation.
    """

    __slots__ = ("body", "order")

    def __init__(self, body: FreeElement, order: Optional[int]):
        self.body = body if order is None else body.truncate(order)
        self.order = order

    @classmethod
    def exact(cls, body: Union[FreeElement, int, Fraction]) -> "HatElement":
        if not isinstance(body, FreeElement):
            body = FreeElement.scalar(body)
        return cls(body, None)

    @staticmethod
    def _coerce(other) -> Optional["HatElement"]:
        if isinstance(other, HatElement):
            return other
        if isinstance(other, (FreeElement, int, Fraction)):
            return HatElement.exact(other)
        return None

    @property
    def is_exact(self) -> bool:
        return self.order is None

    def truncate(self, order: int) -> "HatElement":
        return HatElement(self.body, meet(self.order, order))

    def __add__(self, other) -> "HatElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HatElement(self.body + other.body, meet(self.order, other.order))

    __radd__ = __add__

    def __sub__(self, other) -> "HatElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HatElement(self.body - other.body, meet(self.order, other.order))

    def __rsub__(self, other) -> "HatElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "HatElement":
        return HatElement(-self.body, self.order)

    def __mul__(self, other) -> "HatElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = meet(self.order, other.order)
        return HatElement(self.body.multiply(other.body, bound=order), order)

    def __rmul__(self, other) -> "HatElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int) -> "HatElement":
        result = HatElement.exact(1)
        for _ in range(exponent):
            result = result * self
        return result

    def differential(self) -> "HatElement":
        """``D`` term by term; ``D`` never shortens words, so the order is kept."""
        return HatElement(apply_differential(self.body), self.order)

    def twisted_differential(self) -> "HatElement":
        return HatElement(twist_differential(self.body), self.order)

    def is_zero(self) -> bool:
        """Zero as far as known, i.e. modulo words longer than the order."""
        return self.body.is_zero()

    def agrees_with(self, other) -> bool:
        return (self - other).is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.order == other.order and self.body == other.body

    __hash__ = None

    def __str__(self):
        if self.order is None:
            return str(self.body)
        return f"{self.body} + O({self.order + 1})"

    def __repr__(self):
        return f"HatElement({self})"
