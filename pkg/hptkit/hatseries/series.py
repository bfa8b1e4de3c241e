"""The formal inverses ``α = (1 + sx)⁻¹`` and ``β = (1 + xs)⁻¹`` as truncated series."""

from functools import lru_cache

from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import GenSymbol
from hptkit.hatseries.element import HatElement

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU

U = FreeElement.word((S, X))
V = FreeElement.word((X, S))


def geometric_inverse(unit: FreeElement, order: int) -> HatElement:
    """``Σ (-w)ⁿ`` for ``w`` without constant term, up to words of length ``order``."""
    if unit.augmentation():
        raise ValueError("the series needs an element without constant term")
    term = FreeElement.one()
    total = FreeElement.zero()
    negated = -unit
    while not term.is_zero():
        total = total + term
        term = term.multiply(negated, bound=order)
    return HatElement(total, order)


@lru_cache(maxsize=None)
def alpha_series(order: int) -> HatElement:
    """``α = Σ (-1)ⁿ (sx)ⁿ`` over ``2n ≤ order``."""
    return geometric_inverse(U, order)


@lru_cache(maxsize=None)
def beta_series(order: int) -> HatElement:
    """``β = Σ (-1)ⁿ (xs)ⁿ`` over ``2n ≤ order``."""
    return geometric_inverse(V, order)
