"""The involution ``φ`` of the completed algebra, computed order by order."""

from functools import lru_cache
from typing import Optional, Union

from hptkit.errors import StructureError
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import GenSymbol, Word
from hptkit.hatseries.element import HatElement, meet
from hptkit.hatseries.series import alpha_series, beta_series

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU

T = FreeElement.one() - FreeElement.generator(TAU)


def generator_image(symbol: GenSymbol, order: int) -> HatElement:
    """``φ(x) = -x``, ``φ(s) = αs`` and ``φ(τ) = 1 - αtβ`` with ``t = 1 - τ``."""
    if symbol is X:
        return HatElement.exact(-FreeElement.generator(X))
    alpha = alpha_series(order)
    if symbol is S:
        return alpha * FreeElement.generator(S)
    return 1 - alpha * T * beta_series(order)


@lru_cache(maxsize=None)
def _word_image(word: Word, order: int) -> HatElement:
    if not word:
        return HatElement.exact(1)
    return _word_image(word[:-1], order) * generator_image(word[-1], order)


def phi_map(a: Union[HatElement, FreeElement], order: Optional[int] = None) -> HatElement:
    """``φ(a)``, extended linearly and multiplicatively.

    The result is known up to the smaller of ``order`` and the order of ``a``. Exact
    inputs need an explicit ``order`` unless they only involve ``x``.
    """
    if isinstance(a, FreeElement):
        a = HatElement.exact(a)
    if a.order is None and all(g is X for word in a.body.words() for g in word):
        # φ(x) = -x keeps polynomials in x exact
        order = None
    else:
        order = meet(a.order, order)
        if order is None:
            raise StructureError("φ of an element involving s or τ needs a truncation order")
    order_used = 0 if order is None else order
    result = HatElement.exact(0) if order is None else HatElement(FreeElement.zero(), order)
    for word, coefficient in a.body.terms():
        result = result + _word_image(word, order_used) * HatElement.exact(coefficient)
    return result
