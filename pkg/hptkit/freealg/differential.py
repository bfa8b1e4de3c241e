"""The differential ``D`` and its twist ``Dˣ`` on the free product algebra."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from hptkit.constants import DIFFERENTIAL_CHECK_BOUND
from hptkit.errors import InvariantViolation
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import GenSymbol, Word, normal_form

logger = logging.getLogger(__name__)

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU

# D x = -x², D s = τ, D τ = 0
GENERATOR_DIFFERENTIAL: dict[GenSymbol, tuple[tuple[int, Word], ...]] = {
    X: ((-1, (X, X)),),
    S: ((1, (TAU,)),),
    TAU: (),
}


@lru_cache(maxsize=None)
def _differential_of_word(word: Word) -> tuple[tuple[Word, Fraction], ...]:
    """Graded Leibniz rule: ``D(w) = Σ (-1)^|prefix| prefix·D(g)·suffix``."""
    terms: dict[Word, Fraction] = {}
    sign = 1
    for i, g in enumerate(word):
        for coefficient, image in GENERATOR_DIFFERENTIAL[g]:
            normal = normal_form(word[:i] + image + word[i + 1 :])
            if normal is None:
                continue
            value = terms.get(normal, 0) + sign * coefficient
            if value:
                terms[normal] = Fraction(value)
            else:
                terms.pop(normal, None)
        if g.degree % 2:
            sign = -sign
    return tuple(terms.items())


def _differential(a: FreeElement) -> FreeElement:
    terms: dict[Word, Fraction] = {}
    for word, coefficient in a.terms():
        for image, value in _differential_of_word(word):
            updated = terms.get(image, 0) + coefficient * value
            if updated:
                terms[image] = updated
            else:
                terms.pop(image, None)
    return FreeElement(terms)


def apply_differential(a: FreeElement, check: bool = True) -> FreeElement:
    """``D(a)``, asserting ``D(D(a)) = 0`` for inputs of moderate length."""
    result = _differential(a)
    if check and a.max_length <= DIFFERENTIAL_CHECK_BOUND and not _differential(result).is_zero():
        raise InvariantViolation("D2", f"D∘D does not vanish on {a}")
    return result


def twist_differential(
    a: FreeElement, check: bool = True, bound: int = DIFFERENTIAL_CHECK_BOUND
) -> FreeElement:
    """``Dˣ(a) = D(a) + x·a - (-1)^|a| a·x``, taken on each homogeneous part."""
    result = _twist(a)
    if check and a.max_length <= bound and not _twist(result).is_zero():
        raise InvariantViolation("Dx2", f"Dˣ∘Dˣ does not vanish on {a}")
    return result


def _twist(a: FreeElement) -> FreeElement:
    return _differential(a) + commutator_with_x(a)


def commutator_with_x(a: FreeElement, bound: Optional[int] = None) -> FreeElement:
    """The inner derivation ``[x, a] = x·a - (-1)^|a| a·x``, optionally truncated."""
    x = FreeElement.generator(X)
    result = FreeElement.zero()
    for degree, part in a.homogeneous_parts().items():
        sign = -1 if degree % 2 else 1
        result = result + x.multiply(part, bound) - part.multiply(x, bound).scaled(sign)
    return result
