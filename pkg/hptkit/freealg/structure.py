"""Structure of the degree zero part ``𝒜₀``: its monomial basis and products.

Every normal word of degree zero is a monomial in ``τ``, a monomial ``p`` in ``u = sx``
and ``τ``, a monomial ``q`` in ``v = xs`` and ``τ``, or a product ``pq``.
"""

import logging
import re
from enum import Enum
from typing import Optional

from hptkit.constants import DEFAULT_TAU_POWER
from hptkit.errors import InvariantViolation, StructureError
from hptkit.excore.linalg import EchelonBasis
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import (
    GenSymbol,
    Word,
    all_words,
    format_word,
    normal_form,
    normal_words,
    word_degree,
    word_key,
)
from hptkit.reports import Report, boolean_check

logger = logging.getLogger(__name__)

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU


class A0Shape(Enum):
    TAU = "tau-monomial"
    P = "p(u,tau)"
    Q = "q(v,tau)"
    PQ = "p(u,tau)q(v,tau)"


SHAPE_PATTERNS = [
    (A0Shape.TAU, re.compile(r"^$")),
    (A0Shape.P, re.compile(r"^(sx)+$")),
    (A0Shape.Q, re.compile(r"^(xs)+$")),
    (A0Shape.PQ, re.compile(r"^(sx)+(xs)+$")),
]

# shapes of products that are juxtapositions; the remaining pairs multiply to zero
PRODUCT_SHAPES = {
    (A0Shape.P, A0Shape.P): A0Shape.P,
    (A0Shape.P, A0Shape.Q): A0Shape.PQ,
    (A0Shape.P, A0Shape.PQ): A0Shape.PQ,
    (A0Shape.Q, A0Shape.Q): A0Shape.Q,
    (A0Shape.PQ, A0Shape.Q): A0Shape.PQ,
}
ZERO_PRODUCTS = {
    (A0Shape.Q, A0Shape.P),
    (A0Shape.Q, A0Shape.PQ),
    (A0Shape.PQ, A0Shape.P),
    (A0Shape.PQ, A0Shape.PQ),
}


def classify_A0_word(word: Word) -> Optional[A0Shape]:
    """Shape of a normal degree zero word, read off its letters with ``τ`` removed."""
    skeleton = "".join(g.value for g in word if g is not TAU)
    for shape, pattern in SHAPE_PATTERNS:
        if pattern.match(skeleton):
            return shape
    return None


def brute_force_A0_rank(length: int) -> int:
    """Rank of the reduction map on all degree zero words of length at most ``length``."""
    images = []
    for word in all_words(length):
        if word_degree(word) != 0:
            continue
        normal = normal_form(word)
        if normal is not None:
            images.append({normal: 1})
    order = sorted({next(iter(image)) for image in images}, key=word_key)
    basis = EchelonBasis(order)
    for image in images:
        basis.add(image)
    return basis.rank


def enumerate_A0_basis(length: int) -> list[Word]:
    """Normal degree zero words of length at most ``length``, each checked for its shape."""
    basis = [word for word in normal_words(length) if word_degree(word) == 0]
    for word in basis:
        if classify_A0_word(word) is None:
            raise InvariantViolation("A0-shape", f"{format_word(word)} has none of the four shapes")
    expected = brute_force_A0_rank(length)
    if len(basis) != expected:
        raise InvariantViolation(
            "A0-rank", f"{len(basis)} normal words but the reduction map has rank {expected}"
        )
    logger.debug("degree zero basis up to length %d has %d words", length, len(basis))
    return basis


def factor_uvt(word: Word) -> list[str]:
    """Write a degree zero basis word as a product of ``u``, ``v`` and ``tau``."""
    factors = []
    i = 0
    while i < len(word):
        g = word[i]
        if g is TAU:
            factors.append("tau")
            i += 1
        elif g is S and i + 1 < len(word) and word[i + 1] is X:
            factors.append("u")
            i += 2
        elif g is X:
            j = i + 1
            while j < len(word) and word[j] is TAU:
                j += 1
            if j == len(word) or word[j] is not S:
                raise StructureError(f"{format_word(word)} is not a monomial in u, v and tau")
            # x·tau^k·s is the normal form of v·tau^k
            factors.append("v")
            factors.extend(["tau"] * (j - i - 1))
            i = j + 1
        else:
            raise StructureError(f"{format_word(word)} is not a monomial in u, v and tau")
    return factors


FACTORS = {
    "u": FreeElement.word((S, X)),
    "v": FreeElement.word((X, S)),
    "tau": FreeElement.word((TAU,)),
}


def product_of_factors(factors: list[str]) -> FreeElement:
    result = FreeElement.one()
    for name in factors:
        result = result * FACTORS[name]
    return result


def _is_single_word(a: FreeElement) -> Optional[Word]:
    terms = a.terms()
    if len(terms) == 1 and terms[0][1] == 1:
        return terms[0][0]
    return None


def check_A0_products(length: int, tau_power: int = DEFAULT_TAU_POWER) -> Report:
    """Juxtaposition and vanishing of products of basis monomials up to ``length``."""
    basis = enumerate_A0_basis(length)
    shapes = {word: classify_A0_word(word) for word in basis}
    juxtaposed, vanishing = [], []
    juxtaposed_count = vanishing_count = 0
    for left in basis:
        for right in basis:
            pair = (shapes[left], shapes[right])
            product = FreeElement.word(left) * FreeElement.word(right)
            label = f"{format_word(left)} * {format_word(right)}"
            if pair in ZERO_PRODUCTS:
                vanishing_count += 1
                if not product.is_zero():
                    vanishing.append(label)
                continue
            if A0Shape.TAU in pair:
                other = pair[1] if pair[0] is A0Shape.TAU else pair[0]
                expected = other
            else:
                expected = PRODUCT_SHAPES[pair]
            juxtaposed_count += 1
            word = _is_single_word(product)
            if (
                word is None
                or word != normal_form(left + right)
                or classify_A0_word(word) != expected
            ):
                juxtaposed.append(label)

    report = Report(subject="A0-structure")
    report.add(
        boolean_check(
            "A0-basis",
            "normal degree zero words form a basis of the four shapes",
            True,
            length=length,
            size=len(basis),
            shapes={shape.value: sum(1 for s in shapes.values() if s is shape) for shape in A0Shape},
        )
    )
    report.add(
        boolean_check(
            "juxtaposition",
            "products τ·w, w·τ, p·p, p·q, p·pq, q·q, pq·q are juxtapositions",
            not juxtaposed,
            products=juxtaposed_count,
            failing=juxtaposed[:10],
        )
    )
    report.add(
        boolean_check(
            "zero-products",
            "products q·p, q·pq, pq·p, pq·pq vanish",
            not vanishing,
            products=vanishing_count,
            failing=vanishing[:10],
        )
    )
    u, v, tau = FACTORS["u"], FACTORS["v"], FACTORS["tau"]
    nonzero = [j for j in range(tau_power + 1) if not (v * tau**j * u).is_zero()]
    report.add(
        boolean_check("v-tau-u", f"v·τʲ·u = 0 for j ≤ {tau_power}", not nonzero, failing=nonzero)
    )
    unfactored = [
        format_word(word)
        for word in basis
        if product_of_factors(factor_uvt(word)) != FreeElement.word(word)
    ]
    report.add(
        boolean_check(
            "v-gen", "every basis word is a product of u, v and τ", not unfactored, failing=unfactored
        )
    )
    return report
