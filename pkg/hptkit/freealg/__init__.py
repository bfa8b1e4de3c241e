"""The free graded algebras ℋ, 𝒫 and their free product 𝒜 with differentials."""

from hptkit.freealg.checks import confluence_check, presentation_check
from hptkit.freealg.differential import (
    apply_differential,
    commutator_with_x,
    twist_differential,
)
from hptkit.freealg.element import FreeElement, generators
from hptkit.freealg.freeproduct import FreeProductDecomposition, blocks, decompose_free_product
from hptkit.freealg.parser import format_element, parse_element
from hptkit.freealg.structure import (
    A0Shape,
    brute_force_A0_rank,
    check_A0_products,
    classify_A0_word,
    enumerate_A0_basis,
    factor_uvt,
)
from hptkit.freealg.words import (
    GenSymbol,
    Word,
    format_word,
    is_normal,
    normal_form,
    normal_form_trace,
    normal_words,
    reductions,
    word_degree,
)


def nf_multiply(a: FreeElement, b: FreeElement) -> FreeElement:
    """Product in normal form."""
    return a * b


__all__ = [
    "A0Shape",
    "FreeElement",
    "FreeProductDecomposition",
    "GenSymbol",
    "Word",
    "apply_differential",
    "blocks",
    "brute_force_A0_rank",
    "check_A0_products",
    "classify_A0_word",
    "commutator_with_x",
    "confluence_check",
    "decompose_free_product",
    "enumerate_A0_basis",
    "factor_uvt",
    "format_element",
    "format_word",
    "generators",
    "is_normal",
    "nf_multiply",
    "normal_form",
    "normal_form_trace",
    "normal_words",
    "parse_element",
    "presentation_check",
    "reductions",
    "word_degree",
]
