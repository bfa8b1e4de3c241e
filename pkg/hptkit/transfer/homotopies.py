"""Contracting homotopies of ``ℋ``, ``𝒫`` and of their free product ``𝒜`` on single words.

Each homotopy sends a word to ``None`` (zero) or to a single word with a sign.
"""

from typing import Optional

from hptkit.freealg.freeproduct import blocks
from hptkit.freealg.words import GenSymbol, Word

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU

Image = Optional[tuple[int, Word]]


def homotopy_H(word: Word) -> Image:
    """``h(τᵃ) = τᵃ⁻¹s`` for ``a ≥ 1``; zero on ``1`` and on ``τᵃs``."""
    if word and all(g is TAU for g in word):
        return 1, word[:-1] + (S,)
    return None


def homotopy_P(word: Word) -> Image:
    """``h(x²ᵏ⁺²) = -x²ᵏ⁺¹``; zero on ``1`` and on odd powers."""
    if word and len(word) % 2 == 0:
        return -1, word[:-1]
    return None


def homotopy_A(word: Word) -> Image:
    """The tensor homotopy of ``𝒜 = 𝒫 ⊗ Q``.

    ``Q`` is spanned by ``1`` and the words opening with ``s`` or ``τ``.

    On ``P₀·Y`` with ``Y`` opening an ``ℋ``-block this is ``(-1)^|P₀| P₀·h_ℋ(Y₁)·rest``;
    on pure ``𝒫`` words it is ``h_𝒫``.
    """
    split = blocks(word)
    if not split:
        return None
    lead: Word = ()
    if split[0][0] == "P":
        lead = split[0][1]
        split = split[1:]
    if not split:
        return homotopy_P(lead)
    first = split[0][1]
    image = homotopy_H(first)
    if image is None:
        return None
    sign, head = image
    if len(lead) % 2:
        sign = -sign
    return sign, lead + head + word[len(lead) + len(first) :]


HOMOTOPIES = {"H": homotopy_H, "P": homotopy_P, "A": homotopy_A}
