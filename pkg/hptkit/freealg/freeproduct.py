"""Splitting elements along the free product decomposition ``R ⊕ ⊕ Tⁿ(I𝒫, Iℋ) ⊕ Tⁿ(Iℋ, I𝒫)``."""

from dataclasses import dataclass, field
from fractions import Fraction

from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import Word


def blocks(word: Word) -> list[tuple[str, Word]]:
    """Maximal blocks of ``word`` alternating between the two factors, tagged ``P`` or ``H``."""
    result: list[tuple[str, Word]] = []
    for g in word:
        if result and result[-1][0] == g.block:
            result[-1] = (g.block, result[-1][1] + (g,))
        else:
            result.append((g.block, (g,)))
    return result


@dataclass(frozen=True)
class FreeProductDecomposition:
    """Scalar part plus components keyed by ``(number of blocks, factor of the first block)``."""

    scalar: Fraction
    components: dict[tuple[int, str], FreeElement] = field(default_factory=dict)

    def total(self) -> FreeElement:
        result = FreeElement.scalar(self.scalar)
        for component in self.components.values():
            result = result + component
        return result


def decompose_free_product(a: FreeElement) -> FreeProductDecomposition:
    grouped: dict[tuple[int, str], dict[Word, Fraction]] = {}
    for word, coefficient in a.terms():
        if not word:
            continue
        split = blocks(word)
        grouped.setdefault((len(split), split[0][0]), {})[word] = coefficient
    return FreeProductDecomposition(
        scalar=a.augmentation(),
        components={key: FreeElement(grouped[key]) for key in sorted(grouped)},
    )
