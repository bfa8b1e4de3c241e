"""Finite models of the algebras: normal words up to a length bound, modulo longer words."""

import logging
from dataclasses import dataclass, field

from hptkit.errors import StructureError
from hptkit.excore.complexes import ChainComplex
from hptkit.excore.maps import GradedMap
from hptkit.excore.modules import GradedModule
from hptkit.freealg.differential import apply_differential, twist_differential
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import GenSymbol, Word, format_word, normal_words, word_degree

logger = logging.getLogger(__name__)

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU

ALPHABETS = {"H": (S, TAU), "P": (X,), "A": (X, S, TAU)}


@dataclass(frozen=True)
class TruncatedRealization:
    """The quotient of an algebra by its words longer than ``bound``.

    Longer words span a subcomplex since neither ``D`` nor ``Dˣ`` shortens words, so
    the induced differential squares to zero. ``flagged`` records, per basis label,
    the part of its image that the truncation dropped.
    """

    algebra: str
    bound: int
    twisted: bool
    complex: ChainComplex
    words: dict[str, Word] = field(repr=False)
    flagged: dict[str, str] = field(default_factory=dict, repr=False)

    def length(self, label: str) -> int:
        return len(self.words[label])

    def window(self, length: int) -> frozenset[str]:
        """Labels of words of length at most ``length``."""
        return frozenset(label for label, word in self.words.items() if len(word) <= length)

    def vector(self, a: FreeElement) -> dict[str, object]:
        """Coordinates of an element all of whose words fit the bound."""
        if a.max_length > self.bound:
            raise StructureError(f"{a} does not fit the truncation at length {self.bound}")
        return {format_word(word): value for word, value in a.terms()}

    def element(self, vector: dict) -> FreeElement:
        return FreeElement({self.words[label]: value for label, value in vector.items()})


def realize(algebra: str, bound: int, twisted: bool = False) -> TruncatedRealization:
    """Truncated realization of ``H``, ``P`` or ``A`` (with ``Dˣ`` when ``twisted``)."""
    if algebra not in ALPHABETS:
        raise StructureError(f"unknown algebra {algebra!r}")
    if twisted and algebra != "A":
        raise StructureError("only the free product carries the twisted differential")
    words = {format_word(word): word for word in normal_words(bound, ALPHABETS[algebra])}
    degrees: dict[int, list[str]] = {}
    for label, word in words.items():
        degrees.setdefault(word_degree(word), []).append(label)
    module = GradedModule(degrees)

    differential = twist_differential if twisted else apply_differential
    entries, flagged = [], {}
    for label, word in words.items():
        image = differential(FreeElement.word(word), check=False)
        kept = image.truncate(bound)
        if kept != image:
            flagged[label] = str(image - kept)
        entries.extend((label, format_word(w), value) for w, value in kept.terms())
    d = GradedMap.from_entries(module, module, -1, entries)
    logger.debug(
        "realized %s to length %d: %d words, %d flagged", algebra, bound, len(words), len(flagged)
    )
    return TruncatedRealization(
        algebra=algebra,
        bound=bound,
        twisted=twisted,
        complex=ChainComplex(module, d),
        words=words,
        flagged=flagged,
    )
