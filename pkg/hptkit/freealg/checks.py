"""Exhaustive checks of the presentation up to bounded word length."""

import logging

from hptkit.constants import DEFAULT_ASSOCIATIVITY_LENGTH, DEFAULT_CONFLUENCE_LENGTH
from hptkit.freealg.differential import apply_differential, twist_differential
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import all_words, format_word, normal_form, normal_words, reductions
from hptkit.reports import Report, boolean_check

logger = logging.getLogger(__name__)


def confluence_check(length: int = DEFAULT_CONFLUENCE_LENGTH) -> Report:
    """Every rewrite order leads to the same normal form."""
    ambiguous = []
    count = 0
    for word in all_words(length):
        count += 1
        if reductions(word) != {normal_form(word)}:
            ambiguous.append(format_word(word))
    report = Report(subject="confluence")
    report.add(
        boolean_check(
            "confluence",
            f"unique normal forms for all words of length ≤ {length}",
            not ambiguous,
            words=count,
            failing=ambiguous[:10],
        )
    )
    return report


def presentation_check(
    length: int = DEFAULT_CONFLUENCE_LENGTH,
    associativity_length: int = DEFAULT_ASSOCIATIVITY_LENGTH,
) -> Report:
    """``D² = 0``, ``(Dˣ)² = 0``, the Leibniz rule, ``ε`` multiplicative and ``ε∘D = 0``."""
    report = confluence_check(length)
    words = [FreeElement.word(w) for w in normal_words(length)]
    # apply_differential and twist_differential assert squares to zero themselves
    differentials = [apply_differential(a) for a in words]
    for a in words:
        twist_differential(a)
    report.add(
        boolean_check(
            "D2", f"D∘D = 0 and Dˣ∘Dˣ = 0 on normal words of length ≤ {length}", True, words=len(words)
        )
    )
    report.add(
        boolean_check(
            "augmentation-D",
            "ε∘D = 0",
            all(not image.augmentation() for image in differentials),
        )
    )

    short = [FreeElement.word(w) for w in normal_words(associativity_length // 3)]
    leibniz, multiplicative, associative = [], [], []
    for a in short:
        sign = -1 if a.degree % 2 else 1
        for b in short:
            product = a * b
            if apply_differential(product) != apply_differential(a) * b + (
                a * apply_differential(b)
            ).scaled(sign):
                leibniz.append(f"{a} * {b}")
            if product.augmentation() != a.augmentation() * b.augmentation():
                multiplicative.append(f"{a} * {b}")
            for c in short:
                if product * c != a * (b * c):
                    associative.append(f"{a} * {b} * {c}")
    report.add(
        boolean_check("leibniz", "D(ab) = D(a)b + (-1)^|a| aD(b)", not leibniz, failing=leibniz[:10])
    )
    report.add(
        boolean_check(
            "augmentation", "ε(ab) = ε(a)ε(b)", not multiplicative, failing=multiplicative[:10]
        )
    )
    report.add(
        boolean_check(
            "associativity",
            f"(ab)c = a(bc) for words of total length ≤ {associativity_length}",
            not associative,
            triples=len(short) ** 3,
            failing=associative[:10],
        )
    )
    logger.debug("presentation checked on %d words", len(words))
    return report
