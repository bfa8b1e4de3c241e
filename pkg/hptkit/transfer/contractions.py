"""Contractions of the truncated realizations onto the ground ring.

``π`` reads off the constant term, ``∇`` is the unit and ``h`` one of the word
homotopies. The twisted free product is handled by the perturbation lemma with
``∂ = [x, -]``.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from hptkit.constants import DEFAULT_BOUND, DEFAULT_PRODUCT_BOUND, TWISTED_WINDOW_SLACK
from hptkit.contra.structures import Contraction
from hptkit.contra.validate import validate_structure
from hptkit.errors import InvertibilityError
from hptkit.excore.complexes import ChainComplex
from hptkit.excore.maps import GradedMap
from hptkit.excore.modules import GradedModule
from hptkit.freealg.words import format_word
from hptkit.perturb.kit import Perturbation, check_perturbation
from hptkit.perturb.lemmas import perturb_contraction
from hptkit.reports import CheckResult, Report
from hptkit.transfer.homotopies import HOMOTOPIES
from hptkit.transfer.realization import TruncatedRealization, realize

logger = logging.getLogger(__name__)

GROUND = GradedModule({0: ["1"]})


@dataclass(frozen=True)
class TransferResult:
    """A contraction of a truncated realization with its validation report.

    ``window`` holds the labels on which the report is asserted; ``validity_length``
    is the largest word length up to which every axiom holds.
    """

    realization: TruncatedRealization
    contraction: Contraction
    window: frozenset[str]
    report: Report
    validity_length: int
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.report.passed


def standard_contraction(realization: TruncatedRealization) -> Contraction:
    """``(R, 0) ⇄ realization`` with ``π = ε``, ``∇ = 1`` and the word homotopy."""
    module = realization.complex.module
    homotopy = HOMOTOPIES[realization.algebra]
    entries = []
    for label, word in realization.words.items():
        image = homotopy(word)
        if image is not None:
            sign, target = image
            entries.append((label, format_word(target), sign))
    return Contraction(
        M=ChainComplex(GROUND),
        N=realization.complex,
        pi=GradedMap.from_entries(module, GROUND, 0, [("1", "1", 1)]),
        nabla=GradedMap.from_entries(GROUND, module, 0, [("1", "1", 1)]),
        h=GradedMap.from_entries(module, module, 1, entries),
    )


def length_restricted(report: Report, realization: TruncatedRealization, length: int) -> Report:
    """Keep only violations whose row and column are words of length at most ``length``."""

    def short(label: str) -> bool:
        word = realization.words.get(label)
        return word is None or len(word) <= length

    checks = []
    for check in report.checks:
        if check.violations:
            violations = [v for v in check.violations if short(v.row) and short(v.column)]
            check = check.model_copy(update={"violations": violations, "passed": not violations})
        checks.append(check)
    return Report(subject=f"{report.subject} (length ≤ {length})", checks=checks)


def validity_length(report: Report, realization: TruncatedRealization) -> int:
    """Largest length whose restricted report passes; -1 if none does."""
    valid = -1
    for length in range(realization.bound + 1):
        if not length_restricted(report, realization, length).passed:
            break
        valid = length
    return valid


def _transfer(algebra: str, bound: int) -> TransferResult:
    realization = realize(algebra, bound)
    contraction = standard_contraction(realization)
    # the top length loses part of its differential to the truncation
    window = realization.window(bound - 1)
    full = validate_structure(contraction, "contraction")
    report = full.restricted(window)
    report.subject = f"contraction {algebra} (bound {bound})"
    logger.info("transfer %s: %d words, window %d", algebra, len(realization.words), len(window))
    return TransferResult(
        realization=realization,
        contraction=contraction,
        window=window,
        report=report,
        validity_length=validity_length(full, realization),
        details={"flagged": len(realization.flagged)},
    )


def contraction_H(bound: int = DEFAULT_BOUND) -> TransferResult:
    return _transfer("H", bound)


def contraction_P(bound: int = DEFAULT_BOUND) -> TransferResult:
    return _transfer("P", bound)


def contraction_A(bound: int = DEFAULT_PRODUCT_BOUND) -> TransferResult:
    return _transfer("A", bound)


def commutator_perturbation(realization: TruncatedRealization) -> Perturbation:
    """``∂ = [x, -]``, read off as the difference of the twisted and plain realizations."""
    twisted = realize(realization.algebra, realization.bound, twisted=True)
    base = realization.complex
    return Perturbation(base, twisted.complex.d - base.d)


def contraction_A_twisted(
    bound: int = DEFAULT_PRODUCT_BOUND, cap: Optional[int] = None, required: Optional[int] = None
) -> TransferResult:
    """The perturbed contraction of ``(𝒜, Dˣ)`` onto ``R``, validated length by length.

    ``h∂`` acts by -2 on odd powers of ``x``, so the Neumann series cannot terminate
    there. When it exceeds ``cap`` (default ``bound + 2``) the inverses are computed by
    exact elimination and a ``nontermination`` entry is added to the report. If the
    elimination fails too, ``InvertibilityError`` propagates.

    The report is asserted on words of length at most ``required`` (default
    ``bound - TWISTED_WINDOW_SLACK``) and fails when the validity length falls short of it.
    """
    cap = bound + 2 if cap is None else cap
    required = max(bound - TWISTED_WINDOW_SLACK, 0) if required is None else required
    base = contraction_A(bound)
    realization = base.realization
    p = commutator_perturbation(realization)
    details: dict[str, Any] = {"cap": cap, "inverse": "neumann"}
    nontermination = None
    try:
        perturbed, dcal = perturb_contraction(base.contraction, p, cap, strict=False)
    except InvertibilityError as e:
        logger.warning("%s; certifying by exact elimination", e)
        details["inverse"] = "exact"
        nontermination = CheckResult(
            label="nontermination",
            description=f"Neumann series for {e.operator} exceeded the cap; inverted exactly",
            passed=True,
            details={"iterations": e.iterations},
        )
        perturbed, dcal = perturb_contraction(
            base.contraction, p, cap, inverse="exact", strict=False
        )

    full = validate_structure(perturbed, "contraction")
    full.merge(check_perturbation(p))
    valid = validity_length(full, realization)
    per_length = {
        str(length): length_restricted(full, realization, length).passed
        for length in range(bound + 1)
    }
    details.update(
        per_length=per_length, small_differential=dcal.is_zero(), required_length=required
    )
    report = length_restricted(full, realization, required)
    report.subject = f"contraction Ax (bound {bound})"
    if nontermination is not None:
        report.add(nontermination)
    report.add(
        CheckResult(
            label="validity-window",
            description=f"the axioms hold on every word of length ≤ {required}",
            passed=valid >= required,
            details={"validity_length": valid, "required_length": required},
        )
    )
    return TransferResult(
        realization=realization,
        contraction=perturbed,
        window=realization.window(required),
        report=report,
        validity_length=valid,
        details=details,
    )


TRANSFERS = {
    "H": contraction_H,
    "P": contraction_P,
    "A": contraction_A,
    "Ax": contraction_A_twisted,
}
