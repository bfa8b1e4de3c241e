"""Passing between weak contractions, pseudocontractions and Hodge data."""

import logging

from pydantic import BaseModel

from hptkit.contra.structures import (
    Contraction,
    HodgeData,
    Pseudocontraction,
    WeakContraction,
)
from hptkit.contra.validate import bracket, idempotent_side_checks, validate_structure
from hptkit.errors import ContractViolation, InvariantViolation
from hptkit.excore.image import image_subcomplex
from hptkit.excore.maps import GradedMap
from hptkit.reports import Report, boolean_check

logger = logging.getLogger(__name__)


def _require_valid(s, kind: str, operation: str):
    report = validate_structure(s, kind)
    if not report.passed:
        raise ContractViolation(f"{operation} requires a valid {kind}", report=report)


def weak_to_pseudo(w: WeakContraction) -> Pseudocontraction:
    """The pseudocontraction ``(N, 1 - ∇π, h)`` of a weak contraction."""
    _require_valid(w, "weak", "weak_to_pseudo")
    return Pseudocontraction(N=w.N, tau=w.tau, h=w.h)


def pseudo_to_weak(p: Pseudocontraction) -> WeakContraction:
    """The weak contraction ``tN ⇄ N`` with ``t = 1 - τ``, ``π`` the corestriction of ``t``."""
    _require_valid(p, "pseudocontraction", "pseudo_to_weak")
    image = image_subcomplex(p.N, p.t)
    weak = WeakContraction(
        M=image.complex, N=p.N, pi=image.corestrict(p.t), nabla=image.inclusion, h=p.h
    )
    report = validate_structure(weak, "weak")
    if not report.passed:
        raise InvariantViolation("pseudo-weak", "image of 1 - τ is not a weak contraction", report)
    return weak


def contraction_to_hodge(c: WeakContraction) -> HodgeData:
    """Hodge data ``(N, ∇π, h)`` of a contraction."""
    _require_valid(c, "contraction", "contraction_to_hodge")
    return HodgeData(X=c.N, t=c.t, h=c.h)


class Classification(BaseModel):
    """Common verdict of the three equivalent characterisations, with their evidence.

    ``i``: the Hodge axioms for ``(h, 1 - τ)``; ``ii``: only idempotency and the
    annihilation conditions; ``iii``: the image ``tN`` with inclusion, corestricted
    ``t`` and ``h`` is a contraction.
    """

    verdict: bool
    conditions: dict[str, Report]

    def __str__(self):
        verdict = "abstract Hodge decomposition" if self.verdict else "not a Hodge decomposition"
        return f"{verdict}\n" + "\n".join(str(report) for report in self.conditions.values())


def compar_classify(p: Pseudocontraction) -> Classification:
    _require_valid(p, "pseudocontraction", "compar_classify")
    hodge = HodgeData.from_pseudo(p)
    conditions = {
        "i": validate_structure(hodge),
        "ii": Report(subject="idempotent-side", checks=idempotent_side_checks(hodge)),
        "iii": validate_structure(pseudo_to_weak(p), "contraction"),
    }
    verdicts = {name: report.passed for name, report in conditions.items()}
    logger.debug("classification verdicts: %s", verdicts)
    if len(set(verdicts.values())) != 1:
        raise InvariantViolation("compar", f"characterisations disagree: {verdicts}")
    return Classification(verdict=verdicts["i"], conditions=conditions)


def hodge_dependence_check(x: HodgeData) -> Report:
    """``ht = 0``, ``Dh = 1 - t`` and ``Dt = 0`` together force ``t² = t``."""
    d = x.X.d
    identity = GradedMap.identity(x.X.module)
    premises = {
        "ht": (x.h @ x.t).is_zero(),
        "Dh": bracket(d, x.h) == identity - x.t,
        "Dt": bracket(d, x.t).is_zero(),
    }
    conclusion = x.t @ x.t == x.t
    report = Report(subject="hodge-dependence")
    report.add(
        boolean_check(
            "ah-dep",
            "ht = 0, Dh = 1 - t, Dt = 0 imply t∘t = t",
            not all(premises.values()) or conclusion,
            premises=premises,
            conclusion=conclusion,
        )
    )
    return report
