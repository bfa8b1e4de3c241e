"""The perturbation lemma for pseudocontractions, weak contractions and contractions."""

import logging
from typing import Iterable, Optional

from hptkit.contra.structures import Contraction, Pseudocontraction, WeakContraction
from hptkit.contra.validate import validate_structure
from hptkit.errors import ContractViolation, InvariantViolation
from hptkit.excore.complexes import ChainComplex
from hptkit.excore.image import image_subcomplex
from hptkit.excore.maps import GradedMap
from hptkit.perturb.kit import InverseMethod, Perturbation, PerturbedKit, build_kit
from hptkit.reports import CheckResult, Report, boolean_check, identity_check

logger = logging.getLogger(__name__)


def _require_valid(s, kind: str, operation: str, window=None):
    report = validate_structure(s, kind, window)
    if not report.passed:
        raise ContractViolation(f"{operation} requires a valid {kind}", report=report)


def _require_lemma(report: Report, label: str):
    if not report.passed:
        raise InvariantViolation(label, "perturbed data fails its axioms", report)


def perturb_pseudo(
    s: Pseudocontraction,
    p: Perturbation,
    cap: Optional[int] = None,
    inverse: InverseMethod = "neumann",
    kit: Optional[PerturbedKit] = None,
) -> Pseudocontraction:
    """``(N_∂, 1 - t_∂, h_∂)``; a pseudocontraction whenever ``1 + h∂`` is invertible.

    A ``kit`` already built for ``(s, p)`` is reused; otherwise one is built with ``inverse``.
    """
    _require_valid(s, "pseudocontraction", "perturb_pseudo")
    kit = kit or build_kit(s, p, cap, inverse)
    identity = GradedMap.identity(s.N.module)
    result = Pseudocontraction(N=p.perturbed, tau=identity - kit.t_del, h=kit.h_del)
    _require_lemma(validate_structure(result), "pseudolem")
    return result


def technical_checks(w: WeakContraction, p: Perturbation, kit: PerturbedKit, window=None):
    """``d_M + 𝒟`` squares to zero and ``π_∂``, ``∇_∂`` are chain maps after perturbing."""
    d_big = p.base.d + p.delta
    d_small = w.M.d + kit.Dcal
    return [
        identity_check("dcal-square", "(d_M + 𝒟)² = 0", d_small @ d_small, windowed=False),
        identity_check(
            "tech1", "π_∂(d + ∂) = (d_M + 𝒟)π_∂", kit.pi_del @ d_big - d_small @ kit.pi_del, window
        ),
        identity_check(
            "tech2",
            "(d + ∂)∇_∂ = ∇_∂(d_M + 𝒟)",
            d_big @ kit.nabla_del - kit.nabla_del @ d_small,
            windowed=False,
        ),
    ]


def _perturbed_weak(w: WeakContraction, p: Perturbation, kit: PerturbedKit, window, strict: bool):
    if strict:
        report = Report(subject="perturbed-small", checks=technical_checks(w, p, kit, window))
        _require_lemma(report, "tech")
    small = ChainComplex(w.M.module, w.M.d + kit.Dcal)
    return WeakContraction(
        M=small, N=p.perturbed, pi=kit.pi_del, nabla=kit.nabla_del, h=kit.h_del
    )


def perturb_weak(
    w: WeakContraction,
    p: Perturbation,
    cap: Optional[int] = None,
    window: Optional[Iterable[str]] = None,
    inverse: InverseMethod = "neumann",
    kit: Optional[PerturbedKit] = None,
) -> tuple[WeakContraction, GradedMap]:
    """The perturbed weak contraction ``M_𝒟 ⇄ N_∂`` together with ``𝒟``."""
    _require_valid(w, "weak", "perturb_weak", window)
    kit = kit or build_kit(w, p, cap, inverse)
    result = _perturbed_weak(w, p, kit, window, strict=True)
    _require_lemma(validate_structure(result, "weak", window), "pseudolem2")
    return result, kit.Dcal


def perturb_contraction(
    c: Contraction,
    p: Perturbation,
    cap: Optional[int] = None,
    window: Optional[Iterable[str]] = None,
    inverse: InverseMethod = "neumann",
    strict: bool = True,
    kit: Optional[PerturbedKit] = None,
) -> tuple[Contraction, GradedMap]:
    """The perturbed contraction and ``𝒟``.

    With ``strict=False`` neither the input nor the output is validated; callers
    that judge validity themselves (per window, say) use this.
    """
    if strict:
        _require_valid(c, "contraction", "perturb_contraction", window)
    kit = kit or build_kit(c, p, cap, inverse)
    result = Contraction.from_weak(_perturbed_weak(c, p, kit, window, strict))
    if strict:
        _require_lemma(validate_structure(result, "contraction", window), "olem")
    return result, kit.Dcal


def image_isomorphism_check(kit: PerturbedKit, w: WeakContraction, p: Perturbation) -> Report:
    """``∇_∂`` maps ``M_𝒟`` isomorphically onto the subcomplex ``t_∂N`` of ``N_∂``."""
    report = Report(subject="image-isomorphism")
    image = image_subcomplex(p.perturbed, kit.t_del)
    try:
        corestricted = image.corestrict(kit.nabla_del)
    except ContractViolation:
        report.add(boolean_check("tech3:image", "∇_∂ lands in t_∂N", False))
        return report
    report.add(boolean_check("tech3:image", "∇_∂ lands in t_∂N", True))
    deficient = {
        str(j): corestricted.rank(j)
        for j in set(w.M.module.degrees()) | set(image.module.degrees())
        if not (
            w.M.module.dim(j) == image.module.dim(j) == corestricted.rank(j)
        )
    }
    report.add(
        boolean_check("tech3:iso", "∇_∂: M_𝒟 -> t_∂N is bijective", not deficient, degrees=deficient)
    )
    d_small = w.M.d + kit.Dcal
    report.add(
        identity_check(
            "tech3",
            "∇_∂ is a chain map M_𝒟 -> (t_∂N, (d + ∂)|)",
            corestricted @ d_small - image.differential @ corestricted,
            windowed=False,
        )
    )
    return report


def atonce_contraction(c: Contraction, p: Perturbation, cap: Optional[int] = None) -> Contraction:
    """The contraction ``(t_∂N, (d + ∂)|) ⇄ N_∂`` read off the perturbed Hodge decomposition.

    It is compared with ``perturb_contraction`` through the isomorphism induced by ``∇_∂``.
    """
    _require_valid(c, "contraction", "atonce_contraction")
    kit = build_kit(c, p, cap)
    image = image_subcomplex(p.perturbed, kit.t_del)
    result = Contraction(
        M=image.complex,
        N=p.perturbed,
        pi=image.corestrict(kit.t_del),
        nabla=image.inclusion,
        h=kit.h_del,
    )
    report = validate_structure(result)
    iso = image.corestrict(kit.nabla_del)
    report.add(identity_check("atonce:pi", "φπ_∂ = π", iso @ kit.pi_del - result.pi))
    report.add(
        identity_check("atonce:nabla", "jφ = ∇_∂", result.nabla @ iso - kit.nabla_del, windowed=False)
    )
    _require_lemma(report, "atonce")
    logger.debug("contraction onto t_∂N has rank %d", image.module.total_dim)
    return result


def lemma_checks(w: WeakContraction, p: Perturbation, kit: PerturbedKit) -> list[CheckResult]:
    """Axioms of the perturbed weak data plus the technical chain-map identities."""
    result = _perturbed_weak(w, p, kit, None, strict=False)
    report = validate_structure(result, "weak")
    return report.checks + technical_checks(w, p, kit)
