"""Operator identities satisfied by a perturbation kit."""

import logging
from typing import Optional

from hptkit.contra.structures import Structure, WeakContraction
from hptkit.contra.validate import bracket
from hptkit.errors import NonNilpotentError
from hptkit.excore.maps import GradedMap
from hptkit.perturb.kit import Perturbation, PerturbedKit, structure_operators
from hptkit.reports import Report, identity_check

logger = logging.getLogger(__name__)


def verify_kit_identities(kit: PerturbedKit, s: Structure, p: Perturbation) -> Report:
    """The inspection, differentiation and commutation identities of ``α`` and ``β``.

    ``τ`` is ``dh + hd`` for the structure's homotopy.
    """
    big, _, h = structure_operators(s)
    d, delta = big.d, p.delta
    alpha, beta = kit.alpha, kit.beta
    identity = GradedMap.identity(big.module)
    tau = bracket(d, h)
    d_del = d + delta

    report = Report(subject="kit-identities")
    report.add(identity_check("insp3", "β + ∂αh = 1", beta + delta @ alpha @ h - identity))
    report.add(identity_check("insp4", "α + hβ∂ = 1", alpha + h @ beta @ delta - identity))
    report.add(
        identity_check(
            "dif1",
            "dα - αd = -α(τ∂ + h∂²)α",
            d @ alpha - alpha @ d + alpha @ (tau @ delta + h @ delta @ delta) @ alpha,
        )
    )
    report.add(
        identity_check(
            "dif2",
            "dβ - βd = β(∂τ + ∂²h)β",
            d @ beta - beta @ d - beta @ (delta @ tau + delta @ delta @ h) @ beta,
        )
    )
    report.add(identity_check("comm", "∂α = β∂", delta @ alpha - beta @ delta))
    report.add(identity_check("comm2", "αh = hβ", alpha @ h - h @ beta))
    report.add(identity_check("hdel-square", "h_∂∘h_∂ = 0", kit.h_del @ kit.h_del))
    report.add(identity_check("tdel-chain", "(d + ∂)t_∂ = t_∂(d + ∂)", bracket(d_del, kit.t_del)))
    report.add(
        identity_check(
            "hdel-homotopy",
            "(d + ∂)h_∂ + h_∂(d + ∂) = 1 - t_∂",
            bracket(d_del, kit.h_del) - (identity - kit.t_del),
        )
    )
    if isinstance(s, WeakContraction):
        report.add(
            identity_check(
                "plainly", "αtβ = ∇_∂π_∂", kit.t_del - kit.nabla_del @ kit.pi_del
            )
        )
    return report


def power_series(
    left: GradedMap, operator: GradedMap, right: GradedMap, cap: Optional[int] = None
) -> tuple[GradedMap, int]:
    """``Σ_n left ∘ (-operator)^n ∘ right`` and the number of nonzero powers summed."""
    if cap is None:
        cap = operator.source.total_dim + 1
    negated = -operator
    term = GradedMap.identity(operator.source)
    total = left @ right
    for n in range(1, cap + 1):
        term = negated @ term
        if term.is_zero():
            return total, n
        total = total + left @ term @ right
    raise NonNilpotentError("perturbation series did not terminate", iterations=cap)


def series_formulas_check(
    kit: PerturbedKit, s: Structure, p: Perturbation, cap: Optional[int] = None
) -> Report:
    """Compare the kit with the explicit series in ``h∂`` and ``∂h``."""
    big, _, h = structure_operators(s)
    delta = p.delta
    identity = GradedMap.identity(big.module)
    h_delta, delta_h = h @ delta, delta @ h
    report = Report(subject="series-formulas")

    h_left, terms = power_series(identity, h_delta, h, cap)
    report.add(identity_check("series:h", "h_∂ = Σ(-h∂)ⁿh", h_left - kit.h_del, terms=terms))
    h_right, terms = power_series(h, delta_h, identity, cap)
    report.add(identity_check("series:h'", "h_∂ = Σh(-∂h)ⁿ", h_right - kit.h_del, terms=terms))

    if isinstance(s, WeakContraction):
        nabla, terms = power_series(identity, h_delta, s.nabla, cap)
        report.add(
            identity_check(
                "series:nabla", "∇_∂ = Σ(-h∂)ⁿ∇", nabla - kit.nabla_del, windowed=False, terms=terms
            )
        )
        pi, terms = power_series(s.pi, delta_h, identity, cap)
        report.add(identity_check("series:pi", "π_∂ = Σπ(-∂h)ⁿ", pi - kit.pi_del, terms=terms))
        dcal, terms = power_series(s.pi @ delta, h_delta, s.nabla, cap)
        report.add(
            identity_check(
                "series:D", "𝒟 = Σπ∂(-h∂)ⁿ∇", dcal - kit.Dcal, windowed=False, terms=terms
            )
        )
    logger.debug("series formulas checked for %s", s.kind)
    return report
