"""Order-by-order verification of the identities of the completed algebra."""

import logging

from hptkit.constants import DEFAULT_ORDER
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import GenSymbol
from hptkit.hatseries.element import HatElement
from hptkit.hatseries.involution import T, phi_map
from hptkit.hatseries.series import U, V, alpha_series, beta_series, geometric_inverse
from hptkit.reports import CheckResult, Report, TraceStep

logger = logging.getLogger(__name__)

x, s, tau = (FreeElement.generator(g) for g in (GenSymbol.X, GenSymbol.S, GenSymbol.TAU))


def hat_identity(label: str, description: str, difference: HatElement, **details) -> CheckResult:
    """Passes when ``difference`` vanishes up to its truncation order."""
    return CheckResult(
        label=label,
        description=description,
        passed=difference.is_zero(),
        details={
            "order": difference.order,
            "residual": str(difference.body),
            **details,
        },
    )


def inspection_identities_check(order: int = DEFAULT_ORDER) -> Report:
    alpha, beta = alpha_series(order), beta_series(order)
    report = Report(subject=f"inspection (order {order})")
    report.add(
        hat_identity(
            "insp1",
            "(1+xs)⁻¹ = 1 - x(1+sx)⁻¹s",
            geometric_inverse(V, order) - (1 - x * geometric_inverse(U, order) * s),
        )
    )
    report.add(
        hat_identity(
            "insp2",
            "(1+sx)⁻¹ = 1 - s(1+xs)⁻¹x",
            geometric_inverse(U, order) - (1 - s * geometric_inverse(V, order) * x),
        )
    )
    report.add(hat_identity("insp3", "β + xαs = 1", beta + x * alpha * s - 1))
    report.add(hat_identity("insp4", "α + sβx = 1", alpha + s * beta * x - 1))
    report.add(hat_identity("alpha-unit", "(1+sx)α = α(1+sx) = 1", (1 + U) * alpha - alpha * (1 + U)))
    report.add(hat_identity("alpha-inverse", "(1+sx)α = 1", (1 + U) * alpha - 1))
    report.add(hat_identity("beta-inverse", "(1+xs)β = 1", (1 + V) * beta - 1))
    return report


def dalpha_dbeta_check(order: int = DEFAULT_ORDER) -> Report:
    alpha, beta = alpha_series(order), beta_series(order)
    report = Report(subject=f"differentials of α and β (order {order})")
    report.add(
        hat_identity(
            "dif1",
            "Dα = -α(τx + sx²)α",
            alpha.differential() + alpha * (tau * x + s * x * x) * alpha,
        )
    )
    report.add(
        hat_identity(
            "dif2",
            "Dβ = β(xτ + x²s)β",
            beta.differential() - beta * (x * tau + x * x * s) * beta,
        )
    )
    report.add(hat_identity("comm", "xα = βx", x * alpha - beta * x))
    report.add(hat_identity("comm2", "αs = sβ", alpha * s - s * beta))
    return report


def involution_check(order: int = DEFAULT_ORDER) -> Report:
    alpha, beta = alpha_series(order), beta_series(order)
    phi_s, phi_tau = phi_map(s, order), phi_map(tau, order)
    report = Report(subject=f"involution (order {order})")
    report.add(hat_identity("phi2:x", "φ(φ(x)) = x", phi_map(phi_map(x)) - x))
    report.add(hat_identity("phi2:s", "φ(φ(s)) = s", phi_map(phi_s) - s))
    report.add(hat_identity("phi2:t", "φ(φ(t)) = t", phi_map(phi_map(T, order)) - T))
    report.add(hat_identity("phi-s", "φ(s) = sβ", phi_s - s * beta))
    report.add(hat_identity("phi-alpha", "φ(α)α = 1", phi_map(alpha) * alpha - 1))
    report.add(hat_identity("phi-alpha-inverse", "φ(α) = 1 + sx", phi_map(alpha) - (1 + U)))
    report.add(hat_identity("phi-beta", "φ(β)β = 1", phi_map(beta) * beta - 1))
    report.add(hat_identity("phi-relation:s2", "φ(s)φ(s) = 0", phi_s * phi_s))
    report.add(
        hat_identity("phi-relation:s-tau", "φ(s)φ(τ) = φ(τ)φ(s)", phi_s * phi_tau - phi_tau * phi_s)
    )
    return report


def tower_check(order: int = DEFAULT_ORDER) -> Report:
    """Results at ``order`` truncate to the results at every smaller order."""
    report = Report(subject=f"truncation tower (order {order})")
    mismatches = []
    for lower in range(order):
        pairs = {
            "alpha": (alpha_series(order), alpha_series(lower)),
            "beta": (beta_series(order), beta_series(lower)),
            "phi(tau)": (phi_map(tau, order), phi_map(tau, lower)),
        }
        for name, (high, low) in pairs.items():
            if high.truncate(lower) != low:
                mismatches.append(f"{name} at order {lower}")
    report.add(
        CheckResult(
            label="tower",
            description=f"truncating order {order} results gives the lower-order results",
            passed=not mismatches,
            details={"failing": mismatches},
        )
    )
    return report


def structural_check(order: int = DEFAULT_ORDER) -> Report:
    """``φ∘D∘φ = Dˣ`` on the generators ``x``, ``s`` and ``t``, with traces."""
    report = Report(subject=f"structural (order {order})")
    for name, g in (("x", x), ("s", s), ("t", T)):
        trace = [TraceStep(rule="input", expression=str(g))]
        image = phi_map(g, order)
        trace.append(TraceStep(rule="φ", expression=str(image)))
        image = image.differential()
        trace.append(TraceStep(rule="D", expression=str(image)))
        image = phi_map(image)
        trace.append(TraceStep(rule="φ", expression=str(image)))
        target = HatElement.exact(g).twisted_differential()
        trace.append(TraceStep(rule="Dˣ", expression=str(target)))
        difference = image - target
        trace.append(TraceStep(rule="difference", expression=str(difference)))
        loss = 0 if image.order is None else order - image.order
        logger.debug("structural %s: order %s, loss %d", name, image.order, loss)
        report.add(
            CheckResult(
                label=f"structural:{name}",
                description=f"φDφ({name}) = Dˣ({name})",
                passed=difference.is_zero(),
                details={
                    "order": difference.order,
                    "valuation_loss": loss,
                    "exact": difference.order is None,
                    "residual": str(difference.body),
                },
                trace=trace,
            )
        )
    return report
