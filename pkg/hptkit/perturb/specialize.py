"""Specialization of the free product algebra to operators: ``x ↦ ∂``, ``s ↦ h``, ``τ ↦ dh + hd``.

Under this assignment ``D`` becomes the graded commutator with ``d``, so identities
of the completed algebra turn into identities between perturbation operators.
"""

import logging
from typing import Optional

from hptkit.contra.structures import Structure
from hptkit.contra.validate import bracket
from hptkit.errors import NonNilpotentError, StructureError
from hptkit.excore.maps import GradedMap
from hptkit.freealg.differential import apply_differential
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import GenSymbol, format_word, normal_words
from hptkit.hatseries.series import U, V, alpha_series, beta_series
from hptkit.perturb.kit import Perturbation, PerturbedKit, structure_operators
from hptkit.reports import CheckResult, Report, identity_check

logger = logging.getLogger(__name__)

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU


def generator_operators(s: Structure, p: Perturbation) -> dict[GenSymbol, GradedMap]:
    big, _, h = structure_operators(s)
    return {X: p.delta, S: h, TAU: bracket(big.d, h)}


def evaluate(
    a: FreeElement, s: Structure, p: Perturbation, degree: Optional[int] = None
) -> GradedMap:
    """The operator of a homogeneous element; words compose left to right.

    ``degree`` is needed only to place the zero element.
    """
    operators = generator_operators(s, p)
    module = p.base.module
    parts = a.homogeneous_parts()
    if len(parts) > 1:
        raise StructureError(f"cannot evaluate the inhomogeneous element {a}")
    if not parts:
        return GradedMap.zero(module, module, degree or 0)
    result = None
    for word, coefficient in a.terms():
        operator = GradedMap.identity(module)
        for g in word:
            operator = operator @ operators[g]
        term = operator.scaled(coefficient)
        result = term if result is None else result + term
    return result


def nilpotency_index(u: GradedMap, cap: Optional[int] = None) -> int:
    """Smallest ``n`` with ``uⁿ = 0``."""
    if cap is None:
        cap = u.source.total_dim + 1
    power = GradedMap.identity(u.source)
    for n in range(1, cap + 1):
        power = power @ u
        if power.is_zero():
            return n
    raise NonNilpotentError("operator is not nilpotent", iterations=cap)


def specialization_order(s: Structure, p: Perturbation, cap: Optional[int] = None) -> int:
    """A truncation order at which ``α`` and ``β`` specialize to their exact operators."""
    _, _, h = structure_operators(s)
    index = max(nilpotency_index(h @ p.delta, cap), nilpotency_index(p.delta @ h, cap))
    return 2 * index


def specialization_check(
    kit: PerturbedKit,
    s: Structure,
    p: Perturbation,
    length: int = 4,
    cap: Optional[int] = None,
) -> Report:
    """The algebra identities of ``α`` and ``β``, evaluated on a concrete perturbation."""
    big, _, _ = structure_operators(s)
    order = specialization_order(s, p, cap)
    alpha, beta = alpha_series(order).body, beta_series(order).body
    x, sym_s, tau = (FreeElement.generator(g) for g in (X, S, TAU))

    def vanishes(label: str, description: str, element: FreeElement, degree: int) -> CheckResult:
        return identity_check(label, description, evaluate(element, s, p, degree), order=order)

    report = Report(subject="specialization")
    failing = []
    for word in normal_words(length):
        element = FreeElement.word(word)
        image = evaluate(apply_differential(element), s, p, element.degree - 1)
        if image != bracket(big.d, evaluate(element, s, p)):
            failing.append(format_word(word))
    report.add(
        CheckResult(
            label="spec:D",
            description=f"D specializes to [d, -] on words of length ≤ {length}",
            passed=not failing,
            details={"failing": failing},
        )
    )
    report.add(identity_check("spec:alpha", "α ↦ (1 + h∂)⁻¹", evaluate(alpha, s, p) - kit.alpha))
    report.add(identity_check("spec:beta", "β ↦ (1 + ∂h)⁻¹", evaluate(beta, s, p) - kit.beta))
    report.add(vanishes("spec:insp3", "β + xαs - 1 ↦ 0", beta + x * alpha * sym_s - 1, 0))
    report.add(vanishes("spec:insp4", "α + sβx - 1 ↦ 0", alpha + sym_s * beta * x - 1, 0))
    report.add(
        vanishes(
            "spec:dif1",
            "Dα + α(τx + sx²)α ↦ 0",
            apply_differential(alpha, check=False) + alpha * (tau * x + sym_s * x * x) * alpha,
            -1,
        )
    )
    report.add(
        vanishes(
            "spec:dif2",
            "Dβ - β(xτ + x²s)β ↦ 0",
            apply_differential(beta, check=False) - beta * (x * tau + x * x * sym_s) * beta,
            -1,
        )
    )
    report.add(vanishes("spec:comm", "xα - βx ↦ 0", x * alpha - beta * x, -1))
    report.add(vanishes("spec:comm2", "αs - sβ ↦ 0", alpha * sym_s - sym_s * beta, 1))
    report.add(
        identity_check(
            "spec:inverse",
            "(1 + sx)α - 1 and (1 + xs)β - 1 ↦ 0",
            evaluate((1 + U) * alpha - 1, s, p, 0) + evaluate((1 + V) * beta - 1, s, p, 0),
        )
    )
    logger.debug("specialized at order %d", order)
    return report
