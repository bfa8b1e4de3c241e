"""Perturbations and the operators of the perturbation lemma."""

import logging
from dataclasses import dataclass
from typing import Literal, Optional

from hptkit.contra.structures import HodgeData, Pseudocontraction, Structure, WeakContraction
from hptkit.errors import (
    InvariantViolation,
    InvertibilityError,
    NonNilpotentError,
    SingularMapError,
    StructureError,
)
from hptkit.excore.complexes import ChainComplex, invert, neumann_inverse
from hptkit.excore.maps import GradedMap
from hptkit.reports import Report, identity_check

logger = logging.getLogger(__name__)

InverseMethod = Literal["neumann", "exact"]


@dataclass(frozen=True)
class Perturbation:
    """A degree -1 map ``∂`` on a complex with ``(d + ∂)² = 0``."""

    base: ChainComplex
    delta: GradedMap

    def __post_init__(self):
        module = self.base.module
        if self.delta.source != module or self.delta.target != module:
            raise StructureError("a perturbation is an endomorphism of the base module")
        if self.delta.degree != -1:
            raise StructureError(f"a perturbation has degree -1, not {self.delta.degree}")

    @classmethod
    def zero(cls, base: ChainComplex) -> "Perturbation":
        return cls(base, base.zero(-1))

    @property
    def perturbed(self) -> ChainComplex:
        """``N_∂ = (N, d + ∂)``."""
        return self.base.with_differential(self.base.d + self.delta)

    def scaled(self, value) -> "Perturbation":
        """``λ∂``; again a perturbation only when ``λ = 1`` or ``∂² = 0``."""
        return Perturbation(self.base, self.delta.scaled(value))


def check_perturbation(p: Perturbation) -> Report:
    d = p.base.d + p.delta
    report = Report(subject="perturbation")
    report.add(identity_check("perturbation", "(d + ∂)² = 0", d @ d))
    return report


@dataclass(frozen=True)
class PerturbedKit:
    """``α = (1 + h∂)^-1``, ``β = (1 + ∂h)^-1`` and the perturbed data built from them.

    ``Dcal``, ``nabla_del`` and ``pi_del`` are present only for structures with an
    ``M`` side.
    """

    alpha: GradedMap
    beta: GradedMap
    t_del: GradedMap
    h_del: GradedMap
    Dcal: Optional[GradedMap] = None
    nabla_del: Optional[GradedMap] = None
    pi_del: Optional[GradedMap] = None
    inverse: InverseMethod = "neumann"


def structure_operators(s: Structure) -> tuple[ChainComplex, GradedMap, GradedMap]:
    """The big complex, ``t`` and ``h`` of a structure."""
    if isinstance(s, HodgeData):
        return s.X, s.t, s.h
    if isinstance(s, (Pseudocontraction, WeakContraction)):
        return s.N, s.t, s.h
    raise StructureError(f"not a structure: {type(s).__name__}")


def _inverse(u: GradedMap, operator: str, cap: Optional[int], method: InverseMethod):
    if method == "exact":
        try:
            return invert(GradedMap.identity(u.source) + u)
        except SingularMapError as e:
            raise InvertibilityError(str(e), iterations=0, operator=operator) from e
    try:
        return neumann_inverse(u, cap=cap)
    except NonNilpotentError as e:
        raise InvertibilityError(
            "Neumann series did not terminate", iterations=e.iterations, operator=operator
        ) from e


def build_kit(
    s: Structure, p: Perturbation, cap: Optional[int] = None, inverse: InverseMethod = "neumann"
) -> PerturbedKit:
    """All operators of the perturbation lemma, with the cross-identities asserted."""
    big, t, h = structure_operators(s)
    if p.base != big:
        raise StructureError("the perturbation lives on a different complex than the structure")
    delta = p.delta
    alpha = _inverse(h @ delta, "N + h∂", cap, inverse)
    beta = _inverse(delta @ h, "N + ∂h", cap, inverse)
    h_del = alpha @ h
    if h_del != h @ beta:
        raise InvariantViolation("comm2", "αh differs from hβ")
    kit = dict(alpha=alpha, beta=beta, t_del=alpha @ t @ beta, h_del=h_del, inverse=inverse)
    if isinstance(s, WeakContraction):
        nabla_del = alpha @ s.nabla
        pi_del = s.pi @ beta
        dcal = s.pi @ delta @ nabla_del
        if dcal != pi_del @ delta @ s.nabla:
            raise InvariantViolation("dcal", "π∂α∇ differs from πβ∂∇")
        kit.update(Dcal=dcal, nabla_del=nabla_del, pi_del=pi_del)
    logger.debug("built perturbation kit with %s inverses", inverse)
    return PerturbedKit(**kit)
