"""Contraction-like structures on chain complexes."""

from dataclasses import dataclass
from typing import ClassVar, Union

from hptkit.errors import StructureError
from hptkit.excore.complexes import ChainComplex
from hptkit.excore.maps import GradedMap


def _require(f: GradedMap, name: str, source, target, degree: int):
    if f.source != source or f.target != target:
        raise StructureError(f"{name} has the wrong source or target")
    if f.degree != degree:
        raise StructureError(f"{name} must have degree {degree}, not {f.degree}")


@dataclass(frozen=True)
class Pseudocontraction:
    """A complex ``N`` with a chain endomorphism ``τ`` and a homotopy ``h``: ``Dh = τ``, ``h² = 0``."""

    N: ChainComplex
    tau: GradedMap
    h: GradedMap

    kind: ClassVar[str] = "pseudocontraction"

    def __post_init__(self):
        module = self.N.module
        _require(self.tau, "tau", module, module, 0)
        _require(self.h, "h", module, module, 1)

    @property
    def t(self) -> GradedMap:
        """``1 - τ``, the idempotent-candidate side of the pseudocontraction."""
        return GradedMap.identity(self.N.module) - self.tau


@dataclass(frozen=True)
class WeakContraction:
    """``π: N ⇄ M: ∇`` with ``Dh = 1 - ∇π`` and ``h² = 0``; ``π∇ = 1`` is not required."""

    M: ChainComplex
    N: ChainComplex
    pi: GradedMap
    nabla: GradedMap
    h: GradedMap

    kind: ClassVar[str] = "weak"

    def __post_init__(self):
        big, small = self.N.module, self.M.module
        _require(self.pi, "pi", big, small, 0)
        _require(self.nabla, "nabla", small, big, 0)
        _require(self.h, "h", big, big, 1)

    @property
    def t(self) -> GradedMap:
        return self.nabla @ self.pi

    @property
    def tau(self) -> GradedMap:
        return GradedMap.identity(self.N.module) - self.t


@dataclass(frozen=True)
class Contraction(WeakContraction):
    """A weak contraction with ``π∇ = 1`` and the side conditions ``πh = 0``, ``h∇ = 0``."""

    kind: ClassVar[str] = "contraction"

    @classmethod
    def from_weak(cls, w: WeakContraction) -> "Contraction":
        return cls(M=w.M, N=w.N, pi=w.pi, nabla=w.nabla, h=w.h)


@dataclass(frozen=True)
class HodgeData:
    """A complex ``X`` with an endomorphism ``t`` and a homotopy ``h``."""

    X: ChainComplex
    t: GradedMap
    h: GradedMap

    kind: ClassVar[str] = "hodge"

    def __post_init__(self):
        module = self.X.module
        _require(self.t, "t", module, module, 0)
        _require(self.h, "h", module, module, 1)

    @classmethod
    def from_pseudo(cls, p: Pseudocontraction) -> "HodgeData":
        return cls(X=p.N, t=p.t, h=p.h)

    def to_pseudo(self) -> Pseudocontraction:
        return Pseudocontraction(N=self.X, tau=GradedMap.identity(self.X.module) - self.t, h=self.h)


Structure = Union[Pseudocontraction, WeakContraction, Contraction, HodgeData]


def big_complex(s: Structure) -> ChainComplex:
    """The complex carrying the homotopy of ``s``."""
    return s.X if isinstance(s, HodgeData) else s.N
