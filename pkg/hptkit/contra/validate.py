"""Axiom checks for pseudocontractions, weak contractions, contractions and Hodge data."""

from typing import Iterable, Optional

from hptkit.contra.structures import (
    Contraction,
    HodgeData,
    Pseudocontraction,
    Structure,
    WeakContraction,
)
from hptkit.errors import StructureError
from hptkit.excore.maps import GradedMap, commutator
from hptkit.reports import CheckResult, Report, boolean_check, identity_check

KINDS = ("pseudocontraction", "weak", "contraction", "hodge")


def bracket(d: GradedMap, f: GradedMap) -> GradedMap:
    """``Df = d∘f - (-1)^|f| f∘d``: ``dh + hd`` for a homotopy, ``dt - td`` for a chain map."""
    return commutator(d, f)


def pseudocontraction_checks(p: Pseudocontraction, window=None) -> list[CheckResult]:
    d = p.N.d
    return [
        identity_check("pc1", "dh + hd = τ", bracket(d, p.h) - p.tau, window),
        identity_check("pc2", "h∘h = 0", p.h @ p.h, window),
        identity_check("tau-chain", "dτ = τd", bracket(d, p.tau), window),
    ]


def _surjectivity(f: GradedMap, label: str, description: str) -> CheckResult:
    deficient = {
        str(j): f.rank(j) for j in f.target.degrees() if f.rank(j) != f.target.dim(j)
    }
    return boolean_check(label, description, not deficient, rank_deficient_degrees=deficient)


def _injectivity(f: GradedMap, label: str, description: str) -> CheckResult:
    deficient = {
        str(j): f.rank(j) for j in f.source.degrees() if f.rank(j) != f.source.dim(j)
    }
    return boolean_check(label, description, not deficient, rank_deficient_degrees=deficient)


def weak_checks(w: WeakContraction, window=None) -> list[CheckResult]:
    d, d_small = w.N.d, w.M.d
    identity = GradedMap.identity(w.N.module)
    return [
        identity_check("chain-pi", "π d_N = d_M π", w.pi @ d - d_small @ w.pi, window),
        identity_check(
            "chain-nabla", "d_N ∇ = ∇ d_M", d @ w.nabla - w.nabla @ d_small, windowed=False
        ),
        _surjectivity(w.pi, "pi-surjective", "π is surjective"),
        _injectivity(w.nabla, "nabla-injective", "∇ is injective"),
        identity_check("co1", "dh + hd = 1 - ∇π", bracket(d, w.h) - (identity - w.t), window),
        identity_check("side1", "h∘h = 0", w.h @ w.h, window),
    ]


def contraction_checks(c: WeakContraction, window=None) -> list[CheckResult]:
    return [
        *weak_checks(c, window),
        identity_check(
            "co0", "π∇ = 1_M", c.pi @ c.nabla - GradedMap.identity(c.M.module), windowed=False
        ),
        identity_check("side:pi", "πh = 0", c.pi @ c.h, window),
        identity_check("side:nabla", "h∇ = 0", c.h @ c.nabla, windowed=False),
    ]


def idempotent_side_checks(x: HodgeData, window=None) -> list[CheckResult]:
    return [
        identity_check("ah4", "t∘t = t", x.t @ x.t - x.t, window),
        identity_check("ah5:th", "t∘h = 0", x.t @ x.h, window),
        identity_check("ah5:ht", "h∘t = 0", x.h @ x.t, window),
    ]


def hodge_checks(x: HodgeData, window=None) -> list[CheckResult]:
    d = x.X.d
    identity = GradedMap.identity(x.X.module)
    return [
        identity_check("side1", "h∘h = 0", x.h @ x.h, window),
        identity_check("hodge-dh", "dh + hd = 1 - t", bracket(d, x.h) - (identity - x.t), window),
        identity_check("hodge-dt", "dt = td", bracket(d, x.t), window),
        *idempotent_side_checks(x, window),
    ]


def _as_kind(s: Structure, kind: str) -> Structure:
    if kind == s.kind:
        return s
    if kind == "hodge" and isinstance(s, Pseudocontraction):
        return HodgeData.from_pseudo(s)
    if kind == "pseudocontraction" and isinstance(s, HodgeData):
        return s.to_pseudo()
    if kind == "weak" and isinstance(s, WeakContraction):
        return WeakContraction(M=s.M, N=s.N, pi=s.pi, nabla=s.nabla, h=s.h)
    if kind == "contraction" and isinstance(s, WeakContraction):
        return Contraction.from_weak(s)
    raise StructureError(f"cannot validate a {s.kind} as a {kind}")


def validate_structure(
    s: Structure, kind: Optional[str] = None, window: Optional[Iterable[str]] = None
) -> Report:
    """Check every axiom of ``kind`` (default: the kind of ``s``) and report each by label.

    ``window`` restricts identities between maps out of the big complex to the
    given basis labels; rank conditions and maps out of the small complex are
    always checked in full.
    """
    kind = kind or s.kind
    if kind not in KINDS:
        raise StructureError(f"unknown structure kind {kind!r}")
    s = _as_kind(s, kind)
    window = None if window is None else frozenset(window)
    checks = {
        "pseudocontraction": pseudocontraction_checks,
        "weak": weak_checks,
        "contraction": contraction_checks,
        "hodge": hodge_checks,
    }[kind](s, window)
    return Report(subject=kind, checks=checks)
