"""Chain complexes and exact inversion of endomorphisms."""

import logging
from typing import Optional

from hptkit.errors import (
    InternalConsistencyError,
    NonNilpotentError,
    StructureError,
)
from hptkit.excore.linalg import Frame
from hptkit.excore.maps import GradedMap
from hptkit.excore.modules import GradedModule
from hptkit.reports import Report, identity_check

logger = logging.getLogger(__name__)


class ChainComplex:
    """A graded module with a differential of degree -1.

    Construction checks shapes only; use ``validate_complex`` for ``d∘d = 0``.
    """

    __slots__ = ("module", "d")

    def __init__(self, module: GradedModule, d: Optional[GradedMap] = None):
        if d is None:
            d = GradedMap.zero(module, module, -1)
        if d.degree != -1:
            raise StructureError(f"a differential has degree -1, not {d.degree}")
        if d.source != module or d.target != module:
            raise StructureError("the differential must be an endomorphism of the module")
        self.module = module
        self.d = d

    def identity(self) -> GradedMap:
        return GradedMap.identity(self.module)

    def zero(self, degree: int) -> GradedMap:
        return GradedMap.zero(self.module, self.module, degree)

    def with_differential(self, d: GradedMap) -> "ChainComplex":
        return ChainComplex(self.module, d)

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self.module == other.module and self.d == other.d

    __hash__ = None

    def __repr__(self):
        return f"ChainComplex({self.module!r}, d={self.d!r})"


def validate_complex(c: ChainComplex, window=None) -> Report:
    """Report every nonzero entry of ``d∘d``, keyed by the source degree."""
    report = Report(subject="complex")
    report.add(identity_check("d2", "d∘d = 0", c.d @ c.d, window=window))
    return report


def _check_endomorphism(u: GradedMap):
    if u.degree != 0 or u.source != u.target:
        raise StructureError("expected a degree 0 endomorphism")


def _check_two_sided_inverse(u: GradedMap, inverse: GradedMap, label: str):
    identity = GradedMap.identity(u.source)
    one_plus_u = identity + u
    for side, product in (("left", inverse @ one_plus_u), ("right", one_plus_u @ inverse)):
        if product != identity:
            raise InternalConsistencyError(label, f"{side} inverse check failed")


def neumann_inverse(u: GradedMap, cap: Optional[int] = None) -> GradedMap:
    """``(1 + u)^-1 = Σ (-u)^n``, stopping at the first vanishing power.

    Raises ``NonNilpotentError`` if no power up to ``cap`` (default: total dimension
    plus one) vanishes; the result is checked to be a two-sided inverse.
    """
    _check_endomorphism(u)
    if cap is None:
        cap = u.source.total_dim + 1
    negated = -u
    term = GradedMap.identity(u.source)
    total = term
    for n in range(1, cap + 1):
        term = negated @ term
        if term.is_zero():
            logger.debug("Neumann series terminated after %d terms", n)
            _check_two_sided_inverse(u, total, "neumann")
            return total
        total = total + term
    raise NonNilpotentError("Neumann series did not terminate", iterations=cap)


def invert(u: GradedMap) -> GradedMap:
    """Exact inverse of a degree 0 endomorphism by Gauss-Jordan elimination, per degree."""
    _check_endomorphism(u)
    module = u.source
    blocks = {}
    for j in module.degrees():
        labels = module.labels(j)
        columns = [(label, u.column(j, label)) for label in labels]
        frame = Frame(columns, labels, degree=j)
        blocks[j] = {label: frame.unit_coordinates(label) for label in labels}
    inverse = GradedMap(module, module, 0, blocks)
    identity = GradedMap.identity(module)
    if inverse @ u != identity or u @ inverse != identity:
        raise InternalConsistencyError("invert", "Gauss-Jordan inverse failed its check")
    return inverse
