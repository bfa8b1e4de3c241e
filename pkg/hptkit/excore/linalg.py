"""Exact Gaussian elimination over the rationals on sparse vectors.

Vectors are dicts from hashable keys to nonzero fractions. Every routine takes the
key order explicitly, so pivots and therefore all derived bases are deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from hptkit.errors import SingularMapError
from hptkit.excore.maps import add_scaled


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a span.

    Each stored vector has coefficient 1 at its pivot and 0 at every other pivot;
    the pivot of a vector is its first nonzero key in ``order``.
    """

    def __init__(self, order: Iterable[Hashable]):
        self.position = {key: i for i, key in enumerate(order)}
        self.vectors: dict[Hashable, dict] = {}
        # combinations[p]: which added vectors (by tag) sum to vectors[p]
        self.combinations: dict[Hashable, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def reduce(self, vector: Mapping, tag: Hashable = None) -> tuple[dict, dict]:
        """Residual of ``vector`` modulo the span, with the combination that produced it."""
        residual = dict(vector)
        combination = {} if tag is None else {tag: Fraction(1)}
        for pivot, basis_vector in self.vectors.items():
            value = residual.get(pivot)
            if value:
                add_scaled(residual, -value, basis_vector)
                add_scaled(combination, -value, self.combinations[pivot])
        return residual, combination

    def add(self, vector: Mapping, tag: Hashable = None) -> bool:
        """Add ``vector`` to the span; return whether the rank grew."""
        residual, combination = self.reduce(vector, tag)
        if not residual:
            return False
        pivot = min(residual, key=self.position.__getitem__)
        scale = 1 / residual[pivot]
        residual = {key: value * scale for key, value in residual.items()}
        combination = {key: value * scale for key, value in combination.items()}
        for other, basis_vector in self.vectors.items():
            value = basis_vector.get(pivot)
            if value:
                add_scaled(basis_vector, -value, residual)
                add_scaled(self.combinations[other], -value, combination)
        self.vectors[pivot] = residual
        self.combinations[pivot] = combination
        return True

    def contains(self, vector: Mapping) -> bool:
        return not self.reduce(vector)[0]

    def pivots(self) -> list:
        return sorted(self.vectors, key=self.position.__getitem__)

    def basis(self) -> list[tuple[Hashable, dict]]:
        """``(pivot, vector)`` pairs in pivot order."""
        return [(pivot, dict(self.vectors[pivot])) for pivot in self.pivots()]


def rank(vectors: Iterable[Mapping], order: Iterable[Hashable]) -> int:
    basis = EchelonBasis(order)
    for vector in vectors:
        basis.add(vector)
    return basis.rank


@dataclass
class ColumnReduction:
    """Pivot and free columns of a matrix, with one kernel vector per free column.

    The kernel vector of a free column ``f`` is ``e_f`` minus the combination of
    earlier pivot columns that reproduces column ``f``.
    """

    pivots: list
    kernel: list[tuple[Hashable, dict]]


def reduce_columns(
    columns: Mapping[Hashable, Mapping],
    column_order: Sequence[Hashable],
    row_order: Iterable[Hashable],
) -> ColumnReduction:
    basis = EchelonBasis(row_order)
    pivots, kernel = [], []
    for column in column_order:
        if basis.add(columns.get(column, {}), tag=column):
            pivots.append(column)
        else:
            _, combination = basis.reduce(columns.get(column, {}), tag=column)
            kernel.append((column, combination))
    return ColumnReduction(pivots=pivots, kernel=kernel)


class Frame:
    """Coordinates with respect to a basis of a finite-dimensional space.

    ``vectors`` are tagged basis vectors over the keys in ``order``; constructing
    a frame from vectors that do not form a basis raises ``SingularMapError``.
    """

    def __init__(
        self, vectors: Sequence[tuple[Hashable, Mapping]], order: Sequence[Hashable], degree=None
    ):
        self.order = list(order)
        if len(vectors) != len(self.order):
            raise SingularMapError(
                f"{len(vectors)} vectors cannot form a basis of a space of dimension "
                f"{len(self.order)}",
                degree=degree,
            )
        basis = EchelonBasis(self.order)
        for tag, vector in vectors:
            if not basis.add(vector, tag=tag):
                raise SingularMapError("vectors are linearly dependent", degree=degree)
        # full rank: every key is a pivot and the stored vector is the unit vector there
        self.inverse = basis.combinations

    def coordinates(self, vector: Mapping) -> dict:
        result = {}
        for key, value in vector.items():
            add_scaled(result, value, self.inverse[key])
        return result

    def unit_coordinates(self, key: Hashable) -> dict:
        return dict(self.inverse[key])
