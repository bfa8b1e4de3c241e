"""Graded linear maps between free graded modules."""

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from hptkit.errors import StructureError
from hptkit.excore.modules import GradedModule
from hptkit.excore.scalars import Scalar

# a vector in one degree: basis label -> nonzero coefficient
Vector = dict[str, Fraction]


def add_scaled(target: dict, scale: Fraction, vector: Mapping) -> dict:
    """In place ``target += scale * vector``, dropping entries that cancel."""
    if not scale:
        return target
    for key, value in vector.items():
        updated = target.get(key, 0) + scale * value
        if updated:
            target[key] = updated
        else:
            target.pop(key, None)
    return target


class GradedMap:
    """A linear map ``source -> target`` raising degrees by ``degree``.

    Entries are stored sparsely per source degree, column by column:
    ``blocks[j][column][row]`` is the coefficient of ``row`` (a basis element of
    ``target`` in degree ``j + degree``) in the image of ``column`` (a basis element
    of ``source`` in degree ``j``). Zero coefficients are never stored, so two maps
    are equal exactly when their stored entries agree.
    """

    __slots__ = ("source", "target", "degree", "_blocks")

    def __init__(
        self,
        source: GradedModule,
        target: GradedModule,
        degree: int,
        blocks: Mapping[int, Mapping[str, Mapping[str, Scalar]]] = None,
    ):
        self.source = source
        self.target = target
        self.degree = degree
        self._blocks: dict[int, dict[str, Vector]] = {}
        for j, columns in (blocks or {}).items():
            block = {}
            for column, entries in columns.items():
                if not source.has(j, column):
                    raise StructureError(f"column {column!r} not in source", degree=j)
                vector = {}
                for row, value in entries.items():
                    if not target.has(j + degree, row):
                        raise StructureError(f"row {row!r} not in target", degree=j + degree)
                    if value:
                        vector[row] = Fraction(value)
                if vector:
                    block[column] = vector
            if block:
                self._blocks[j] = block

    @classmethod
    def _from_clean(cls, source, target, degree, blocks) -> "GradedMap":
        # blocks already validated and free of zeros
        result = cls.__new__(cls)
        result.source = source
        result.target = target
        result.degree = degree
        result._blocks = blocks
        return result

    @classmethod
    def zero(cls, source: GradedModule, target: GradedModule, degree: int) -> "GradedMap":
        return cls._from_clean(source, target, degree, {})

    @classmethod
    def identity(cls, module: GradedModule) -> "GradedMap":
        return cls.scalar(module, 1)

    @classmethod
    def scalar(cls, module: GradedModule, value: Scalar) -> "GradedMap":
        value = Fraction(value)
        if not value:
            return cls.zero(module, module, 0)
        blocks = {
            j: {label: {label: value} for label in module.labels(j)} for j in module.degrees()
        }
        return cls._from_clean(module, module, 0, blocks)

    @classmethod
    def from_entries(
        cls,
        source: GradedModule,
        target: GradedModule,
        degree: int,
        entries: Iterable[tuple[str, str, Scalar]],
    ) -> "GradedMap":
        """Build a map from ``(column, row, value)`` triples.

        Column labels must be unique across the degrees of ``source``.
        """
        blocks: dict[int, dict[str, dict[str, Fraction]]] = {}
        for column, row, value in entries:
            j = source.degree_of(column)
            vector = blocks.setdefault(j, {}).setdefault(column, {})
            vector[row] = vector.get(row, 0) + Fraction(value)
        return cls(source, target, degree, blocks)

    def column(self, j: int, label: str) -> Vector:
        """Image of the basis element ``label`` of degree ``j`` (a fresh dict)."""
        return dict(self._blocks.get(j, {}).get(label, {}))

    def entry(self, j: int, row: str, column: str) -> Fraction:
        return self._blocks.get(j, {}).get(column, {}).get(row, Fraction(0))

    def columns(self, j: int) -> dict[str, Vector]:
        """Nonzero columns of the block at source degree ``j``."""
        return {label: dict(vector) for label, vector in self._blocks.get(j, {}).items()}

    def apply(self, j: int, vector: Mapping[str, Scalar]) -> Vector:
        """Image of a degree ``j`` vector of the source."""
        block = self._blocks.get(j, {})
        result: Vector = {}
        for label, value in vector.items():
            image = block.get(label)
            if image:
                add_scaled(result, Fraction(value), image)
        return result

    def nonzero_entries(self) -> Iterator[tuple[int, str, str, Fraction]]:
        """``(source degree, row, column, value)`` in degree then basis order."""
        for j in sorted(self._blocks):
            block = self._blocks[j]
            for column in self.source.labels(j):
                vector = block.get(column)
                if not vector:
                    continue
                for row in self.target.labels(j + self.degree):
                    if row in vector:
                        yield j, row, column, vector[row]

    def is_zero(self) -> bool:
        return not self._blocks

    def rank(self, j: int) -> int:
        """Rank of the block at source degree ``j``."""
        from hptkit.excore.linalg import EchelonBasis

        basis = EchelonBasis(self.target.labels(j + self.degree))
        for vector in self._blocks.get(j, {}).values():
            basis.add(vector)
        return basis.rank

    def restricted(self, columns: Iterable[str]) -> "GradedMap":
        """Zero out every column whose label is not in ``columns``."""
        keep = set(columns)
        blocks = {}
        for j, block in self._blocks.items():
            kept = {label: vector for label, vector in block.items() if label in keep}
            if kept:
                blocks[j] = kept
        return GradedMap._from_clean(self.source, self.target, self.degree, blocks)

    def filtered(self, predicate) -> "GradedMap":
        """Keep only entries ``(j, row, column, value)`` for which ``predicate`` holds."""
        blocks = {}
        for j, block in self._blocks.items():
            kept = {}
            for column, vector in block.items():
                entries = {
                    row: value
                    for row, value in vector.items()
                    if predicate(j, row, column, value)
                }
                if entries:
                    kept[column] = entries
            if kept:
                blocks[j] = kept
        return GradedMap._from_clean(self.source, self.target, self.degree, blocks)

    def _check_parallel(self, other: "GradedMap"):
        if (
            self.source != other.source
            or self.target != other.target
            or self.degree != other.degree
        ):
            raise StructureError(
                f"cannot add maps of degrees {self.degree} and {other.degree} "
                "or with different source/target"
            )

    def _combine(self, other: "GradedMap", scale: Fraction) -> "GradedMap":
        self._check_parallel(other)
        blocks = {j: {c: dict(v) for c, v in block.items()} for j, block in self._blocks.items()}
        for j, block in other._blocks.items():
            target_block = blocks.setdefault(j, {})
            for column, vector in block.items():
                combined = add_scaled(target_block.get(column, {}), scale, vector)
                if combined:
                    target_block[column] = combined
                else:
                    target_block.pop(column, None)
            if not target_block:
                del blocks[j]
        return GradedMap._from_clean(self.source, self.target, self.degree, blocks)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        return self._combine(other, Fraction(1))

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self._combine(other, Fraction(-1))

    def __neg__(self) -> "GradedMap":
        return self.scaled(-1)

    def scaled(self, value: Scalar) -> "GradedMap":
        value = Fraction(value)
        if not value:
            return GradedMap.zero(self.source, self.target, self.degree)
        blocks = {
            j: {c: {r: value * x for r, x in v.items()} for c, v in block.items()}
            for j, block in self._blocks.items()
        }
        return GradedMap._from_clean(self.source, self.target, self.degree, blocks)

    def __rmul__(self, value: Scalar) -> "GradedMap":
        if isinstance(value, (int, Fraction)):
            return self.scaled(value)
        return NotImplemented

    def __mul__(self, value: Scalar) -> "GradedMap":
        if isinstance(value, (int, Fraction)):
            return self.scaled(value)
        return NotImplemented

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composition ``self ∘ other``."""
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.source == other.source
            and self.target == other.target
            and self._blocks == other._blocks
        )

    __hash__ = None

    def __repr__(self):
        entries = sum(len(v) for block in self._blocks.values() for v in block.values())
        return f"GradedMap(degree={self.degree}, entries={entries})"


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """The composition ``f ∘ g`` of degree ``f.degree + g.degree``."""
    if g.target != f.source:
        degrees = sorted(set(g.target.degrees()) | set(f.source.degrees()))
        mismatch = next(j for j in degrees if g.target.labels(j) != f.source.labels(j))
        raise StructureError(
            "cannot compose: target of the right map is not the source of the left",
            degree=mismatch,
        )
    blocks = {}
    for j, g_block in g._blocks.items():
        f_block = f._blocks.get(j + g.degree)
        if not f_block:
            continue
        block = {}
        for column, middle in g_block.items():
            image: Vector = {}
            for label, value in middle.items():
                f_column = f_block.get(label)
                if f_column:
                    add_scaled(image, value, f_column)
            if image:
                block[column] = image
        if block:
            blocks[j] = block
    return GradedMap._from_clean(g.source, f.target, f.degree + g.degree, blocks)


def commutator(f: GradedMap, g: GradedMap) -> GradedMap:
    """Graded commutator ``f∘g - (-1)^(|f||g|) g∘f``."""
    sign = -1 if (f.degree * g.degree) % 2 else 1
    return f @ g - (g @ f).scaled(sign)


def power(f: GradedMap, n: int) -> GradedMap:
    if f.source != f.target:
        raise StructureError("only endomorphisms have powers")
    result = GradedMap.identity(f.source)
    for _ in range(n):
        result = f @ result
    return result

