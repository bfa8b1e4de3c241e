"""Finitely generated free graded modules over the rationals."""

from typing import Iterable, Iterator, Mapping

from hptkit.errors import StructureError


class GradedModule:
    """A free graded module, given by an ordered tuple of basis labels per degree.

    Degrees without basis elements are not stored; labels are unique within a degree.
    """

    __slots__ = ("_degrees", "_index", "_hash")

    def __init__(self, degrees: Mapping[int, Iterable[str]] = None):
        self._degrees: dict[int, tuple[str, ...]] = {}
        self._index: dict[int, dict[str, int]] = {}
        for degree in sorted(degrees or {}):
            labels = tuple(degrees[degree])
            if not labels:
                continue
            if len(set(labels)) != len(labels):
                raise StructureError("duplicate basis label", degree=degree)
            self._degrees[int(degree)] = labels
            self._index[int(degree)] = {label: i for i, label in enumerate(labels)}
        self._hash = hash(tuple(self._degrees.items()))

    @classmethod
    def zero(cls) -> "GradedModule":
        return cls({})

    def degrees(self) -> list[int]:
        """Degrees carrying at least one basis element, in increasing order."""
        return list(self._degrees)

    def labels(self, degree: int) -> tuple[str, ...]:
        return self._degrees.get(degree, ())

    def dim(self, degree: int) -> int:
        return len(self._degrees.get(degree, ()))

    @property
    def total_dim(self) -> int:
        return sum(len(labels) for labels in self._degrees.values())

    def has(self, degree: int, label: str) -> bool:
        return label in self._index.get(degree, {})

    def position(self, degree: int, label: str) -> int:
        try:
            return self._index[degree][label]
        except KeyError as e:
            raise StructureError(f"no basis element {label!r}", degree=degree) from e

    def degree_of(self, label: str) -> int:
        """Degree of ``label``; only meaningful when labels are unique across degrees."""
        found = [degree for degree, index in self._index.items() if label in index]
        if not found:
            raise StructureError(f"unknown basis label {label!r}")
        if len(found) > 1:
            raise StructureError(f"basis label {label!r} occurs in several degrees")
        return found[0]

    def items(self) -> Iterator[tuple[int, str]]:
        """All (degree, label) pairs in degree then basis order."""
        for degree, labels in self._degrees.items():
            for label in labels:
                yield degree, label

    def restricted(self, labels: Iterable[str]) -> "GradedModule":
        """The submodule spanned by the given labels, keeping basis order."""
        keep = set(labels)
        return GradedModule(
            {
                degree: [label for label in self._degrees[degree] if label in keep]
                for degree in self._degrees
            }
        )

    def __eq__(self, other):
        if not isinstance(other, GradedModule):
            return NotImplemented
        return self._degrees == other._degrees

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{degree}: {list(labels)}" for degree, labels in self._degrees.items())
        return f"GradedModule({{{body}}})"
