"""Elements of the free product algebra: finite rational combinations of normal words."""

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from hptkit.errors import StructureError
from hptkit.freealg.words import GenSymbol, Word, format_word, normal_form, word_degree, word_key

Scalar = Union[int, Fraction]


class FreeElement:
    """An immutable linear combination of words, kept in normal form.

    Words are reduced on construction, so equality of elements is equality in the
    algebra. Multiplication is concatenation followed by reduction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Word, Scalar]] = None):
        reduced: dict[Word, Fraction] = {}
        for word, coefficient in (terms or {}).items():
            if not coefficient:
                continue
            normal = normal_form(tuple(word))
            if normal is None:
                continue
            value = reduced.get(normal, 0) + Fraction(coefficient)
            if value:
                reduced[normal] = value
            else:
                reduced.pop(normal, None)
        self._terms = reduced
        self._hash = None

    @classmethod
    def _from_normal(cls, terms: dict[Word, Fraction]) -> "FreeElement":
        # terms are already normal and free of zeros
        element = cls.__new__(cls)
        element._terms = terms
        element._hash = None
        return element

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls._from_normal({})

    @classmethod
    def one(cls) -> "FreeElement":
        return cls.scalar(1)

    @classmethod
    def scalar(cls, value: Scalar) -> "FreeElement":
        return cls({(): value})

    @classmethod
    def word(cls, word: Iterable[GenSymbol], coefficient: Scalar = 1) -> "FreeElement":
        return cls({tuple(word): coefficient})

    @classmethod
    def generator(cls, symbol: GenSymbol) -> "FreeElement":
        return cls.word((symbol,))

    def terms(self) -> list[tuple[Word, Fraction]]:
        """Nonzero terms ordered by word length, then lexicographically."""
        return sorted(self._terms.items(), key=lambda item: word_key(item[0]))

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def words(self) -> list[Word]:
        return [word for word, _ in self.terms()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def max_length(self) -> int:
        """Length of the longest word; -1 for zero."""
        return max((len(word) for word in self._terms), default=-1)

    @property
    def min_length(self) -> Optional[int]:
        """Length of the shortest word (the valuation); ``None`` for zero."""
        return min((len(word) for word in self._terms), default=None)

    def augmentation(self) -> Fraction:
        """The constant term ``ε(a)``."""
        return self._terms.get((), Fraction(0))

    def truncate(self, length: int) -> "FreeElement":
        """Drop every word longer than ``length``."""
        return FreeElement._from_normal(
            {word: value for word, value in self._terms.items() if len(word) <= length}
        )

    def homogeneous_parts(self) -> dict[int, "FreeElement"]:
        parts: dict[int, dict] = {}
        for word, value in self._terms.items():
            parts.setdefault(word_degree(word), {})[word] = value
        return {degree: FreeElement._from_normal(parts[degree]) for degree in sorted(parts)}

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        degrees = {word_degree(word) for word in self._terms}
        if len(degrees) != 1:
            raise StructureError("degree of an inhomogeneous or zero element is undefined")
        return degrees.pop()

    def _add(self, other: "FreeElement", scale: Fraction) -> "FreeElement":
        terms = dict(self._terms)
        for word, value in other._terms.items():
            updated = terms.get(word, 0) + scale * value
            if updated:
                terms[word] = updated
            else:
                terms.pop(word, None)
        return FreeElement._from_normal(terms)

    @staticmethod
    def _coerce(other) -> Optional["FreeElement"]:
        if isinstance(other, FreeElement):
            return other
        if isinstance(other, (int, Fraction)):
            return FreeElement.scalar(other)
        return None

    def __add__(self, other) -> "FreeElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(other, Fraction(1))

    __radd__ = __add__

    def __sub__(self, other) -> "FreeElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(other, Fraction(-1))

    def __rsub__(self, other) -> "FreeElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._add(self, Fraction(-1))

    def __neg__(self) -> "FreeElement":
        return self.scaled(-1)

    def scaled(self, value: Scalar) -> "FreeElement":
        value = Fraction(value)
        if not value:
            return FreeElement.zero()
        return FreeElement._from_normal({w: value * c for w, c in self._terms.items()})

    def multiply(self, other: "FreeElement", bound: Optional[int] = None) -> "FreeElement":
        """Product, optionally dropping words longer than ``bound`` before reduction."""
        terms: dict[Word, Fraction] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                if bound is not None and len(left) + len(right) > bound:
                    continue
                word = normal_form(left + right)
                if word is None:
                    continue
                value = terms.get(word, 0) + a * b
                if value:
                    terms[word] = value
                else:
                    terms.pop(word, None)
        return FreeElement._from_normal(terms)

    def __mul__(self, other) -> "FreeElement":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if isinstance(other, FreeElement):
            return self.multiply(other)
        return NotImplemented

    def __rmul__(self, other) -> "FreeElement":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "FreeElement":
        if exponent < 0:
            raise ValueError("negative powers are not defined in the algebra")
        result = FreeElement.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        from hptkit.freealg.parser import format_element

        return format_element(self)

    def __repr__(self):
        return f"FreeElement({self})"


def generators() -> tuple[FreeElement, FreeElement, FreeElement]:
    """The generators ``x``, ``s`` and ``τ``."""
    return tuple(FreeElement.generator(g) for g in (GenSymbol.X, GenSymbol.S, GenSymbol.TAU))
