"""Generators, words and the rewriting normal form of the free product algebra.

Words are tuples of generators. The relations ``s·s = 0`` and ``s·τ = τ·s`` are
oriented as rewrite rules ``s.s -> 0`` and ``s.tau -> tau.s``; a word is normal
when it contains neither ``s.s`` nor ``s.tau`` as a factor.
"""

from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional


class GenSymbol(Enum):
    """A generator with its name and homological degree."""

    X = "x"
    S = "s"
    TAU = "tau"

    @property
    def degree(self) -> int:
        return GENERATOR_DEGREES[self]

    @property
    def block(self) -> str:
        """``"P"`` for the generator of the polynomial factor, ``"H"`` for the other two."""
        return "P" if self is GenSymbol.X else "H"

    def __repr__(self):
        return self.value


GENERATOR_DEGREES = {GenSymbol.X: -1, GenSymbol.S: 1, GenSymbol.TAU: 0}
# order of generators when sorting words
GENERATOR_ORDER = {GenSymbol.X: 0, GenSymbol.S: 1, GenSymbol.TAU: 2}

Word = tuple[GenSymbol, ...]

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU
RULES = {(S, S): "s.s->0", (S, TAU): "s.tau->tau.s"}


def word_degree(word: Word) -> int:
    return sum(g.degree for g in word)


def word_key(word: Word) -> tuple:
    """Sort key: by length, then lexicographically in the order x < s < tau."""
    return (len(word), tuple(GENERATOR_ORDER[g] for g in word))


def format_word(word: Word) -> str:
    """``x^2.tau.s``; the empty word is ``1``."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] is word[i]:
            j += 1
        run = j - i
        parts.append(word[i].value if run == 1 else f"{word[i].value}^{run}")
        i = j
    return ".".join(parts)


def is_normal(word: Word) -> bool:
    return all((a, b) not in RULES for a, b in zip(word, word[1:]))


@lru_cache(maxsize=None)
def normal_form(word: Word) -> Optional[Word]:
    """The normal form of ``word``, or ``None`` when the word reduces to zero.

    Within each maximal block free of ``x`` all ``τ`` move to the front; a block with
    two or more ``s`` vanishes. No signs arise since ``τ`` has degree zero.
    """
    result: list[GenSymbol] = []
    taus = esses = 0
    for g in (*word, None):
        if g is TAU:
            taus += 1
        elif g is S:
            esses += 1
        else:
            if esses > 1:
                return None
            result.extend([TAU] * taus + [S] * esses)
            taus = esses = 0
            if g is not None:
                result.append(g)
    return tuple(result)


def rewrite_once(word: Word, position: int) -> Optional[Word]:
    """Apply the rule at ``position`` (which must be a redex); ``None`` means zero."""
    pair = (word[position], word[position + 1])
    if pair == (S, S):
        return None
    return word[:position] + (TAU, S) + word[position + 2 :]


def redexes(word: Word) -> list[int]:
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in RULES]


def normal_form_trace(word: Word) -> list[tuple[str, Optional[Word]]]:
    """Leftmost rewriting of ``word``, one ``(rule, result)`` entry per step."""
    steps = []
    current: Optional[Word] = word
    while current is not None:
        positions = redexes(current)
        if not positions:
            break
        position = positions[0]
        rule = RULES[(current[position], current[position + 1])]
        current = rewrite_once(current, position)
        steps.append((rule, current))
    return steps


def reductions(word: Word) -> set[Optional[Word]]:
    """Every irreducible result reachable from ``word`` by any order of rewrites."""
    seen: dict[Word, set] = {}

    def explore(w: Word) -> set:
        if w in seen:
            return seen[w]
        positions = redexes(w)
        if not positions:
            result = {w}
        else:
            result = set()
            for position in positions:
                rewritten = rewrite_once(w, position)
                result |= {None} if rewritten is None else explore(rewritten)
        seen[w] = result
        return result

    return explore(word)


def all_words(max_length: int, alphabet=(X, S, TAU)) -> Iterator[Word]:
    """Every word over ``alphabet`` of length at most ``max_length``, shortest first."""
    layer: list[Word] = [()]
    for _ in range(max_length + 1):
        yield from layer
        layer = [w + (g,) for w in layer for g in alphabet]


def normal_words(max_length: int, alphabet=(X, S, TAU)) -> Iterator[Word]:
    """Normal words of length at most ``max_length``, shortest first."""
    layer: list[Word] = [()]
    for _ in range(max_length + 1):
        yield from layer
        layer = [w + (g,) for w in layer for g in alphabet if not (w and (w[-1], g) in RULES)]
