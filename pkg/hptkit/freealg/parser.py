"""
Text syntax of free product elements.

Elements are written as signed sums of terms ``coeff*monomial``, where a monomial is
a ``.``-separated product of generators with optional powers, e.g.
``2*x^2.s - 1/2*tau + 1``. The printer produces the same syntax.
"""

from fractions import Fraction

import lark

from hptkit.errors import InputError
from hptkit.freealg.element import FreeElement
from hptkit.freealg.words import GenSymbol, format_word

"""
Lark EBNF grammar for element expressions.
"""
parser = lark.Lark(
    r"""
    %import common.INT
    %import common.WS
    %ignore WS

    start: sum

    sum: lead (SIGN term)*
    lead: SIGN? term

    term: coeff "*" monomial -> scaled
        | coeff -> scalar
        | monomial -> bare

    coeff: INT ("/" INT)?
    monomial: power ("." power)*
    power: GEN ("^" INT)?

    SIGN: "+" | "-"
    GEN: "tau" | "x" | "s"
    """,
    parser="lalr",
)


class ElementTransformer(lark.Transformer):
    """Builds a ``FreeElement`` from an element parse tree."""

    def start(self, items):
        return items[0]

    def sum(self, items):
        total = items[0]
        for sign, term in zip(items[1::2], items[2::2]):
            total = total + term if sign == "+" else total - term
        return total

    def lead(self, items):
        if len(items) == 2:
            return -items[1] if items[0] == "-" else items[1]
        return items[0]

    def scaled(self, items):
        return items[1].scaled(items[0])

    def scalar(self, items):
        return FreeElement.scalar(items[0])

    def bare(self, items):
        return items[0]

    def coeff(self, items):
        denominator = int(items[1]) if len(items) > 1 else 1
        if denominator == 0:
            raise InputError(
                "zero denominator", line=items[1].line, column=items[1].column
            )
        return Fraction(int(items[0]), denominator)

    def monomial(self, items):
        return FreeElement.word(sum(items, ()))

    def power(self, items):
        exponent = int(items[1]) if len(items) > 1 else 1
        return (GenSymbol(str(items[0])),) * exponent


def parse_element(text: str, path: str = None) -> FreeElement:
    """Parse an element; syntax errors become ``InputError``s carrying line and column."""
    try:
        tree = parser.parse(text)
        return ElementTransformer().transform(tree)
    except lark.exceptions.VisitError as e:
        if isinstance(e.orig_exc, InputError):
            e.orig_exc.path = path
            raise e.orig_exc from e
        raise
    except lark.exceptions.UnexpectedInput as e:
        line = e.line if e.line > 0 else None
        column = e.column if e.column > 0 else None
        message = str(e).strip().splitlines()[0]
        raise InputError(message, path=path, line=line, column=column) from e


def _format_coefficient(value: Fraction, word) -> str:
    if not word:
        return str(value)
    if value == 1:
        return format_word(word)
    return f"{value}*{format_word(word)}"


def format_element(a: FreeElement) -> str:
    """``x^2.tau - 3/2*s + 1``-style rendering, terms ordered by length."""
    terms = a.terms()
    if not terms:
        return "0"
    parts = []
    for i, (word, value) in enumerate(terms):
        sign = "-" if value < 0 else "+"
        body = _format_coefficient(abs(value), word)
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
