"""Exact rational scalars and their textual form."""

import re
from fractions import Fraction
from typing import Union

from hptkit.errors import InputError

Scalar = Union[int, Fraction]

SCALAR_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_scalar(text: Union[str, int], path: str = None) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a reduced fraction.

    Floats are rejected: all arithmetic in hptkit is exact.
    """
    if isinstance(text, bool):
        raise InputError(f"not a rational number: {text!r}", path=path)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"not a rational number: {text!r}", path=path)
    match = SCALAR_PATTERN.match(text)
    if match is None:
        raise InputError(f"not a rational number: {text!r}", path=path)
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InputError(f"zero denominator in {text!r}", path=path)
    return Fraction(int(numerator), int(denominator or 1))


def format_scalar(value: Scalar) -> str:
    return str(Fraction(value))
