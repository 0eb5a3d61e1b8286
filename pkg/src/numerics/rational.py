"""
Exact rational scalars.

Rationals are ``fractions.Fraction`` values: always reduced, denominator
positive, arithmetic exact. This module adds the text conventions ("p/q" or
integer "p", decimals rejected) and small helpers used by the matrix and sweep
code.
"""

import math
import re
from fractions import Fraction
from functools import reduce
from numbers import Rational as _RationalABC
from typing import Iterable, Union

from ..exceptions import InputFormatError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or "p" into an exact rational.

    Decimal and exponent literals are rejected: in exact contexts "0.1" is an
    input error rather than a binary approximation.
    """
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise InputFormatError(f"Not an exact rational literal: {text!r} (use p/q or an integer)")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InputFormatError(f"Zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and p/q strings; floats are refused."""
    if isinstance(value, bool):
        raise InputFormatError("Booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise InputFormatError(
        f"{type(value).__name__} value {value!r} is not exact; use Fraction, int or 'p/q' "
        "(Simplex.from_floats converts binary floats exactly)"
    )


def format_rational(value: Fraction) -> str:
    """Canonical text form: "p/q", or "p" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def common_denominator(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators (1 for an empty input)."""
    return reduce(math.lcm, (v.denominator for v in values), 1)


__all__ = [
    'Rational',
    'RationalLike',
    'parse_rational',
    'to_rational',
    'format_rational',
    'common_denominator',
]
