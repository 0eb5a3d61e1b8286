"""
Exact numerics package initialization.
"""

from .rational import Rational, parse_rational, to_rational, format_rational, common_denominator
from .matrix import RationalMatrix, det, inverse

__all__ = [
    'Rational',
    'parse_rational',
    'to_rational',
    'format_rational',
    'common_denominator',
    'RationalMatrix',
    'det',
    'inverse'
]
