"""
Reference values imported from published tables.

These are displayed next to computed results and used as test expectations.
They are never reported as results of a computation in this package.
"""

from dataclasses import dataclass
from math import factorial
from fractions import Fraction
from typing import Dict, Optional


@dataclass(frozen=True)
class MaxDeterminant:
    """Maximal determinant h_n of an n x n (0,1)-matrix."""
    n: int
    h: int
    source: str
    # False where maximality of the underlying (+-1) order n+1 is not settled in the source
    certain: bool = True

    @property
    def nu(self) -> Fraction:
        """nu_n = h_n / n!, the maximum volume of a simplex in Q_n."""
        return Fraction(self.h, factorial(self.n))


_SEARCH = "exhaustive search (reproduced by h_search)"
_HADAMARD = "Hadamard order n+1: (n+1)^((n+1)/2) / 2^n"
_TABLES = "published maximal (+-1)-determinant tables, g_{n+1} / 2^n"

MAX_DETERMINANTS: Dict[int, MaxDeterminant] = {
    m.n: m for m in [
        MaxDeterminant(1, 1, _HADAMARD),
        MaxDeterminant(2, 1, _SEARCH),
        MaxDeterminant(3, 2, _HADAMARD),
        MaxDeterminant(4, 3, _SEARCH),
        MaxDeterminant(5, 5, _SEARCH),
        MaxDeterminant(6, 9, _SEARCH),
        MaxDeterminant(7, 32, _HADAMARD),
        MaxDeterminant(8, 56, _TABLES),
        MaxDeterminant(9, 144, _TABLES),
        MaxDeterminant(10, 320, _TABLES),
        MaxDeterminant(11, 1458, _HADAMARD),
        MaxDeterminant(12, 3645, _TABLES),
        MaxDeterminant(13, 9477, _TABLES, certain=False),
        MaxDeterminant(14, 25515, _TABLES, certain=False),
        MaxDeterminant(15, 131072, _HADAMARD),
        MaxDeterminant(16, 327680, _TABLES),
        MaxDeterminant(17, 1114112, _TABLES),
        MaxDeterminant(18, 3411968, _TABLES),
        MaxDeterminant(19, 19531250, _HADAMARD),
        MaxDeterminant(20, 56640625, _TABLES),
    ]
}

# Printed chi_n^-1(1/nu_n), n = 1..54 (four decimals, trailing zeros dropped)
PRINTED_LEGENDRE_BOUNDS: Dict[int, float] = {
    1: 1.0, 2: 1.291, 3: 1.2492, 4: 1.3478, 5: 1.4284, 6: 1.5018, 7: 1.4678,
    8: 1.5626, 9: 1.6034, 10: 1.6699, 11: 1.6488, 12: 1.7086, 13: 1.7659,
    14: 1.8211, 15: 1.8108, 16: 1.8778, 17: 1.9156, 18: 1.965, 19: 1.9587,
    20: 2.0159, 21: 2.0588, 22: 2.1039, 23: 2.0958, 24: 2.1408, 25: 2.1847,
    26: 2.2278, 27: 2.2242, 28: 2.2768, 29: 2.3074, 30: 2.3487, 31: 2.3452,
    32: 2.3955, 33: 2.4259, 34: 2.4642, 35: 2.4601, 36: 2.5019, 37: 2.5348,
    38: 2.5722, 39: 2.5697, 40: 2.6056, 41: 2.641, 42: 2.6759, 43: 2.6747,
    44: 2.7179, 45: 2.743, 46: 2.7791, 47: 2.7756, 48: 2.8201, 49: 2.8413,
    50: 2.8805, 51: 2.8729, 52: 2.9173, 53: 2.9362, 54: 2.9735,
}


@dataclass(frozen=True)
class ImportedBound:
    """A bound known from the literature that is not recomputed here."""
    value: float
    relation: str  # '=', '<=', '<', '>='
    label: str


# Known values and bounds for the minimal absorption index xi_n, n = 1..10
XI_SMALL: Dict[int, Dict[str, Optional[ImportedBound]]] = {
    1: {'lower': ImportedBound(1.0, '=', '1'), 'upper': None},
    2: {'lower': ImportedBound(3 * 5 ** 0.5 / 5 + 1, '=', '3*sqrt(5)/5+1'), 'upper': None},
    3: {'lower': ImportedBound(3.0, '=', '3'), 'upper': None},
    4: {'lower': ImportedBound(4.0, '>=', '4'),
        'upper': ImportedBound((19 + 5 * 13 ** 0.5) / 9, '<=', '(19+5*sqrt(13))/9')},
    5: {'lower': ImportedBound(5.0, '=', '5'), 'upper': None},
    6: {'lower': ImportedBound(6.0, '>=', '6'), 'upper': ImportedBound(6.0166, '<', '6.0166')},
    7: {'lower': ImportedBound(7.0, '=', '7'), 'upper': None},
    8: {'lower': ImportedBound(8.0, '>=', '8'), 'upper': ImportedBound(8.1355, '<', '8.1355')},
    9: {'lower': ImportedBound(9.0, '=', '9'), 'upper': None},
    10: {'lower': ImportedBound(10.0, '>=', '10'), 'upper': ImportedBound(10.2342, '<', '10.2342')},
}

# Best known upper estimates of theta_n, n = 1..7
THETA_UPPER_SMALL: Dict[int, ImportedBound] = {
    1: ImportedBound(1.0, '=', '1'),
    2: ImportedBound(2 * 5 ** 0.5 / 5 + 1, '=', '2*sqrt(5)/5+1'),
    3: ImportedBound(2.0, '=', '2'),
    4: ImportedBound(3 * (4 + 2 ** 0.5) / 7, '<=', '3*(4+sqrt(2))/7'),
    5: ImportedBound(2.448804, '<', '2.448804'),
    6: ImportedBound(2.60014, '<=', '2.60014'),
    7: ImportedBound(2.5, '=', '5/2'),
}

# Minimal norm over projectors with nodes at maximal-volume simplices, n = 1..27
MIN_NORM_MAX_VOLUME: Dict[int, Fraction] = {
    1: Fraction(1), 2: Fraction(3), 3: Fraction(2), 4: Fraction(7, 3), 5: Fraction(13, 5),
    6: Fraction(3), 7: Fraction(5, 2), 8: Fraction(22, 7), 9: Fraction(3), 10: Fraction(19, 5),
    11: Fraction(3), 12: Fraction(17, 5), 13: Fraction(49, 13), 14: Fraction(21, 5),
    15: Fraction(7, 2), 16: Fraction(21, 5), 17: Fraction(139, 34), 18: Fraction(95, 17),
    19: Fraction(4), 20: Fraction(137, 29), 21: Fraction(251, 50), 22: Fraction(1817, 335),
    23: Fraction(9, 2), 24: Fraction(103, 21), 25: Fraction(5), 26: Fraction(474, 91),
    27: Fraction(5),
}

# xi'_n and theta'_n: minima over (0,1)-simplices, n = 1..7
XI_PRIME: Dict[int, Fraction] = {
    1: Fraction(1), 2: Fraction(4), 3: Fraction(3), 4: Fraction(13, 3),
    5: Fraction(11, 2), 6: Fraction(25, 4), 7: Fraction(7),
}
THETA_PRIME: Dict[int, Fraction] = {
    1: Fraction(1), 2: Fraction(3), 3: Fraction(2), 4: Fraction(7, 3),
    5: Fraction(13, 5), 6: Fraction(3), 7: Fraction(5, 2),
}


def max_determinant(n: int) -> Optional[MaxDeterminant]:
    """Imported h_n, or None outside the fixture range."""
    return MAX_DETERMINANTS.get(n)


__all__ = [
    'MaxDeterminant',
    'MAX_DETERMINANTS',
    'PRINTED_LEGENDRE_BOUNDS',
    'ImportedBound',
    'XI_SMALL',
    'THETA_UPPER_SMALL',
    'MIN_NORM_MAX_VOLUME',
    'XI_PRIME',
    'THETA_PRIME',
    'max_determinant',
]
