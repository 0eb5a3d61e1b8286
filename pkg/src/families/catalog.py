"""
Named simplices: S*, S1, S2, the seven-dimensional Hadamard simplex H7, the
extremal plane triangle T8 and the five-dimensional family V(s,t).
"""

import logging
import math
import re
from fractions import Fraction
from typing import Callable, Dict

from ..combinatorics.hadamard import hadamard_simplex
from ..exceptions import DomainError, UnknownName
from ..geometry.simplex import Simplex, build_simplex
from ..numerics import parse_rational
from ..numerics.rational import RationalLike, to_rational

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)

# (3 - sqrt 5)/2
TAU = (3 - math.sqrt(5)) / 2


def s_star(n: int) -> Simplex:
    """
    S* = conv{(0,1,...,1), ..., (1,...,1,0), 0}; for n = 1 the segment [0,1].

    xi(S*) = 1, 4, (n^2-3)/(n-1) for n = 1, 2, >= 3, and every d_i(S*) = 1.
    """
    if n < 1:
        raise DomainError(f"Dimension must be at least 1, got {n}")
    if n == 1:
        return build_simplex([[1], [0]])
    vertices = [[0 if i == k else 1 for i in range(n)] for k in range(n)]
    vertices.append([0] * n)
    return build_simplex(vertices)


def _s1() -> Simplex:
    return build_simplex([[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]])


def _s2() -> Simplex:
    return build_simplex([[_HALF, 0, 0], [_HALF, 1, 0], [0, _HALF, 1], [1, _HALF, 1]])


def _h7() -> Simplex:
    return build_simplex([
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 0],
        [0, 0, 1, 1, 0, 0, 1],
        [1, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1, 1],
        [1, 0, 1, 0, 0, 1, 0],
        [1, 1, 0, 0, 0, 0, 1],
        [0, 1, 1, 0, 1, 0, 0],
    ])


def _t8() -> Simplex:
    return Simplex.from_floats([[0.0, 0.0], [1.0, TAU], [TAU, 1.0]])


_CATALOG: Dict[str, Callable[[], Simplex]] = {
    'S1': _s1,
    'S2': _s2,
    'H7': _h7,
    'T8': _t8,
}


def catalog_names():
    return sorted(_CATALOG)


def catalog(name: str) -> Simplex:
    """
    Fixed simplices by name: S1, S2 (three-dimensional, xi = 3), H7, T8.

    Raises:
        UnknownName: name not in the catalog
    """
    try:
        builder = _CATALOG[name.upper()]
    except KeyError:
        raise UnknownName(f"Unknown catalog simplex {name!r}; known: {', '.join(catalog_names())}") from None
    return builder()


def family_v(s: RationalLike, t: RationalLike) -> Simplex:
    """
    Five-dimensional V(s,t); vol V = 1/120 for all s, t.

    V lies in Q_5 iff s, t in [1/3, 2/3]; xi(V) = 5 iff s, t in [4/9, 5/9].
    """
    s, t = to_rational(s), to_rational(t)
    return build_simplex([
        [s, 1, _THIRD, 1, 1],
        [s, 0, _THIRD, 1, 1],
        [s, 2 - 3 * t, _THIRD, 0, 1],
        [2 - 3 * s, t, 0, _THIRD, 0],
        [0, t, 1, _THIRD, 0],
        [1, t, 1, _THIRD, 0],
    ])


_ADDRESS_PATTERNS = [
    (re.compile(r"^s-?star\((\d+)\)$|^s-?star$", re.IGNORECASE), 's-star'),
    (re.compile(r"^hadamard\((\d+)\)$", re.IGNORECASE), 'hadamard'),
    (re.compile(r"^v\(([^,]+),([^)]+)\)$", re.IGNORECASE), 'v'),
]


def resolve(address: str, n: int = 3) -> Simplex:
    """
    Resolve a CLI catalog address.

    Accepted forms: s1, s2, h7, t8, s-star(n) (or s-star with ``n``),
    hadamard(n) and v(s,t) with rational s, t.
    """
    text = address.strip().replace(" ", "")
    for pattern, kind in _ADDRESS_PATTERNS:
        match = pattern.match(text)
        if match is None:
            continue
        if kind == 's-star':
            return s_star(int(match.group(1)) if match.group(1) else n)
        if kind == 'hadamard':
            return hadamard_simplex(int(match.group(1)))
        return family_v(parse_rational(match.group(1)), parse_rational(match.group(2)))
    return catalog(text)


__all__ = ['TAU', 's_star', 'catalog', 'catalog_names', 'family_v', 'resolve']
