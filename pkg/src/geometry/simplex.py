"""
The Simplex type and its basic Lagrange polynomials.

A simplex in R^n is stored with its vertex matrix A (row k holds the
coordinates of vertex k followed by 1) and L = A^-1. Column j of L holds the
coefficients of the basic Lagrange polynomial

    lambda_j(x) = l_1j x_1 + ... + l_nj x_n + l_{n+1,j}

so that lambda_j(x^(k)) = delta_jk and sum_j lambda_j = 1. Vertex order is
preserved exactly as given; j is 1-based in the public API.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import DegenerateSimplex, DimensionMismatch, SingularMatrix
from ..numerics import RationalMatrix, det, inverse, to_rational
from ..numerics.rational import RationalLike

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class SimplexMetrics:
    """Volume, heights and face measures of a simplex."""
    volume: Fraction
    heights: Tuple[float, ...]
    face_measures: Tuple[float, ...]
    total_surface: float
    # exact squares for boundary-critical comparisons
    heights_squared: Tuple[Fraction, ...]
    face_measures_squared: Tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class Simplex:
    """Nondegenerate simplex with exact vertices and cached A, L = A^-1."""
    n: int
    vertices: Tuple[Point, ...]
    A: RationalMatrix
    L: RationalMatrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, Simplex):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    @classmethod
    def from_floats(cls, vertices: Sequence[Sequence[float]]) -> "Simplex":
        """Build from binary floats, converting each coordinate exactly."""
        return build_simplex([[Fraction(float(x)) for x in v] for v in vertices])

    @cached_property
    def det_A(self) -> Fraction:
        return det(self.A)

    @cached_property
    def volume(self) -> Fraction:
        return abs(self.det_A) / math.factorial(self.n)

    def coefficients(self, j: int) -> Tuple[Fraction, ...]:
        """(l_1j, ..., l_nj, l_{n+1,j}) for 1-based j."""
        _check_index(self, j)
        return self.L.column(j - 1)

    def normal(self, j: int) -> Tuple[Fraction, ...]:
        """a_j = (l_1j, ..., l_nj)."""
        return self.coefficients(j)[:-1]

    def lagrange_values(self, x: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
        """All lambda_j(x), j = 1..n+1."""
        point = _as_point(self, x)
        return tuple(
            sum((c * xi for c, xi in zip(column[:-1], point)), column[-1])
            for column in (self.L.column(j) for j in range(self.n + 1))
        )

    @cached_property
    def centroid(self) -> Point:
        return tuple(sum(coords, Fraction(0)) / (self.n + 1) for coords in zip(*self.vertices))

    @cached_property
    def vertex_array(self) -> np.ndarray:
        """Vertices as an (n+1) x n float array."""
        return np.array([[float(x) for x in v] for v in self.vertices], dtype=float)

    @cached_property
    def lagrange_array(self) -> np.ndarray:
        """L as an (n+1) x (n+1) float array; column j is lambda_{j+1}."""
        return self.L.to_float_array()

    def inside_cube(self) -> bool:
        """True when every vertex lies in [0,1]^n."""
        return all(0 <= x <= 1 for v in self.vertices for x in v)

    def with_vertex(self, j: int, y: Sequence[RationalLike]) -> Tuple[Point, ...]:
        """Vertex list with vertex j (1-based) replaced by y."""
        _check_index(self, j)
        point = _as_point(self, y)
        return tuple(point if k == j - 1 else v for k, v in enumerate(self.vertices))

    def __repr__(self) -> str:
        shown = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Simplex(n={self.n}, vertices=[{shown}])"


def _check_index(S: Simplex, j: int) -> None:
    if not 1 <= j <= S.n + 1:
        raise IndexError(f"Lagrange index {j} out of range 1..{S.n + 1}")


def _as_point(S: Simplex, x: Sequence[RationalLike]) -> Point:
    if len(x) != S.n:
        raise DimensionMismatch(f"Point has {len(x)} coordinates, simplex dimension is {S.n}")
    return tuple(to_rational(c) for c in x)


def build_simplex(vertices: Sequence[Sequence[RationalLike]]) -> Simplex:
    """
    Build a simplex from n+1 points of R^n.

    Raises:
        DimensionMismatch: wrong number of points or coordinates
        DegenerateSimplex: det(A) = 0
    """
    points = tuple(tuple(to_rational(c) for c in v) for v in vertices)
    n = len(points) - 1
    if n < 1:
        raise DimensionMismatch(f"A simplex needs at least 2 vertices, got {len(points)}")
    if any(len(p) != n for p in points):
        raise DimensionMismatch(f"{n + 1} vertices must each have {n} coordinates")

    A = RationalMatrix([list(p) + [1] for p in points])
    try:
        L = inverse(A)
    except SingularMatrix:
        raise DegenerateSimplex(f"Vertices are affinely dependent (det A = 0) in dimension {n}") from None

    return Simplex(n=n, vertices=points, A=A, L=L)


def unit_simplex(n: int) -> Simplex:
    """The simplex with vertices e_1, ..., e_n, 0."""
    vertices = [[1 if i == k else 0 for i in range(n)] for k in range(n)]
    vertices.append([0] * n)
    return build_simplex(vertices)


def lagrange_eval(S: Simplex, j: int, x: Sequence[RationalLike]) -> Fraction:
    """lambda_j(x) for 1-based j."""
    column = S.coefficients(j)
    point = _as_point(S, x)
    return sum((c * xi for c, xi in zip(column[:-1], point)), column[-1])


def _face_measure_squared(face: Sequence[Point]) -> Fraction:
    """Squared (n-1)-measure of the simplex spanned by ``face`` (n points)."""
    base = face[0]
    edges = [[a - b for a, b in zip(p, base)] for p in face[1:]]
    k = len(edges)
    if k == 0:
        return Fraction(1)
    gram = RationalMatrix([[sum((a * b for a, b in zip(u, v)), Fraction(0)) for v in edges] for u in edges])
    return det(gram) / math.factorial(k) ** 2


def metrics(S: Simplex) -> SimplexMetrics:
    """
    Volume, heights h_j = 1/|a_j| and face measures via Gram determinants.

    The j-th face is the one opposite vertex j.
    """
    heights_squared = tuple(
        1 / sum((c * c for c in S.normal(j)), Fraction(0)) for j in range(1, S.n + 2)
    )
    face_measures_squared = tuple(
        _face_measure_squared([v for k, v in enumerate(S.vertices) if k != j])
        for j in range(S.n + 1)
    )
    face_measures = tuple(math.sqrt(s) for s in face_measures_squared)
    return SimplexMetrics(
        volume=S.volume,
        heights=tuple(math.sqrt(h) for h in heights_squared),
        face_measures=face_measures,
        total_surface=math.fsum(face_measures),
        heights_squared=heights_squared,
        face_measures_squared=face_measures_squared,
    )


__all__ = [
    'Point',
    'Simplex',
    'SimplexMetrics',
    'build_simplex',
    'unit_simplex',
    'lagrange_eval',
    'metrics',
]
