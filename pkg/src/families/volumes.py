"""
Cut-off volumes, equisection and the perfect-simplex test.

v_j = vol(Q_n intersected with {lambda_j <= 0}) is the part of the cube cut off
by the j-th face hyperplane on the side away from the simplex. A simplex is
equisecting when all v_j coincide, and perfect when every cube vertex lies on
the boundary of xi(S)S.
"""

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

from ..exceptions import NotInsideCube, PieceBoundary, ZeroNormal
from ..geometry.cube import CubeVertex, face_maxima, mask_to_vertex, scaled_forms, xi_cube
from ..geometry.simplex import Simplex
from ..numerics.rational import RationalLike, to_rational
from ..processing.sweep import FaceIncidenceReducer, build_plan, sweep_cube

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CutVolumes:
    """v_j for j = 1..n+1."""
    v: Tuple[Fraction, ...]

    @property
    def equisecting(self) -> bool:
        return len(set(self.v)) == 1


@dataclass(frozen=True)
class PerfectReport:
    """Faces of xi(S)S through each cube vertex (vertex order is by mask)."""
    n: int
    xi: Fraction
    per_vertex_face: Tuple[Tuple[CubeVertex, Tuple[int, ...]], ...]
    is_perfect: bool

    @property
    def face_incident_vertices(self) -> Tuple[CubeVertex, ...]:
        return tuple(vertex for vertex, faces in self.per_vertex_face if faces)


class CutVolumePair(NamedTuple):
    v1: Fraction
    v2: Fraction


def halfspace_cube_volume(a: Sequence[RationalLike], b: RationalLike) -> Fraction:
    """
    Exact vol([0,1]^n intersected with {a.x <= b}).

    Zero coefficients leave a unit factor and are dropped; negative ones are
    reflected by x_i -> 1 - x_i. With every a_i > 0,

        vol = sum over v in {0,1}^m of (-1)^|v| max(0, b - a.v)^m / (m! prod a_i)

    Raises:
        ZeroNormal: every a_i is zero
    """
    b = to_rational(b)
    coefficients = []
    for value in map(to_rational, a):
        if value > 0:
            coefficients.append(value)
        elif value < 0:
            b -= value
            coefficients.append(-value)
    if not coefficients:
        raise ZeroNormal("Halfspace normal has no nonzero coefficient")

    m = len(coefficients)
    total = Fraction(0)
    for mask in range(2 ** m):
        offset = b - sum((c for i, c in enumerate(coefficients) if mask >> i & 1), Fraction(0))
        if offset > 0:
            term = offset ** m
            total += -term if bin(mask).count("1") % 2 else term
    return total / (math.factorial(m) * math.prod(coefficients))


def _require_inside(S: Simplex) -> None:
    if not S.inside_cube():
        raise NotInsideCube(f"Simplex is not contained in Q_{S.n}")


def cut_volumes(S: Simplex) -> CutVolumes:
    """
    v_j = vol(Q_n intersected with {lambda_j <= 0}) for every face.

    Simplices built from floats are handled exactly on their binary values.

    Raises:
        NotInsideCube
    """
    _require_inside(S)
    volumes = []
    for j in range(1, S.n + 2):
        column = S.coefficients(j)
        volumes.append(halfspace_cube_volume(column[:-1], -column[-1]))
    return CutVolumes(v=tuple(volumes))


def is_equisecting(S: Simplex) -> bool:
    return cut_volumes(S).equisecting


def is_perfect(S: Simplex, workers: Optional[int] = None) -> PerfectReport:
    """
    Cube vertices on the faces of xi(S)S.

    Vertex v lies on face j iff -lambda_j(v) equals the overall maximum of
    -lambda_k over the cube vertices. S is perfect when every vertex of Q_n
    lies on at least one face.

    Raises:
        NotInsideCube
        DimensionTooLarge: n above the sweep cap
    """
    _require_inside(S)
    started = time.perf_counter()
    coefficients, constants, scale = scaled_forms(S)
    target = int(max(face_maxima(S)) * scale)
    plan = build_plan(coefficients, constants, workers=workers)
    reducer = sweep_cube(plan, lambda: FaceIncidenceReducer(target))

    per_vertex = tuple(
        (mask_to_vertex(mask, S.n), tuple(j + 1 for j in reducer.incidence.get(mask, ())))
        for mask in range(2 ** S.n)
    )
    perfect = reducer.vertices_without_face == 0
    logger.info(f"Perfect check n={S.n}: {2 ** S.n - reducer.vertices_without_face}/{2 ** S.n} "
                f"vertices on faces ({time.perf_counter() - started:.2f}s)")
    return PerfectReport(n=S.n, xi=xi_cube(S).xi, per_vertex_face=per_vertex, is_perfect=perfect)


# Piecewise cut volumes of faces 1 and 2 of V(s,t) as functions of t.
_V1_BOUNDARIES = (Fraction(1, 3), Fraction(4, 9), Fraction(2, 3), Fraction(7, 9))
_V2_BOUNDARIES = (Fraction(2, 9), Fraction(1, 3), Fraction(5, 9), Fraction(2, 3))

_V1_PIECES: List[Callable[[Fraction], Fraction]] = [
    lambda t: (81 * t - 35) / (1458 * t ** 2 - 1620 * t + 432) + Fraction(1, 2),
    lambda t: -t / 2 + 2 / (54 - 81 * t) + Fraction(4, 9),
    lambda t: Fraction(1, 3),
    lambda t: t / 2 + 2 / (81 * t - 36) - Fraction(1, 9),
    lambda t: (55 - 81 * t) / (1458 * t ** 2 - 1620 * t + 432) + Fraction(1, 2),
]
_V2_PIECES: List[Callable[[Fraction], Fraction]] = [
    lambda t: (81 * t - 26) / (1458 * t ** 2 - 1296 * t + 270) + Fraction(1, 2),
    lambda t: -t / 2 + 2 / (45 - 81 * t) + Fraction(7, 18),
    lambda t: Fraction(1, 3),
    lambda t: (81 * t ** 2 - 36 * t + 7) / (162 * t - 54),
    lambda t: (46 - 81 * t) / (1458 * t ** 2 - 1296 * t + 270) + Fraction(1, 2),
]


def _piece_index(t: Fraction, boundaries: Sequence[Fraction]) -> int:
    return sum(1 for b in boundaries if t > b)


def _one_sided(t: Fraction, boundaries, pieces) -> Tuple[Fraction, Fraction]:
    """(left, right) limits at t; both equal the value away from the boundaries."""
    k = _piece_index(t, boundaries)
    if t in boundaries:
        return pieces[k](t), pieces[k + 1](t)
    value = pieces[k](t)
    return value, value


def v_closed_form(t: RationalLike) -> CutVolumePair:
    """
    v1(t), v2(t) for V(s,t); faces 5 and 6 follow as v2(s), v1(s), faces 3, 4 are 1/3.

    Raises:
        PieceBoundary: t is an endpoint of a piece of v1 or v2
    """
    t = to_rational(t)
    if t in _V1_BOUNDARIES or t in _V2_BOUNDARIES:
        raise PieceBoundary(
            t,
            tuple(sorted(set(_V1_BOUNDARIES) | set(_V2_BOUNDARIES))),
            _one_sided(t, _V1_BOUNDARIES, _V1_PIECES),
            _one_sided(t, _V2_BOUNDARIES, _V2_PIECES),
        )
    v1 = _V1_PIECES[_piece_index(t, _V1_BOUNDARIES)](t)
    v2 = _V2_PIECES[_piece_index(t, _V2_BOUNDARIES)](t)

    shifted = t + Fraction(1, 9)
    if shifted not in _V1_BOUNDARIES:
        expected = _V1_PIECES[_piece_index(shifted, _V1_BOUNDARIES)](shifted)
        if expected != v2:
            logger.error(f"Shift identity v2(t) = v1(t + 1/9) fails at t = {t}: {v2} != {expected}")
    return CutVolumePair(v1=v1, v2=v2)


__all__ = [
    'CutVolumes',
    'PerfectReport',
    'CutVolumePair',
    'halfspace_cube_volume',
    'cut_volumes',
    'is_equisecting',
    'is_perfect',
    'v_closed_form',
]
