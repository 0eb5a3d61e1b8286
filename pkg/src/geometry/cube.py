"""
Simplex-versus-cube characteristics.

All quantities here are exact rationals. For a simplex S with basic Lagrange
polynomials lambda_j the maximum of -lambda_j over the cube Q_n = [0,1]^n is
attained coordinatewise:

    max_Q (-lambda_j) = -l_{n+1,j} + sum_i max(0, -l_ij)

which gives xi(S) and the extremal cube vertices without enumeration. The
projector norm max_Q sum_j |lambda_j| is convex and is found by sweeping all
2^n cube vertices (see processing.sweep).
"""

import itertools
import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from ..config import get_config
from ..exceptions import DimensionTooLarge, NotInsideCube
from ..numerics import RationalMatrix, common_denominator, det
from ..processing.sweep import NormReducer, build_plan, sweep_cube
from .simplex import Simplex, lagrange_eval

logger = logging.getLogger(__name__)

CubeVertex = Tuple[int, ...]


@dataclass(frozen=True)
class AbsorptionReport:
    """xi(S), alpha(S), axial diameters and extremal cube vertices."""
    n: int
    xi: Fraction
    alpha: Fraction
    axial_diameters: Tuple[Fraction, ...]
    circumscribed: bool
    per_face_max: Tuple[Fraction, ...]
    witnesses: Tuple[Tuple[CubeVertex, ...], ...]
    # exact number of maximising cube vertices per face (witness lists may be truncated)
    witness_counts: Tuple[int, ...]
    contains_cube: bool


@dataclass(frozen=True)
class CubeNormReport:
    """Norm of the interpolation projector on Q_n."""
    n: int
    norm: Fraction
    witness_vertex: CubeVertex
    one_point: Optional[CubeVertex]


@dataclass(frozen=True)
class BilateralReport:
    """(n+1)/(2n)(|P|-1)+1 <= xi(S) <= (n+1)/2(|P|-1)+1."""
    n: int
    lower: Fraction
    xi: Fraction
    upper: Fraction
    norm: Fraction
    one_point: Optional[CubeVertex]
    holds: bool
    right_equality: bool


@dataclass(frozen=True)
class CubeInscriptionReport:
    """Properties of simplices with S in Q_n in nS."""
    n: int
    xi: Fraction
    precondition_met: bool
    conditions: Tuple[Tuple[str, bool], ...]
    passed: bool
    reason: str = ""


@dataclass(frozen=True)
class QuasiRigidityReport:
    """Outcome of random vertex-replacement trials."""
    n: int
    applicable: bool
    trials: int
    passed: Optional[bool]
    # (vertex index, replacement point, volume ratio) of the first violation
    counterexample: Optional[Tuple[int, Tuple[Fraction, ...], Fraction]] = None


class AlphaValues(NamedTuple):
    alpha: Fraction
    alpha_q_prime: Fraction


def mask_to_vertex(mask: int, n: int) -> CubeVertex:
    return tuple(mask >> i & 1 for i in range(n))


def vertex_to_mask(vertex: CubeVertex) -> int:
    return sum(bit << i for i, bit in enumerate(vertex))


def _row_abs_sums(S: Simplex) -> List[Fraction]:
    return [sum((abs(x) for x in S.L.row(i)), Fraction(0)) for i in range(S.n)]


def axial_diameters(S: Simplex) -> Tuple[Fraction, ...]:
    """d_i(S) from 1/d_i = (1/2) sum_j |l_ij|."""
    return tuple(2 / s for s in _row_abs_sums(S))


def alpha_cube(S: Simplex) -> AlphaValues:
    """alpha(S) = sum_i 1/d_i and alpha(Q'_n; S) = 2 alpha(S)."""
    total = sum(_row_abs_sums(S), Fraction(0))
    return AlphaValues(alpha=total / 2, alpha_q_prime=total)


def face_maxima(S: Simplex, sign: int = -1) -> Tuple[Fraction, ...]:
    """max over Q_n of sign*lambda_j for every j (sign = -1 gives the xi maxima)."""
    maxima = []
    for j in range(1, S.n + 2):
        column = S.coefficients(j)
        maxima.append(sign * column[-1] + sum((max(Fraction(0), sign * c) for c in column[:-1]), Fraction(0)))
    return tuple(maxima)


def _extremal_vertices(coefficients, limit: int) -> Tuple[Tuple[CubeVertex, ...], int]:
    """Cube vertices maximising -lambda: forced coordinates plus free ones where l_ij = 0."""
    fixed = [1 if c < 0 else 0 for c in coefficients]
    free = [i for i, c in enumerate(coefficients) if c == 0]
    count = 2 ** len(free)
    vertices = []
    for choice in itertools.islice(itertools.product((0, 1), repeat=len(free)), limit):
        vertex = list(fixed)
        for i, bit in zip(free, choice):
            vertex[i] = bit
        vertices.append(tuple(vertex))
    return tuple(vertices), count


def xi_cube(S: Simplex, max_witnesses: Optional[int] = None) -> AbsorptionReport:
    """
    Absorption index xi(S) = (n+1) max_j max_Q(-lambda_j) + 1.

    When every per-face maximum is <= 0 the cube already lies in S and xi = 1.
    """
    limit = get_config().compute.max_witnesses if max_witnesses is None else max_witnesses
    per_face = face_maxima(S)
    top = max(per_face)
    contains_cube = top <= 0
    xi = Fraction(1) if contains_cube else (S.n + 1) * top + 1

    witnesses, counts = [], []
    for j in range(1, S.n + 2):
        if per_face[j - 1] == top:
            vertices, count = _extremal_vertices(S.normal(j), limit)
        else:
            vertices, count = (), 0
        witnesses.append(vertices)
        counts.append(count)

    alpha = alpha_cube(S).alpha
    return AbsorptionReport(
        n=S.n,
        xi=xi,
        alpha=alpha,
        axial_diameters=axial_diameters(S),
        circumscribed=len(set(per_face)) == 1,
        per_face_max=per_face,
        witnesses=tuple(witnesses),
        witness_counts=tuple(counts),
        contains_cube=contains_cube,
    )


def scaled_forms(S: Simplex) -> Tuple[List[List[int]], List[int], int]:
    """Integer coefficients, constants and common scale D of the forms D*lambda_j."""
    entries = [x for row in S.L.entries for x in row]
    scale = common_denominator(entries)
    coefficients = [[int(x * scale) for x in S.L.row(i)] for i in range(S.n)]
    constants = [int(x * scale) for x in S.L.row(S.n)]
    return coefficients, constants, scale


def projector_norm_cube(S: Simplex, workers: Optional[int] = None,
                        dimension_cap: Optional[int] = None,
                        block_bits: Optional[int] = None) -> CubeNormReport:
    """
    |P|_{Q_n} = max over cube vertices of sum_j |lambda_j(x)|.

    The witness is the least vertex mask attaining the maximum; a 1-point is
    reported when some maximising vertex has exactly one negative lambda_j.

    Raises:
        DimensionTooLarge: n above the configured sweep cap
    """
    start = time.time()
    coefficients, constants, scale = scaled_forms(S)
    plan = build_plan(coefficients, constants, block_bits=block_bits,
                      workers=workers, dimension_cap=dimension_cap)
    reducer = sweep_cube(plan, NormReducer)
    norm = Fraction(int(reducer.best), scale)
    one_point = None if reducer.one_point is None else mask_to_vertex(reducer.one_point, S.n)

    logger.info(f"Projector norm on Q_{S.n}: {norm} ({2 ** S.n} vertices, {time.time() - start:.2f}s)")
    return CubeNormReport(
        n=S.n,
        norm=norm,
        witness_vertex=mask_to_vertex(reducer.witness, S.n),
        one_point=one_point,
    )


def projector_norm_cube_naive(S: Simplex, dimension_cap: Optional[int] = None) -> CubeNormReport:
    """Reference path: substitute every cube vertex into every lambda_j."""
    cap = get_config().compute.dimension_cap if dimension_cap is None else dimension_cap
    if S.n > cap:
        raise DimensionTooLarge(S.n, cap, "cube-vertex sweep")
    best, witness, one_point = None, None, None
    for mask in range(2 ** S.n):
        values = S.lagrange_values(mask_to_vertex(mask, S.n))
        total = sum((abs(v) for v in values), Fraction(0))
        single = sum(1 for v in values if v < 0) == 1
        if best is None or total > best:
            best, witness, one_point = total, mask, (mask if single else None)
        elif total == best and single and one_point is None:
            one_point = mask
    return CubeNormReport(
        n=S.n,
        norm=best,
        witness_vertex=mask_to_vertex(witness, S.n),
        one_point=None if one_point is None else mask_to_vertex(one_point, S.n),
    )


def _require_inside(S: Simplex) -> None:
    if not S.inside_cube():
        raise NotInsideCube(f"Simplex is not contained in Q_{S.n}")


def check_bilateral(S: Simplex, norm_report: Optional[CubeNormReport] = None) -> BilateralReport:
    """
    Evaluate both sides of the xi / projector-norm inequality.

    The right-hand side is an equality whenever a 1-point exists; the converse
    is not claimed, so ``right_equality`` may also hold without a 1-point.
    """
    _require_inside(S)
    n = S.n
    report = norm_report or projector_norm_cube(S)
    xi = xi_cube(S).xi
    lower = Fraction(n + 1, 2 * n) * (report.norm - 1) + 1
    upper = Fraction(n + 1, 2) * (report.norm - 1) + 1
    holds = lower <= xi <= upper
    if not holds:
        logger.error(f"Bilateral inequality violated: {lower} <= {xi} <= {upper} fails")
    if report.one_point is not None and upper != xi:
        logger.error(f"1-point {report.one_point} present but upper bound {upper} != xi {xi}")
    return BilateralReport(
        n=n, lower=lower, xi=xi, upper=upper, norm=report.norm,
        one_point=report.one_point, holds=holds, right_equality=upper == xi,
    )


def theorem61_diagnostics(S: Simplex) -> CubeInscriptionReport:
    """
    Check the structural properties forced by S in Q_n in nS.

    The precondition is S in Q_n and xi(S) = n; when it fails the report says
    so instead of raising.
    """
    n = S.n
    xi = xi_cube(S).xi
    if not S.inside_cube():
        return CubeInscriptionReport(n=n, xi=xi, precondition_met=False, conditions=(), passed=False,
                               reason=f"simplex is not contained in Q_{n}")
    if xi != n:
        return CubeInscriptionReport(n=n, xi=xi, precondition_met=False, conditions=(), passed=False,
                               reason=f"xi(S) = {xi} differs from n = {n}")

    gap = Fraction(n - 1, n + 1)
    columns = [S.coefficients(j) for j in range(1, n + 2)]
    max_plus = face_maxima(S, sign=1)
    max_minus = face_maxima(S, sign=-1)
    half = Fraction(1, 2)

    conditions: Dict[str, bool] = {
        'max_lambda_is_one': all(m == 1 for m in max_plus),
        'max_minus_lambda_is_gap': all(m == gap for m in max_minus),
        'centroid_is_cube_center': all(c == half for c in S.centroid),
        'row_sums_are_two': all(s == 2 for s in _row_abs_sums(S)),
        'column_sums': all(
            sum((abs(c) for c in col[:-1]), Fraction(0)) == Fraction(2 * n, n + 1) for col in columns
        ),
        'positive_split': all(
            sum((c for c in col[:-1] if c >= 0), Fraction(0)) == 1 - col[-1] for col in columns
        ),
        'negative_split': all(
            sum((-c for c in col[:-1] if c < 0), Fraction(0)) == gap + col[-1] for col in columns
        ),
        'cube_in_strips': all(m <= 1 for m in max_plus) and all(m <= gap for m in max_minus),
    }
    passed = all(conditions.values())
    if not passed:
        failing = [name for name, ok in conditions.items() if not ok]
        logger.warning(f"Inscription diagnostics failed for n={n}: {failing}")
    return CubeInscriptionReport(n=n, xi=xi, precondition_met=True,
                           conditions=tuple(conditions.items()), passed=passed)


def quasi_rigidity_probe(S: Simplex, trials: Optional[int] = None, rng_seed: Optional[int] = None,
                         denominator: int = 12) -> QuasiRigidityReport:
    """
    Replace a random vertex by a random rational point of Q_n and compare volumes.

    By Cramer's rule the replaced simplex has volume |lambda_j(y)| vol(S), so a
    trial fails exactly when |lambda_j(y)| > 1. Half of the points are cube
    vertices, the others have coordinates k/denominator.
    """
    sampling = get_config().sampling
    trials = sampling.rigidity_trials if trials is None else trials
    seed = sampling.rng_seed if rng_seed is None else rng_seed
    n = S.n

    if not S.inside_cube() or xi_cube(S).xi != n:
        logger.info(f"Quasi-rigidity probe skipped: S is not between Q_{n} and {n}S")
        return QuasiRigidityReport(n=n, applicable=False, trials=0, passed=None)

    rng = np.random.default_rng(seed)
    for _ in range(trials):
        j = int(rng.integers(1, n + 2))
        if rng.random() < 0.5:
            y = tuple(Fraction(int(b)) for b in rng.integers(0, 2, size=n))
        else:
            y = tuple(Fraction(int(k), denominator) for k in rng.integers(0, denominator + 1, size=n))
        ratio = abs(lagrange_eval(S, j, y))
        if ratio > 1:
            logger.warning(f"Volume increases by {ratio} replacing vertex {j} with {y}")
            return QuasiRigidityReport(n=n, applicable=True, trials=trials, passed=False,
                                       counterexample=(j, y, ratio))
    return QuasiRigidityReport(n=n, applicable=True, trials=trials, passed=True)


def replaced_volume(S: Simplex, j: int, y) -> Fraction:
    """Volume of S with vertex j replaced by y, from the determinant directly."""
    vertices = S.with_vertex(j, y)
    A = RationalMatrix([list(v) + [1] for v in vertices])
    return abs(det(A)) / math.factorial(S.n)


__all__ = [
    'CubeVertex',
    'AbsorptionReport',
    'CubeNormReport',
    'BilateralReport',
    'CubeInscriptionReport',
    'QuasiRigidityReport',
    'AlphaValues',
    'mask_to_vertex',
    'vertex_to_mask',
    'axial_diameters',
    'alpha_cube',
    'face_maxima',
    'xi_cube',
    'scaled_forms',
    'projector_norm_cube',
    'projector_norm_cube_naive',
    'check_bilateral',
    'theorem61_diagnostics',
    'quasi_rigidity_probe',
    'replaced_volume',
]
