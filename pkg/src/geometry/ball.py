"""
Simplex-versus-ball characteristics (binary64).

With a_j = (l_1j, ..., l_nj) the gradient of lambda_j:

    alpha(B_n; S) = sum_j |a_j| = sum_j 1/h_j = 1/r = sigma / (n vol S)
    xi(B; S)      = (n+1) max_j (rho |a_j| - lambda_j(x0)) + 1
    |P|_B         = max over sign vectors f of R |sum_j f_j a_j| + |sum_j f_j lambda_j(x0)|

Tolerances come from ToleranceConfig: cross_check for identities between
independent formulas, construction for generated geometry.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..config import get_config
from ..exceptions import DimensionMismatch, DimensionTooLarge, DomainError
from ..processing.sweep import partition, run_partitioned
from .simplex import Simplex, metrics

logger = logging.getLogger(__name__)

SignVector = Tuple[int, ...]
FloatPoint = Tuple[float, ...]


@dataclass(frozen=True)
class Ball:
    """Closed Euclidean ball B(center; radius)."""
    center: FloatPoint
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError(f"Ball radius must be positive, got {self.radius}")

    @classmethod
    def unit(cls, n: int) -> "Ball":
        return cls(center=(0.0,) * n, radius=1.0)

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def center_array(self) -> np.ndarray:
        return np.asarray(self.center, dtype=float)


@dataclass(frozen=True)
class BallNormReport:
    """Projector norm on a ball and its maximising sign vector."""
    n: int
    norm: float
    witness: SignVector


@dataclass(frozen=True)
class BallReport:
    """Inscribed and circumscribed ball data of a simplex together with alpha and xi."""
    n: int
    alpha: float
    xi: float
    inradius: float
    incenter: FloatPoint
    tangent_points: Tuple[FloatPoint, ...]
    circumradius: float
    circumcenter: FloatPoint
    euler_ratio: float


@dataclass(frozen=True)
class PsiReport:
    """Projector norm of the regular simplex inscribed in B_n."""
    n: int
    norm: float
    a: int
    psi_a: float
    psi_a1: float
    # rational value of the norm when the maximising psi is rational
    exact: Optional[Fraction] = None

    @property
    def is_minimal(self) -> bool:
        """True where the norm is known to equal theta_n(B_n); above n = 4 it is only an upper bound."""
        return self.n <= 4


class Incircle(NamedTuple):
    center: FloatPoint
    radius: float
    tangents: Tuple[FloatPoint, ...]


class EnclosingBall(NamedTuple):
    center: FloatPoint
    radius: float


def _gradients(S: Simplex) -> Tuple[np.ndarray, np.ndarray]:
    """Rows a_j (shape (n+1, n)) and constants l_{n+1,j}."""
    L = S.lagrange_array
    return L[:S.n, :].T.copy(), L[S.n, :].copy()


def _resolve_ball(S: Simplex, B: Optional[Ball]) -> Ball:
    B = Ball.unit(S.n) if B is None else B
    if B.n != S.n:
        raise DimensionMismatch(f"Ball dimension {B.n} differs from simplex dimension {S.n}")
    return B


def alpha_ball_formulas(S: Simplex) -> Dict[str, float]:
    """alpha(B_n; S) evaluated four independent ways."""
    gradients, _ = _gradients(S)
    shape = metrics(S)
    return {
        'gradient_norms': float(np.linalg.norm(gradients, axis=1).sum()),
        'inverse_heights': math.fsum(1.0 / h for h in shape.heights),
        'inverse_inradius': 1.0 / incenter_inradius(S).radius,
        'surface_over_volume': shape.total_surface / (S.n * float(shape.volume)),
    }


def alpha_ball(S: Simplex, B: Optional[Ball] = None, cross_check: bool = True) -> float:
    """
    alpha(B; S) = rho * sum_j |a_j|; the center of B does not matter.

    With ``cross_check`` the other three formulas are evaluated and a warning
    is logged if any disagrees beyond the configured tolerance.
    """
    B = _resolve_ball(S, B)
    gradients, _ = _gradients(S)
    value = float(np.linalg.norm(gradients, axis=1).sum())
    if cross_check:
        tolerance = get_config().tolerance.cross_check
        for name, other in alpha_ball_formulas(S).items():
            if abs(other - value) > tolerance * max(1.0, value):
                logger.warning(f"alpha(B_n;S) cross-check {name} = {other!r} differs from {value!r}")
    return B.radius * value


def incenter_inradius(S: Simplex) -> Incircle:
    """
    Inscribed ball: r = 1/sum|a_j|, z = r sum_j |a_j| x^(j), y^(k) = z - (r/|a_k|) a_k.

    Tangent point y^(k) lies on the face lambda_k = 0.
    """
    gradients, _ = _gradients(S)
    norms = np.linalg.norm(gradients, axis=1)
    r = 1.0 / norms.sum()
    z = r * (norms[:, None] * S.vertex_array).sum(axis=0)
    tangents = tuple(tuple(z - (r / norms[k]) * gradients[k]) for k in range(S.n + 1))
    return Incircle(center=tuple(z), radius=float(r), tangents=tangents)


def xi_ball(S: Simplex, B: Optional[Ball] = None) -> float:
    """Absorption index of the ball B by S; 1 when B already lies in S."""
    B = _resolve_ball(S, B)
    gradients, constants = _gradients(S)
    at_center = gradients @ B.center_array + constants
    top = float((B.radius * np.linalg.norm(gradients, axis=1) - at_center).max())
    if top <= 0:
        return 1.0
    return (S.n + 1) * top + 1.0


def _ball_through(support: List[np.ndarray]) -> Tuple[Optional[np.ndarray], float]:
    """Smallest ball with every support point on its boundary (affinely independent points)."""
    if not support:
        return None, -1.0
    origin = support[0]
    if len(support) == 1:
        return origin.copy(), 0.0
    edges = np.array([p - origin for p in support[1:]])
    gram = edges @ edges.T
    weights = np.linalg.solve(gram, 0.5 * np.diag(gram))
    center = origin + weights @ edges
    return center, float(np.linalg.norm(center - origin))


def _outside(point: np.ndarray, center: Optional[np.ndarray], radius: float, eps: float) -> bool:
    return center is None or np.linalg.norm(point - center) > radius * (1.0 + eps) + eps


def _move_to_front(points: List[np.ndarray], end: int, support: List[np.ndarray],
                   dimension: int, eps: float) -> Tuple[Optional[np.ndarray], float]:
    center, radius = _ball_through(support)
    if len(support) == dimension + 1:
        return center, radius
    i = 0
    while i < end:
        point = points[i]
        if _outside(point, center, radius, eps):
            center, radius = _move_to_front(points, i, support + [point], dimension, eps)
            points.insert(0, points.pop(i))
        i += 1
    return center, radius


def minimum_enclosing_ball(points: Sequence[Sequence[float]], eps: Optional[float] = None) -> EnclosingBall:
    """Minimum enclosing ball by support-set recursion with move-to-front."""
    eps = get_config().tolerance.construction if eps is None else eps
    work = [np.asarray(p, dtype=float) for p in points]
    dimension = work[0].shape[0]
    center, radius = _move_to_front(work, len(work), [], dimension, eps)
    return EnclosingBall(center=tuple(float(c) for c in center), radius=radius)


def circumradius(S: Simplex) -> float:
    """
    Radius of the smallest ball containing S.

    Its boundary need not pass through every vertex (obtuse simplices).
    """
    return minimum_enclosing_ball(S.vertex_array).radius


def _sign_block(start: int, stop: int, n: int) -> np.ndarray:
    """Sign vectors for masks in [start, stop): f_j = -1 where bit j-1 is set, f_{n+1} = +1."""
    masks = np.arange(start, stop, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1
    signs = 1.0 - 2.0 * bits
    return np.hstack([signs, np.ones((len(masks), 1))])


def projector_norm_ball(S: Simplex, B: Optional[Ball] = None, workers: Optional[int] = None,
                        dimension_cap: Optional[int] = None, block_size: int = 2 ** 14) -> BallNormReport:
    """
    |P|_B by sweeping sign vectors; f and -f give the same value so f_{n+1} = +1.

    Raises:
        DimensionTooLarge: n above the configured sweep cap
    """
    B = _resolve_ball(S, B)
    settings = get_config().compute
    cap = settings.dimension_cap if dimension_cap is None else dimension_cap
    if S.n > cap:
        raise DimensionTooLarge(S.n, cap, "sign-vector sweep")
    workers = settings.max_workers if workers is None else max(1, workers)

    distances = np.linalg.norm(S.vertex_array - B.center_array, axis=1)
    if (distances > B.radius * (1 + get_config().tolerance.construction)).any():
        logger.warning(f"Some vertices lie outside the ball (max distance {distances.max():.6g} > {B.radius})")

    gradients, constants = _gradients(S)
    at_center = gradients @ B.center_array + constants
    n = S.n

    def task(start: int, stop: int) -> Tuple[float, int]:
        best, best_mask = -math.inf, start
        for block_start in range(start, stop, block_size):
            block_stop = min(stop, block_start + block_size)
            signs = _sign_block(block_start, block_stop, n)
            values = B.radius * np.linalg.norm(signs @ gradients, axis=1) + np.abs(signs @ at_center)
            k = int(values.argmax())
            if values[k] > best:
                best, best_mask = float(values[k]), block_start + k
        return best, best_mask

    results = run_partitioned(partition(2 ** n, workers), task, workers)
    best, best_mask = max(results, key=lambda item: (item[0], -item[1]))
    witness = tuple(int(v) for v in _sign_block(best_mask, best_mask + 1, n)[0])
    return BallNormReport(n=n, norm=best, witness=witness)


def regular_simplex(n: int, B: Optional[Ball] = None) -> Simplex:
    """
    Regular simplex inscribed in B.

    The centred standard basis of R^(n+1) is expressed in an orthonormal frame
    of the hyperplane sum x = 0 and scaled to the radius.
    """
    if n < 1:
        raise DomainError(f"Dimension must be at least 1, got {n}")
    B = Ball.unit(n) if B is None else B
    if B.n != n:
        raise DimensionMismatch(f"Ball dimension {B.n} differs from n = {n}")
    centred = np.eye(n + 1) - 1.0 / (n + 1)
    frame, _ = np.linalg.qr(centred[:, :n])
    coords = centred @ frame
    coords *= B.radius / math.sqrt(n / (n + 1))
    coords -= coords.mean(axis=0)
    return Simplex.from_floats(coords + B.center_array)


def psi(n: int, t: float) -> float:
    """psi(t) = (2 sqrt(n)/(n+1)) sqrt(t(n+1-t)) + |1 - 2t/(n+1)| on [0, n+1]."""
    m = n + 1
    return 2.0 * math.sqrt(n) / m * math.sqrt(t * (m - t)) + abs(1.0 - 2.0 * t / m)


def _psi_integer(n: int, k: int) -> Tuple[float, Optional[Fraction]]:
    """psi(k) for integer k with its rational value when n k (n+1-k) is a square."""
    m = n + 1
    radicand = n * k * (m - k)
    root = math.isqrt(radicand)
    if root * root == radicand:
        exact = Fraction(2 * root + abs(m - 2 * k), m)
        return float(exact), exact
    return (2.0 * math.sqrt(radicand) + abs(m - 2 * k)) / m, None


def _floor_t_minus(n: int) -> int:
    """a = floor((n+1)/2 - sqrt(n+1)/2), decided in integer arithmetic."""
    m = n + 1

    def fits(k: int) -> bool:
        # 2k <= m - sqrt(m)
        return m - 2 * k >= 0 and (m - 2 * k) ** 2 >= m

    a = max(0, int(math.floor((m - math.sqrt(m)) / 2)))
    while a > 0 and not fits(a):
        a -= 1
    while fits(a + 1):
        a += 1
    return a


def psi_norm(n: int) -> PsiReport:
    """
    |P*|_{B_n} = max(psi(a), psi(a+1)) for the regular inscribed simplex.

    For n >= 5 this is an upper bound on the minimal projector norm, not a
    proven minimum.
    """
    if n < 1:
        raise DomainError(f"Dimension must be at least 1, got {n}")
    a = _floor_t_minus(n)
    psi_a, exact_a = _psi_integer(n, a)
    psi_a1, exact_a1 = _psi_integer(n, a + 1)
    if psi_a >= psi_a1:
        norm, exact = psi_a, exact_a
    else:
        norm, exact = psi_a1, exact_a1

    slack = get_config().tolerance.construction
    if not math.sqrt(n) - slack <= norm <= math.sqrt(n + 1) + slack:
        logger.error(f"psi norm {norm} for n={n} is outside [sqrt(n), sqrt(n+1)]")
    return PsiReport(n=n, norm=norm, a=a, psi_a=psi_a, psi_a1=psi_a1, exact=exact)


def d_n_series(n_max: int) -> List[Tuple[int, float]]:
    """
    d_n = sqrt(n+1) - |P*|_{B_n} for n = 1..n_max.

    d_n is exactly 0 when n+1 is a perfect square.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    series = []
    for n in range(1, n_max + 1):
        report = psi_norm(n)
        root = math.isqrt(n + 1)
        if root * root == n + 1 and report.exact is not None:
            value = float(root - report.exact)
        else:
            value = math.sqrt(n + 1) - report.norm
        series.append((n, value))
    return series


def ball_report(S: Simplex, B: Optional[Ball] = None) -> BallReport:
    """alpha, xi, inscribed and circumscribed balls and the Euler ratio R/(n r)."""
    B = _resolve_ball(S, B)
    incircle = incenter_inradius(S)
    enclosing = minimum_enclosing_ball(S.vertex_array)
    ratio = enclosing.radius / (S.n * incircle.radius)
    if ratio < 1 - get_config().tolerance.construction:
        logger.error(f"Euler inequality violated: R/(n r) = {ratio!r}")
    return BallReport(
        n=S.n,
        alpha=alpha_ball(S, B),
        xi=xi_ball(S, B),
        inradius=incircle.radius,
        incenter=incircle.center,
        tangent_points=incircle.tangents,
        circumradius=enclosing.radius,
        circumcenter=enclosing.center,
        euler_ratio=ratio,
    )


__all__ = [
    'SignVector',
    'Ball',
    'BallNormReport',
    'BallReport',
    'PsiReport',
    'Incircle',
    'EnclosingBall',
    'alpha_ball_formulas',
    'alpha_ball',
    'incenter_inradius',
    'xi_ball',
    'minimum_enclosing_ball',
    'circumradius',
    'projector_norm_ball',
    'regular_simplex',
    'psi',
    'psi_norm',
    'd_n_series',
    'ball_report',
]
