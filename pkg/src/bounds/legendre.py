"""
Standardized Legendre polynomials chi_n and the lower bounds built on them.

chi_n is normalised by chi_n(1) = 1 and increases strictly on [1, inf), so
its inverse there is well defined. The set

    E_{n,gamma} = {x : sum_i |x_i| + |1 - sum_i x_i| <= gamma}

has measure chi_n(gamma)/n!, which gives the projector norm bounds

    theta_n      >= chi_n^-1(1/nu_n)          (cube)
    theta_n(B_n) >= chi_n^-1(kappa_n/sigma_n) (ball)
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

import numpy as np
from scipy.optimize import brentq

from ..config import get_config
from ..exceptions import DomainError

logger = logging.getLogger(__name__)

Parity = Literal['even', 'odd']


@dataclass(frozen=True)
class BoundsRow:
    """Lower estimates of theta_n for one dimension."""
    n: int
    legendre_bound: float
    linear_bound: float

    @property
    def max_bound(self) -> float:
        return max(self.legendre_bound, self.linear_bound)


def legendre_eval(n: int, t):
    """
    chi_n(t) by the three-term recurrence (k+1) chi_{k+1} = (2k+1) t chi_k - k chi_{k-1}.

    ``t`` may be a float or a numpy array.
    """
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}")
    t = np.asarray(t, dtype=float) if isinstance(t, (list, tuple, np.ndarray)) else float(t)
    previous, current = t * 0 + 1.0, t
    if n == 0:
        return previous
    for k in range(1, n):
        previous, current = current, ((2 * k + 1) * t * current - k * previous) / (k + 1)
    return current


def legendre_inv(n: int, s: float) -> float:
    """
    The t >= 1 with chi_n(t) = s.

    The root is bracketed by doubling from [1, 2] and then refined by Brent's
    method.

    Raises:
        DomainError: s < 1 or n < 1
    """
    if n < 1:
        raise DomainError(f"Degree must be at least 1, got {n}")
    s = float(s)
    if not s >= 1:
        raise DomainError(f"chi_n^-1 is defined on [1, inf), got s = {s}")
    if s == 1:
        return 1.0

    upper = 2.0
    while legendre_eval(n, upper) < s:
        upper *= 2.0
    root = brentq(lambda t: legendre_eval(n, t) - s, 1.0, upper, xtol=1e-15, rtol=4 * np.finfo(float).eps)

    residual = abs(legendre_eval(n, root) - s)
    tolerance = get_config().tolerance.legendre_inverse * max(1.0, s)
    if residual > tolerance:
        neighbours = (np.nextafter(root, 1.0), np.nextafter(root, np.inf))
        if min(abs(legendre_eval(n, t) - s) for t in neighbours) < residual:
            logger.warning(f"chi_{n}^-1({s}) = {root!r} misses the tolerance: residual {residual:.3g} > {tolerance:.3g}")
        else:
            # one ulp of t moves chi_n by more than the tolerance at this degree
            logger.debug(f"chi_{n}^-1({s}) residual {residual:.3g} above {tolerance:.3g} at float resolution")
    return float(root)


def slice_measure(n: int, gamma: float) -> float:
    """mes_n(E_{n,gamma}) = chi_n(gamma)/n!."""
    if not gamma >= 1:
        raise DomainError(f"gamma must be at least 1, got {gamma}")
    return float(legendre_eval(n, gamma)) / math.factorial(n)


def theta_lower_cube(n: int, nu_n: Union[Fraction, float]) -> BoundsRow:
    """
    max(chi_n^-1(1/nu_n), 3 - 4/(n+1)) as a BoundsRow.

    Args:
        n: Dimension
        nu_n: Maximum volume of a simplex in Q_n (h_n/n!)
    """
    if not nu_n > 0:
        raise DomainError(f"nu_n must be positive, got {nu_n}")
    return BoundsRow(
        n=n,
        legendre_bound=legendre_inv(n, 1 / float(nu_n)) if n >= 1 else 1.0,
        linear_bound=3 - 4 / (n + 1),
    )


def _log_ball_volume(n: int) -> float:
    k, odd = divmod(n, 2)
    if not odd:
        return k * math.log(math.pi) - math.log(math.factorial(k))
    return (math.log(2) + math.log(math.factorial(k)) + k * math.log(4 * math.pi)
            - math.log(math.factorial(2 * k + 1)))


def _log_regular_simplex_volume(n: int) -> float:
    return 0.5 * math.log(n + 1) + 0.5 * n * math.log((n + 1) / n) - math.log(math.factorial(n))


def ball_volume(n: int) -> float:
    """kappa_n = vol B_n, from pi^k/k! (n = 2k) and 2 k! (4 pi)^k/(2k+1)! (n = 2k+1)."""
    if n < 1:
        raise DomainError(f"Dimension must be at least 1, got {n}")
    return math.exp(_log_ball_volume(n))


def regular_simplex_volume(n: int) -> float:
    """sigma_n, the volume of a regular simplex inscribed in B_n."""
    if n < 1:
        raise DomainError(f"Dimension must be at least 1, got {n}")
    return math.exp(_log_regular_simplex_volume(n))


def theta_lower_ball(n: int) -> float:
    """theta_n(B_n) >= chi_n^-1(kappa_n/sigma_n)."""
    if n < 1:
        raise DomainError(f"Dimension must be at least 1, got {n}")
    ratio = math.exp(_log_ball_volume(n) - _log_regular_simplex_volume(n))
    return legendre_inv(n, max(1.0, ratio))


def theta_lower_simplex_ball(S) -> float:
    """
    |P|_{B_n} >= chi_n^-1(kappa_n/vol S) for the projector with nodes at the
    vertices of S, S contained in the unit ball.
    """
    ratio = ball_volume(S.n) / float(S.volume)
    if ratio < 1:
        raise DomainError(f"vol S = {float(S.volume)} exceeds kappa_{S.n}; S cannot lie in B_{S.n}")
    return legendre_inv(S.n, ratio)


def chi_inv_lower_closed_form(k: int, s: float, parity: Parity) -> float:
    """
    Closed-form lower bounds for chi^-1 of even or odd degree.

        chi_{2k}^-1(s)   > ((k!)^2 s / (2k)!)^(1/(2k))
        chi_{2k+1}^-1(s) > ((k+1)! k! s / (2k+1)!)^(1/(2k+1))
    """
    if not s >= 1:
        raise DomainError(f"s must be at least 1, got {s}")
    if parity == 'even':
        if k < 1:
            raise DomainError(f"Even degree needs k >= 1, got {k}")
        log_value = 2 * math.lgamma(k + 1) + math.log(s) - math.lgamma(2 * k + 1)
        return math.exp(log_value / (2 * k))
    if parity == 'odd':
        if k < 0:
            raise DomainError(f"Odd degree needs k >= 0, got {k}")
        log_value = (math.lgamma(k + 2) + math.lgamma(k + 1) + math.log(s)
                     - math.lgamma(2 * k + 2))
        return math.exp(log_value / (2 * k + 1))
    raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")


def theta_lower_constant() -> float:
    """c with theta_n(B_n) > c sqrt(n): cbrt(pi) / (sqrt(12 e) * 3^(1/6))."""
    return math.pi ** (1 / 3) / (math.sqrt(12 * math.e) * 3 ** (1 / 6))


__all__ = [
    'Parity',
    'BoundsRow',
    'legendre_eval',
    'legendre_inv',
    'slice_measure',
    'theta_lower_cube',
    'ball_volume',
    'regular_simplex_volume',
    'theta_lower_ball',
    'theta_lower_simplex_ball',
    'chi_inv_lower_closed_form',
    'theta_lower_constant',
]
