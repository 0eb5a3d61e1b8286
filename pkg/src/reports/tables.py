"""
Table builders for small-dimension absorption and projector-norm values.

Each builder returns a list of row dataclasses, so the CLI can emit a table
as JSON records or as a CSV frame. Computed columns come from this package;
imported columns come from ``bounds.fixtures`` and are labelled as such.
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from ..bounds.fixtures import (
    PRINTED_LEGENDRE_BOUNDS, THETA_PRIME, THETA_UPPER_SMALL, XI_PRIME, XI_SMALL, max_determinant,
)
from ..bounds.legendre import theta_lower_cube
from ..combinatorics.hadamard import hadamard_simplex, is_supported_order
from ..config import get_config
from ..exceptions import UnknownName
from ..families.catalog import catalog, s_star
from ..families.search import search_01
from ..geometry.cube import projector_norm_cube, xi_cube
from ..geometry.simplex import Simplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class XiSmallRow:
    n: int
    lower: Optional[str]
    upper: Optional[str]
    construction: Optional[str]
    construction_xi: Optional[Fraction]


@dataclass(frozen=True)
class ThetaUpperRow:
    n: int
    bound: str
    construction: Optional[str]
    construction_norm: Optional[Fraction]


@dataclass(frozen=True)
class ThetaLowerRow:
    n: int
    printed: float
    computed: Optional[float]
    linear_bound: float
    max_bound: float
    deviation: Optional[float]
    flagged: bool


@dataclass(frozen=True)
class T6Row:
    n: int
    xi_prime: Optional[Fraction]
    theta_prime: Optional[Fraction]
    # 3 - 4/(n+1): the bilateral inequality applied with xi_n >= n
    theta_lower: Fraction
    expected_xi_prime: Fraction
    expected_theta_prime: Fraction
    status: str


def _label(bound) -> Optional[str]:
    return None if bound is None else f"{bound.relation} {bound.label}"


def _construction(n: int) -> Tuple[str, Simplex]:
    """Best simplex built here for xi_n: Hadamard, the plane triangle, then S*."""
    if is_supported_order(n + 1) and n > 0:
        return f"hadamard({n})", hadamard_simplex(n)
    if n == 2:
        return "T8", catalog("T8")
    return f"s-star({n})", s_star(n)


def xi_small_table() -> List[XiSmallRow]:
    """Known values and bounds of xi_n for n = 1..10 next to xi of the best construction here."""
    rows = []
    for n, bounds in sorted(XI_SMALL.items()):
        name, S = _construction(n)
        rows.append(XiSmallRow(
            n=n,
            lower=_label(bounds['lower']),
            upper=_label(bounds['upper']),
            construction=name,
            construction_xi=xi_cube(S).xi,
        ))
    return rows


def theta_upper_small_table(workers: Optional[int] = None) -> List[ThetaUpperRow]:
    """Best known upper estimates of theta_n for n = 1..7, with exact norms where a construction exists."""
    rows = []
    for n, bound in sorted(THETA_UPPER_SMALL.items()):
        name, norm = None, None
        if n == 2 or (n > 0 and is_supported_order(n + 1)):
            name, S = _construction(n)
            norm = projector_norm_cube(S, workers=workers).norm
        rows.append(ThetaUpperRow(n=n, bound=_label(bound), construction=name, construction_norm=norm))
    return rows


def theta_lower_table(tolerance: Optional[float] = None) -> List[ThetaLowerRow]:
    """
    Legendre lower bounds of theta_n for n = 1..54.

    Rows with a known h_n are recomputed from nu_n = h_n/n! and compared with
    the printed column; deviations above the tolerance are flagged and logged.
    """
    tolerance = get_config().tolerance.table if tolerance is None else tolerance
    rows = []
    for n, printed in sorted(PRINTED_LEGENDRE_BOUNDS.items()):
        linear = 3 - 4 / (n + 1)
        known = max_determinant(n)
        computed, deviation, flagged = None, None, False
        if known is not None:
            computed = theta_lower_cube(n, known.nu).legendre_bound
            deviation = abs(computed - printed)
            flagged = deviation > tolerance
            if flagged:
                logger.warning(f"theta_lower n={n}: computed {computed:.6f} differs from printed {printed} "
                               f"by {deviation:.2e}")
        best = computed if computed is not None else printed
        rows.append(ThetaLowerRow(
            n=n, printed=printed, computed=computed, linear_bound=linear,
            max_bound=max(best, linear), deviation=deviation, flagged=flagged,
        ))
    return rows


def _bilateral_theta_lower(n: int) -> Fraction:
    return 3 - Fraction(4, n + 1)


def t6_table(allow_long: Optional[bool] = None, workers: Optional[int] = None) -> List[T6Row]:
    """
    xi'_n and theta'_n for n = 1..7.

    n <= 5 come from the exhaustive (0,1)-search, n = 6 only when long runs
    are allowed, and n = 7 from the Hadamard simplex, whose values meet the
    lower bounds xi_7 >= 7 and theta_7 >= 5/2.
    """
    allow_long = get_config().compute.allow_long if allow_long is None else allow_long
    rows = []
    for n in range(1, 8):
        started = time.perf_counter()
        xi, theta = None, None
        if n == 7:
            S = hadamard_simplex(7)
            xi, theta = xi_cube(S).xi, projector_norm_cube(S, workers=workers).norm
            status = "hadamard"
        elif n < 6 or allow_long:
            xi = search_01(n, "xi", allow_long=allow_long, workers=workers).best
            theta = search_01(n, "norm", allow_long=allow_long, workers=workers).best
            status = "computed"
        else:
            status = "computed-if-enabled"
        rows.append(T6Row(
            n=n,
            xi_prime=xi,
            theta_prime=theta,
            theta_lower=_bilateral_theta_lower(n),
            expected_xi_prime=XI_PRIME[n],
            expected_theta_prime=THETA_PRIME[n],
            status=status,
        ))
        if xi is not None and (xi != XI_PRIME[n] or theta != THETA_PRIME[n]):
            logger.warning(f"t6 n={n}: computed ({xi}, {theta}) differs from ({XI_PRIME[n]}, {THETA_PRIME[n]})")
        logger.debug(f"t6 row n={n} ({status}) in {time.perf_counter() - started:.2f}s")
    return rows


_TABLES: Dict[str, Callable[..., list]] = {
    'xi-small': lambda allow_long, workers: xi_small_table(),
    'theta-upper-small': lambda allow_long, workers: theta_upper_small_table(workers),
    'theta-lower': lambda allow_long, workers: theta_lower_table(),
    't6': t6_table,
}

TABLE_NAMES = tuple(_TABLES)


def build_table(name: str, allow_long: Optional[bool] = None, workers: Optional[int] = None) -> list:
    """
    Build a table by name.

    Raises:
        UnknownName: name not in TABLE_NAMES
    """
    try:
        builder = _TABLES[name]
    except KeyError:
        raise UnknownName(f"Unknown table {name!r}; known: {', '.join(TABLE_NAMES)}") from None
    started = time.perf_counter()
    rows = builder(allow_long, workers)
    logger.info(f"Table {name}: {len(rows)} rows ({time.perf_counter() - started:.2f}s)")
    return rows


__all__ = [
    'XiSmallRow',
    'ThetaUpperRow',
    'ThetaLowerRow',
    'T6Row',
    'xi_small_table',
    'theta_upper_small_table',
    'theta_lower_table',
    't6_table',
    'TABLE_NAMES',
    'build_table',
]
