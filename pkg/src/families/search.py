"""
Exhaustive minimisation of xi(S) and |P|_{Q_n} over (0,1)-simplices.

One vertex is fixed at the origin (the last vertex of every candidate) and the
other n range over all combinations of nonzero cube vertices, so the search
examines C(2^n - 1, n) candidates: 169,911 at n = 5 and 67,945,521 at n = 6.

With the origin as vertex n+1 and M the matrix of the other vertices,

    L = | M^-1   -M^-1 1 |
        |  0        1    |

so a certified integer adjugate of M gives every lambda_j with denominator |det M|.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from ..combinatorics.maxdet import check_search_size
from ..exceptions import DomainError
from ..geometry.simplex import Simplex, build_simplex
from ..processing.combinations import CandidateBatch, mask_rows, search_combinations

logger = logging.getLogger(__name__)

_FLOAT_SLACK = 1e-9


class Objective(str, Enum):
    XI = "xi"
    NORM = "norm"


@dataclass(frozen=True)
class SearchResult:
    """Minimum of the objective over (0,1)-simplices of dimension n."""
    n: int
    objective: Objective
    best: Fraction
    witness: Simplex
    examined: int
    nondegenerate: int
    minimizers: int


def _lagrange_numerators(batch: CandidateBatch, n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Integer coefficients (B, n, n+1), constants (B, n+1) and denominators (B,)."""
    sign = np.sign(batch.det)
    inverse = batch.adj * sign[:, None, None]
    denominator = np.abs(batch.det)
    coefficients = np.concatenate([inverse, -inverse.sum(axis=2)[:, :, None]], axis=2)
    constants = np.zeros((len(denominator), n + 1), dtype=np.int64)
    constants[:, n] = denominator
    return coefficients, constants, denominator


def objective_values(batch: CandidateBatch, n: int, objective: Objective) -> Tuple[np.ndarray, np.ndarray]:
    """Numerators and denominators of xi(S) or |P|_{Q_n} for every candidate."""
    coefficients, constants, denominator = _lagrange_numerators(batch, n)
    if objective is Objective.XI:
        per_face = np.maximum(0, -coefficients).sum(axis=1) - constants
        top = per_face.max(axis=1)
        numerator = np.where(top > 0, (n + 1) * top + denominator, denominator)
        return numerator, denominator

    vertices = mask_rows(np.arange(2 ** n), n)
    values = np.einsum('vi,bij->bvj', vertices, coefficients) + constants[:, None, :]
    return np.abs(values).sum(axis=2).max(axis=1), denominator


class MinObjectiveReducer:
    """Least objective value, first (lexicographically least) witness and minimiser count."""

    def __init__(self, n: int, objective: Objective):
        self.n = n
        self.objective = objective
        self.best: Optional[Fraction] = None
        self.witness: Optional[Tuple[int, ...]] = None
        self.minimizers = 0
        self.examined = 0
        self.nondegenerate = 0

    def consume(self, batch: CandidateBatch) -> None:
        self.examined += batch.examined
        self.nondegenerate += len(batch.det)
        if not len(batch.det):
            return
        numerator, denominator = objective_values(batch, self.n, self.objective)
        approx = numerator / denominator
        limit = approx.min() + _FLOAT_SLACK
        if self.best is not None:
            limit = min(limit, float(self.best) + _FLOAT_SLACK)
        for k in np.nonzero(approx <= limit)[0]:
            value = Fraction(int(numerator[k]), int(denominator[k]))
            if self.best is None or value < self.best:
                self.best, self.witness, self.minimizers = value, tuple(int(m) for m in batch.combos[k]), 1
            elif value == self.best:
                self.minimizers += 1

    def merge(self, other: "MinObjectiveReducer") -> None:
        self.examined += other.examined
        self.nondegenerate += other.nondegenerate
        if other.best is None:
            return
        if self.best is None or other.best < self.best:
            self.best, self.witness, self.minimizers = other.best, other.witness, other.minimizers
        elif other.best == self.best:
            self.minimizers += other.minimizers


def search_01(n: int, objective="xi", allow_long: Optional[bool] = None,
              workers: Optional[int] = None) -> SearchResult:
    """
    min xi(S) (xi'_n) or min |P|_{Q_n} (theta'_n) over simplices with ver(S) in ver(Q_n).

    Args:
        n: Dimension, at most 6 (6 only with allow_long)
        objective: "xi" or "norm"
        allow_long: Permit the n = 6 search (configuration default when None)
        workers: Thread count

    Returns:
        SearchResult with the witness whose vertex masks are lexicographically least

    Raises:
        DimensionTooLarge: n > 6
        LongRunningNotAllowed: n = 6 without allow_long
    """
    try:
        objective = Objective(objective)
    except ValueError:
        raise DomainError(f"objective must be 'xi' or 'norm', got {objective!r}") from None
    check_search_size(n, allow_long, "search_01")

    started = time.perf_counter()
    reducer = search_combinations(n, lambda: MinObjectiveReducer(n, objective), workers=workers,
                                  label=f"search_01(n={n}, {objective.value})")
    rows = [list(map(int, row)) for row in mask_rows(np.array(reducer.witness), n)]
    witness = build_simplex(rows + [[0] * n])

    logger.info(f"search_01 n={n} {objective.value}: min = {reducer.best} "
                f"({reducer.minimizers} minimisers, {reducer.nondegenerate:,}/{reducer.examined:,} "
                f"nondegenerate, {time.perf_counter() - started:.2f}s)")
    return SearchResult(
        n=n,
        objective=objective,
        best=reducer.best,
        witness=witness,
        examined=reducer.examined,
        nondegenerate=reducer.nondegenerate,
        minimizers=reducer.minimizers,
    )


__all__ = ['Objective', 'SearchResult', 'objective_values', 'MinObjectiveReducer', 'search_01']
