"""
Maximal determinants of (0,1)-matrices.

For a nonsingular (0,1)-matrix M of order n, the simplex with vertices at the
rows of M and at the origin has vertex matrix

    A = | M  1 |
        | 0  1 |

and every row of its L = A^-1 satisfies sum_j |l_ij| >= 2. A row sum above 2
proves |det M| < h_n; row sums all equal to 2 are only a necessary condition
for maximality.
"""

import logging
import math
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from ..config import get_config
from ..exceptions import (
    DimensionTooLarge, DomainError, LongRunningNotAllowed, NonBinaryEntry, NonSquareMatrix, SingularMatrix,
)
from ..geometry.simplex import build_simplex
from ..numerics import RationalMatrix, det
from ..processing.combinations import CandidateBatch, candidate_count, mask_rows, search_combinations
from .hadamard import is_supported_order

logger = logging.getLogger(__name__)

H_SEARCH_LIMIT = 6


class Verdict(str, Enum):
    CONSISTENT_WITH_MAXIMAL = "ConsistentWithMaximal"
    PROVABLY_NON_MAXIMAL = "ProvablyNonMaximal"


@dataclass(frozen=True)
class MaxdetDiagnostic:
    """Row sums of the associated simplex and the resulting verdict."""
    n: int
    det: int
    row_sums: Tuple[Fraction, ...]
    verdict: Verdict
    # 1-based rows with sum above 2
    failing_rows: Tuple[int, ...]
    axial_diameters: Tuple[Fraction, ...]


@dataclass(frozen=True)
class HSearchResult:
    """Exhaustive maximum of |det| over (0,1)-matrices of order n."""
    n: int
    h: int
    witness: Tuple[Tuple[int, ...], ...]
    examined: int
    nondegenerate: int


@dataclass(frozen=True)
class DetRelations:
    n: int
    h: int
    g_next: int
    nu: Fraction


def _binary_matrix(M) -> RationalMatrix:
    if not isinstance(M, RationalMatrix):
        M = RationalMatrix(M)
    if not M.is_square:
        raise NonSquareMatrix(f"Expected a square matrix, got {M.rows}x{M.cols}")
    for i, row in enumerate(M.entries, start=1):
        for j, x in enumerate(row, start=1):
            if x not in (0, 1):
                raise NonBinaryEntry(f"Entry ({i},{j}) = {x} is not 0 or 1")
    return M


def maxdet_diagnostic(M) -> MaxdetDiagnostic:
    """
    Test the row-sum condition on a nonsingular (0,1)-matrix.

    Args:
        M: Square 0/1 matrix (RationalMatrix or nested sequences)

    Returns:
        MaxdetDiagnostic; ConsistentWithMaximal does not prove |det M| = h_n

    Raises:
        NonSquareMatrix, NonBinaryEntry, SingularMatrix
    """
    M = _binary_matrix(M)
    n = M.rows
    d = det(M)
    if d == 0:
        raise SingularMatrix(f"(0,1)-matrix of order {n} is singular")

    S = build_simplex(list(M.entries) + [[0] * n])
    row_sums = tuple(sum((abs(x) for x in S.L.row(i)), Fraction(0)) for i in range(n))
    failing = tuple(i + 1 for i, s in enumerate(row_sums) if s > 2)
    if any(s < 2 for s in row_sums):
        logger.error(f"Row sum below 2 for a (0,1)-matrix of order {n}: {row_sums}")

    verdict = Verdict.PROVABLY_NON_MAXIMAL if failing else Verdict.CONSISTENT_WITH_MAXIMAL
    return MaxdetDiagnostic(
        n=n,
        det=int(d),
        row_sums=row_sums,
        verdict=verdict,
        failing_rows=failing,
        axial_diameters=tuple(2 / s for s in row_sums),
    )


class MaxDetReducer:
    """Largest |det| with the lexicographically least witness."""

    def __init__(self):
        self.best = 0
        self.witness: Optional[Tuple[int, ...]] = None
        self.examined = 0
        self.nondegenerate = 0

    def consume(self, batch: CandidateBatch) -> None:
        self.examined += batch.examined
        self.nondegenerate += len(batch.det)
        if not len(batch.det):
            return
        values = np.abs(batch.det)
        k = int(values.argmax())
        if values[k] > self.best:
            self.best, self.witness = int(values[k]), tuple(int(m) for m in batch.combos[k])

    def merge(self, other: "MaxDetReducer") -> None:
        self.examined += other.examined
        self.nondegenerate += other.nondegenerate
        if other.best > self.best:
            self.best, self.witness = other.best, other.witness


def check_search_size(n: int, allow_long: Optional[bool], what: str) -> None:
    """Refuse n above the exhaustive limit, and n = 6 unless long runs are allowed."""
    if n < 1:
        raise DomainError(f"{what} needs n >= 1, got {n}")
    if n > H_SEARCH_LIMIT:
        raise DimensionTooLarge(n, H_SEARCH_LIMIT, what)
    allow_long = get_config().compute.allow_long if allow_long is None else allow_long
    if n == H_SEARCH_LIMIT and not allow_long:
        raise LongRunningNotAllowed(f"{what} at n = {n} ({candidate_count(n):,} candidates)")


def h_search(n: int, allow_long: Optional[bool] = None, workers: Optional[int] = None) -> HSearchResult:
    """
    Exhaustive h_n for n <= 6.

    Raises:
        DimensionTooLarge: n > 6
        LongRunningNotAllowed: n = 6 without allow_long
    """
    check_search_size(n, allow_long, "h_search")
    started = time.perf_counter()
    reducer = search_combinations(n, MaxDetReducer, workers=workers, label=f"h_search(n={n})")
    witness = tuple(tuple(int(x) for x in row) for row in mask_rows(np.array(reducer.witness), n))
    logger.info(f"h_{n} = {reducer.best} ({reducer.nondegenerate:,}/{reducer.examined:,} nonsingular, "
                f"{time.perf_counter() - started:.2f}s)")
    return HSearchResult(n=n, h=reducer.best, witness=witness,
                         examined=reducer.examined, nondegenerate=reducer.nondegenerate)


def det_relations(n: int, h_n: int) -> DetRelations:
    """g_{n+1} = 2^n h_n and nu_n = h_n / n!."""
    if h_n <= 0:
        raise DomainError(f"h_n must be positive, got {h_n}")
    return DetRelations(n=n, h=h_n, g_next=2 ** n * h_n, nu=Fraction(h_n, math.factorial(n)))


def hadamard_h(n: int) -> Optional[int]:
    """h_n = (n+1)^((n+1)/2) / 2^n when n+1 is a supported Hadamard order, else None."""
    m = n + 1
    if m == 1 or not is_supported_order(m):
        return None
    return m ** (m // 2) // 2 ** n


__all__ = [
    'Verdict',
    'MaxdetDiagnostic',
    'HSearchResult',
    'DetRelations',
    'MaxDetReducer',
    'maxdet_diagnostic',
    'check_search_size',
    'h_search',
    'det_relations',
    'hadamard_h',
]
