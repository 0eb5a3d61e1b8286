"""
Dense exact linear algebra over the rationals.

Determinants use Bareiss fraction-free elimination on an integer-scaled copy
of the matrix; inverses run the same elimination on the augmented matrix
[B | I] followed by exact back substitution.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from ..exceptions import NonSquareMatrix, SingularMatrix, DimensionMismatch
from .rational import RationalLike, common_denominator, to_rational

logger = logging.getLogger(__name__)


class RationalMatrix:
    """Immutable dense matrix of exact rationals (row-major)."""

    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, rows: Sequence[Sequence[RationalLike]]):
        entries = tuple(tuple(to_rational(x) for x in row) for row in rows)
        width = len(entries[0]) if entries else 0
        if any(len(row) != width for row in entries):
            raise DimensionMismatch("Ragged rows in matrix input")
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'rows', len(entries))
        object.__setattr__(self, 'cols', width)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.entries)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.column(j) for j in range(other.cols)]
        return RationalMatrix([
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns]
            for row in self.entries
        ])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RationalMatrix([{body}])"

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self.entries]

    def to_float_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)

    def det(self) -> Fraction:
        return det(self)

    def inverse(self) -> "RationalMatrix":
        return inverse(self)


def _integer_rows(M: RationalMatrix) -> Tuple[List[List[int]], List[int]]:
    """Scale every row to integers; returns the integer rows and the row scales."""
    scales = [common_denominator(row) for row in M.entries]
    int_rows = [[int(x * d) for x in row] for row, d in zip(M.entries, scales)]
    return int_rows, scales


def _bareiss_forward(work: List[List[int]], n: int) -> int:
    """
    In-place Bareiss elimination on the first n columns of ``work``.

    Returns the sign of the row permutation, or 0 if a zero pivot column is
    met (singular leading block).
    """
    sign = 1
    previous = 1
    width = len(work[0])
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            factor = work[i][k]
            row_i, row_k = work[i], work[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    if n and work[n - 1][n - 1] == 0:
        return 0
    return sign


def det(M: RationalMatrix) -> Fraction:
    """Exact determinant via Bareiss fraction-free elimination."""
    if not M.is_square:
        raise NonSquareMatrix(f"Determinant needs a square matrix, got {M.rows}x{M.cols}")
    n = M.rows
    if n == 0:
        return Fraction(1)
    int_rows, scales = _integer_rows(M)
    sign = _bareiss_forward(int_rows, n)
    if sign == 0:
        return Fraction(0)
    denominator = 1
    for d in scales:
        denominator *= d
    return Fraction(sign * int_rows[n - 1][n - 1], denominator)


def inverse(M: RationalMatrix) -> RationalMatrix:
    """Exact inverse; raises SingularMatrix when det(M) = 0."""
    if not M.is_square:
        raise NonSquareMatrix(f"Inverse needs a square matrix, got {M.rows}x{M.cols}")
    n = M.rows
    int_rows, scales = _integer_rows(M)
    work = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(int_rows)]
    if _bareiss_forward(work, n) == 0:
        raise SingularMatrix("Matrix is singular (det = 0)")

    # Back substitution on the upper-triangular block; B^-1 with B = diag(scales) M
    solution = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        pivot = work[i][i]
        for j in range(n):
            acc = Fraction(work[i][n + j])
            for k in range(i + 1, n):
                if work[i][k]:
                    acc -= work[i][k] * solution[k][j]
            solution[i][j] = acc / pivot

    # M^-1 = B^-1 diag(scales)
    return RationalMatrix([[solution[i][j] * scales[j] for j in range(n)] for i in range(n)])


__all__ = ['RationalMatrix', 'det', 'inverse']
