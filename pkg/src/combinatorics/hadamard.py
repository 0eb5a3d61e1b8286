"""
Hadamard matrices and the regular simplices they inscribe in the cube.

Supported orders: 1, 2, powers of two (Sylvester doubling), q + 1 for a prime
q = 3 mod 4 (Paley I), and Kronecker products of supported orders.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from ..exceptions import UnsupportedOrder
from ..geometry.simplex import Simplex, build_simplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HadamardMatrix:
    """A +-1 matrix H of order m with H H^T = m I."""
    order: int
    entries: Tuple[Tuple[int, ...], ...]
    construction: str

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def is_normalized(self) -> bool:
        return all(x == 1 for x in self.entries[0]) and all(row[0] == 1 for row in self.entries)

    def normalized(self) -> "HadamardMatrix":
        """Rows and columns negated so the first row and column are all 1."""
        H = self.array
        H = H * H[:, :1]
        H = H * H[:1, :]
        return HadamardMatrix(self.order, _as_tuples(H), self.construction)


def _as_tuples(H: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in H)


def _sylvester(m: int) -> np.ndarray:
    H = np.array([[1]], dtype=np.int64)
    while H.shape[0] < m:
        H = np.block([[H, H], [H, -H]])
    return H


def _quadratic_character(q: int) -> np.ndarray:
    chi = -np.ones(q, dtype=np.int64)
    chi[0] = 0
    chi[sorted({(x * x) % q for x in range(1, q)})] = 1
    return chi


def _paley_one(q: int) -> np.ndarray:
    """H = I + [[0, 1^T], [-1, Q]] with Q_ij = chi(j - i) for prime q = 3 mod 4."""
    chi = _quadratic_character(q)
    idx = np.arange(q)
    Q = chi[(idx[None, :] - idx[:, None]) % q]
    S = np.zeros((q + 1, q + 1), dtype=np.int64)
    S[0, 1:] = 1
    S[1:, 0] = -1
    S[1:, 1:] = Q
    return np.eye(q + 1, dtype=np.int64) + S


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q ** 0.5) + 1))


def _is_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def _is_paley_order(m: int) -> bool:
    q = m - 1
    return q >= 3 and q % 4 == 3 and _is_prime(q)


@lru_cache(maxsize=None)
def _plan(m: int) -> Optional[Tuple[str, int, int]]:
    """How to build order m: ('sylvester'|'paley', m, 0), ('kronecker', a, b) or None."""
    if _is_power_of_two(m):
        return ('sylvester', m, 0)
    if m % 4:
        return None
    if _is_paley_order(m):
        return ('paley', m, 0)
    for a in range(2, int(m ** 0.5) + 1):
        if m % a == 0 and _plan(a) is not None and _plan(m // a) is not None:
            return ('kronecker', a, m // a)
    return None


def _build(m: int) -> Tuple[np.ndarray, str]:
    kind, a, b = _plan(m)
    if kind == 'sylvester':
        return _sylvester(m), f"sylvester({m})"
    if kind == 'paley':
        return _paley_one(m - 1), f"paley-I(q={m - 1})"
    left, left_name = _build(a)
    right, right_name = _build(b)
    return np.kron(left, right), f"{left_name} x {right_name}"


def is_supported_order(m: int) -> bool:
    return m >= 1 and _plan(m) is not None


def hadamard(m: int) -> HadamardMatrix:
    """
    Construct a Hadamard matrix of order m.

    Raises:
        UnsupportedOrder: m = 3, m > 2 not divisible by 4, or no implemented construction
    """
    if m < 1 or _plan(m) is None:
        reason = "orders above 2 must be multiples of 4" if m > 2 and m % 4 else "no implemented construction"
        raise UnsupportedOrder(f"Hadamard order {m} is not supported ({reason})")

    H, construction = _build(m)
    if not np.array_equal(H @ H.T, m * np.eye(m, dtype=np.int64)):
        raise AssertionError(f"{construction} produced a non-orthogonal matrix of order {m}")

    logger.debug(f"Built Hadamard matrix of order {m} by {construction}")
    return HadamardMatrix(order=m, entries=_as_tuples(H), construction=construction)


def hadamard_simplex(n: int) -> Simplex:
    """
    Regular simplex with vertices among the vertices of Q_n, for n + 1 a supported order.

    The normalized matrix is read with rows and columns in reverse order; each
    row without its last (all-ones) entry is a vertex of [-1, 1]^n, mapped to
    Q_n by x -> (x + 1)/2. Edge length is sqrt((n+1)/2).
    """
    H = hadamard(n + 1).normalized().array[::-1, ::-1]
    vertices = [[(int(x) + 1) // 2 for x in row[:n]] for row in H]
    return build_simplex(vertices)


__all__ = ['HadamardMatrix', 'hadamard', 'hadamard_simplex', 'is_supported_order']
