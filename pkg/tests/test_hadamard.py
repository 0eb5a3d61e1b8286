import numpy as np
import pytest

from src.combinatorics.hadamard import hadamard, hadamard_simplex, is_supported_order
from src.exceptions import UnsupportedOrder


@pytest.mark.parametrize("m", [1, 2, 4, 8, 12, 16, 20, 24, 32, 44, 48])
def test_orthogonality(m):
    H = hadamard(m)
    A = H.array
    assert set(np.unique(A)) <= {-1, 1}
    assert np.array_equal(A @ A.T, m * np.eye(m, dtype=np.int64))


@pytest.mark.parametrize("m, construction", [(8, "sylvester(8)"), (12, "paley-I(q=11)")])
def test_construction_names(m, construction):
    assert hadamard(m).construction == construction


def test_kronecker_order():
    H = hadamard(40)
    assert H.construction == "sylvester(2) x paley-I(q=19)"
    assert np.array_equal(H.array @ H.array.T, 40 * np.eye(40, dtype=np.int64))


@pytest.mark.parametrize("m", [0, 3, 6, 10, 28])
def test_unsupported_orders(m):
    assert not is_supported_order(m)
    with pytest.raises(UnsupportedOrder):
        hadamard(m)


def test_normalized():
    H = hadamard(12).normalized()
    assert H.is_normalized()
    A = H.array
    assert np.array_equal(A @ A.T, 12 * np.eye(12, dtype=np.int64))


@pytest.mark.parametrize("n", [1, 3, 7, 11, 19])
def test_simplex_vertices_are_cube_vertices(n):
    S = hadamard_simplex(n)
    assert S.n == n
    assert all(x in (0, 1) for vertex in S.vertices for x in vertex)
    assert len(set(S.vertices)) == n + 1


def test_simplex_orientation():
    # reversed normalized Sylvester(4): the all-ones row comes last
    S = hadamard_simplex(3)
    assert S.vertices[-1] == (1, 1, 1)
