from fractions import Fraction

import pytest

from src.bounds.fixtures import MAX_DETERMINANTS
from src.combinatorics.maxdet import (
    Verdict, det_relations, h_search, hadamard_h, maxdet_diagnostic,
)
from src.exceptions import (
    DimensionTooLarge, LongRunningNotAllowed, NonBinaryEntry, NonSquareMatrix, SingularMatrix,
)
from src.numerics import RationalMatrix, det


def test_identity_is_consistent():
    report = maxdet_diagnostic([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert report.verdict is Verdict.CONSISTENT_WITH_MAXIMAL
    assert report.row_sums == (2, 2, 2)
    assert report.failing_rows == ()


def test_provably_non_maximal():
    report = maxdet_diagnostic([[1, 1, 0], [1, 0, 1], [1, 1, 1]])
    assert report.verdict is Verdict.PROVABLY_NON_MAXIMAL
    assert report.row_sums == (4, 2, 2)
    assert report.failing_rows == (1,)
    assert report.axial_diameters[0] == Fraction(1, 2)
    assert abs(report.det) == 1


@pytest.mark.parametrize("n, h", [(1, 1), (2, 1), (3, 2), (4, 3), (5, 5)])
def test_h_search_small(n, h):
    result = h_search(n, workers=2)
    assert result.h == h == MAX_DETERMINANTS[n].h
    assert abs(det(RationalMatrix(result.witness))) == h
    assert maxdet_diagnostic(result.witness).verdict is Verdict.CONSISTENT_WITH_MAXIMAL


def test_h_search_limits():
    with pytest.raises(LongRunningNotAllowed):
        h_search(6)
    with pytest.raises(DimensionTooLarge):
        h_search(7, allow_long=True)


@pytest.mark.slow
def test_h_search_six():
    assert h_search(6, allow_long=True).h == 9


def test_det_relations():
    relations = det_relations(3, 2)
    assert relations.g_next == 16
    assert relations.nu == Fraction(1, 3)


@pytest.mark.parametrize("n, h", [(1, 1), (3, 2), (7, 32), (11, 1458), (2, None), (4, None)])
def test_hadamard_h(n, h):
    assert hadamard_h(n) == h
    if h is not None:
        assert MAX_DETERMINANTS[n].h == h


def test_row_sums_on_random_matrices(rng):
    verdicts = []
    seen = 0
    while seen < 100:
        M = rng.integers(0, 2, size=(5, 5)).tolist()
        if det(RationalMatrix(M)) == 0:
            continue
        seen += 1
        report = maxdet_diagnostic(M)
        assert all(s >= 2 for s in report.row_sums)
        if abs(report.det) < MAX_DETERMINANTS[5].h:
            verdicts.append(report.verdict)
    assert Verdict.PROVABLY_NON_MAXIMAL in verdicts


@pytest.mark.parametrize("matrix, error", [
    ([[1, 2], [0, 1]], NonBinaryEntry),
    ([[1, 0, 1], [0, 1, 1]], NonSquareMatrix),
    ([[1, 1], [1, 1]], SingularMatrix),
])
def test_invalid_matrices(matrix, error):
    with pytest.raises(error):
        maxdet_diagnostic(matrix)
