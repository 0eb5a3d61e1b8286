from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.exceptions import InputFormatError, NonSquareMatrix, SingularMatrix
from src.numerics import RationalMatrix, common_denominator, det, format_rational, inverse, parse_rational, to_rational


def square_matrices(size: int):
    return st.lists(
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=size, max_size=size),
        min_size=size, max_size=size,
    )


@pytest.mark.parametrize("text, expected", [
    ("3/4", Fraction(3, 4)),
    ("-2", Fraction(-2)),
    (" 10 / 4 ", Fraction(5, 2)),
    ("+7", Fraction(7)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["0.1", "1e3", "1/0", "a/b", ""])
def test_parse_rational_rejects_inexact_or_malformed(text):
    with pytest.raises(InputFormatError):
        parse_rational(text)


def test_to_rational_refuses_floats():
    with pytest.raises(InputFormatError):
        to_rational(0.5)
    assert to_rational("1/3") == Fraction(1, 3)
    assert to_rational(4) == 4


def test_format_rational():
    assert format_rational(Fraction(13, 3)) == "13/3"
    assert format_rational(Fraction(6, 2)) == "3"


def test_common_denominator():
    assert common_denominator([Fraction(1, 4), Fraction(1, 6), Fraction(2)]) == 12
    assert common_denominator([]) == 1


def test_det_and_inverse_small():
    M = RationalMatrix([[1, 2], [3, 4]])
    assert det(M) == -2
    assert inverse(M) == RationalMatrix([[-2, 1], ["3/2", "-1/2"]])


def test_singular_matrix():
    M = RationalMatrix([[1, 2], [2, 4]])
    assert det(M) == 0
    with pytest.raises(SingularMatrix):
        inverse(M)


def test_non_square():
    M = RationalMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(NonSquareMatrix):
        det(M)


@settings(max_examples=60, deadline=None)
@given(square_matrices(3))
def test_inverse_is_exact(rows):
    M = RationalMatrix(rows)
    assume(det(M) != 0)
    assert inverse(M) @ M == RationalMatrix.identity(3)
    assert M @ inverse(M) == RationalMatrix.identity(3)


@settings(max_examples=60, deadline=None)
@given(square_matrices(3), square_matrices(3))
def test_det_is_multiplicative(a, b):
    A, B = RationalMatrix(a), RationalMatrix(b)
    assert det(A @ B) == det(A) * det(B)


@settings(max_examples=40, deadline=None)
@given(square_matrices(4))
def test_det_matches_float(rows):
    M = RationalMatrix(rows)
    assert float(det(M)) == pytest.approx(np.linalg.det(M.to_float_array()), abs=1e-8)


def _cofactor_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * entry * _cofactor_det(minor)
    return total


def _adjugate(rows):
    n = len(rows)
    if n == 1:
        return [[Fraction(1)]]
    return [
        [(-1) ** (i + j) * _cofactor_det([r[:i] + r[i + 1:] for k, r in enumerate(rows) if k != j])
         for j in range(n)]
        for i in range(n)
    ]


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=5).flatmap(square_matrices))
def test_det_and_inverse_match_cofactor_expansion(rows):
    M = RationalMatrix(rows)
    expected = _cofactor_det(M.to_lists())
    assert det(M) == expected
    if expected == 0:
        with pytest.raises(SingularMatrix):
            inverse(M)
    else:
        adjugate = _adjugate(M.to_lists())
        assert inverse(M).to_lists() == [[entry / expected for entry in row] for row in adjugate]
