from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from src.exceptions import NotInsideCube, PieceBoundary, UnknownName, ZeroNormal
from src.families.catalog import TAU, catalog, catalog_names, family_v, resolve, s_star
from src.families.volumes import (
    cut_volumes, halfspace_cube_volume, is_equisecting, is_perfect, v_closed_form,
)
from src.geometry.cube import xi_cube
from src.geometry.simplex import build_simplex

GRID = [Fraction(1, 3) + Fraction(k, 36) for k in range(13)]
THIRD = Fraction(1, 3)

coefficient = st.fractions(min_value=-4, max_value=4, max_denominator=7)


def test_s1_and_s2_absorption(s1, s2):
    assert xi_cube(s1).xi == 3
    assert xi_cube(s2).xi == 3


def test_s1_is_not_perfect(s1):
    report = is_perfect(s1)
    assert not report.is_perfect
    assert len(report.face_incident_vertices) == 4


def test_s2_is_perfect(s2):
    report = is_perfect(s2)
    assert report.is_perfect
    assert len(report.face_incident_vertices) == 8
    assert report.xi == 3


def test_family_v_grid():
    for s in GRID:
        for t in GRID:
            V = family_v(s, t)
            assert V.volume == Fraction(1, 120)
            assert V.inside_cube()
            inside = Fraction(4, 9) <= s <= Fraction(5, 9) and Fraction(4, 9) <= t <= Fraction(5, 9)
            assert (xi_cube(V).xi == 5) is inside


INNER = [t for t in GRID if Fraction(4, 9) <= t <= Fraction(5, 9)]


def test_family_v_perfect_in_central_square():
    assert len(INNER) == 5
    for s in INNER:
        for t in INNER:
            assert is_perfect(family_v(s, t)).is_perfect, (s, t)


def test_equisecting_simplices(s1):
    assert cut_volumes(family_v("1/2", "1/2")).v == (THIRD,) * 6
    assert cut_volumes(s1).v == (Fraction(1, 6),) * 4
    assert is_equisecting(s1)
    assert not is_equisecting(build_simplex([[0, 0], [1, 0], [0, 1]]))


def test_t8_cut_areas():
    volumes = cut_volumes(catalog("T8")).v
    assert all(float(v) == pytest.approx((3 - 5 ** 0.5) / 4, abs=1e-12) for v in volumes)
    assert TAU == pytest.approx(0.3819660112501051)


# k/61 never lands on a piece boundary (denominators 3 and 9)
@pytest.mark.parametrize("k", range(1, 21))
def test_closed_form_matches_cut_volumes(k):
    t = THIRD + Fraction(k, 61)
    s = Fraction(2, 3) - Fraction(k, 61)
    v1_t, v2_t = v_closed_form(t)
    v1_s, v2_s = v_closed_form(s)
    assert cut_volumes(family_v(s, t)).v == (v1_t, v2_t, THIRD, THIRD, v2_s, v1_s)


@pytest.mark.parametrize("t", [Fraction(1, 4) + Fraction(k, 47) for k in range(20)])
def test_shift_identity(t):
    assert v_closed_form(t).v2 == v_closed_form(t + Fraction(1, 9)).v1


def test_closed_form_value():
    pair = v_closed_form(Fraction(2, 5))
    assert pair.v2 == THIRD
    assert float(pair.v1) == pytest.approx(0.33704, abs=1e-5)


def test_piece_boundary():
    with pytest.raises(PieceBoundary) as info:
        v_closed_form(Fraction(4, 9))
    error = info.value
    assert error.t == Fraction(4, 9)
    assert Fraction(4, 9) in error.boundaries
    assert error.v1_limits == (THIRD, THIRD)
    assert error.v2_limits[0] == error.v2_limits[1]


@given(st.lists(coefficient, min_size=1, max_size=5), st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_halfspace_and_complement(a, b):
    assume(any(a))
    below = halfspace_cube_volume(a, b)
    above = halfspace_cube_volume([-x for x in a], -b)
    assert 0 <= below <= 1
    assert below + above == 1


def test_halfspace_examples():
    assert halfspace_cube_volume([1, 1], 1) == Fraction(1, 2)
    assert halfspace_cube_volume([1, 0, 0], Fraction(1, 3)) == Fraction(1, 3)
    assert halfspace_cube_volume([1, 1, 1], 1) == Fraction(1, 6)
    with pytest.raises(ZeroNormal):
        halfspace_cube_volume([0, 0], 1)


def test_cut_volumes_require_cube():
    with pytest.raises(NotInsideCube):
        cut_volumes(build_simplex([[0, 0], [2, 0], [0, 1]]))
    with pytest.raises(NotInsideCube):
        is_perfect(build_simplex([[0, 0], [2, 0], [0, 1]]))


def test_catalog_and_resolve():
    assert catalog_names() == ['H7', 'S1', 'S2', 'T8']
    assert catalog("s1") == resolve("S1")
    assert resolve("s-star(4)") == s_star(4)
    assert resolve("s-star", n=5) == s_star(5)
    assert resolve("v(1/2, 4/9)") == family_v("1/2", "4/9")
    assert resolve("hadamard(3)").n == 3
    assert xi_cube(catalog("H7")).xi == 7
    with pytest.raises(UnknownName):
        resolve("s9")


def test_perfect_simplices_seen_are_equisecting(s2):
    assert cut_volumes(s2).v == (Fraction(1, 4),) * 4
    for s, t in [(Fraction(4, 9), Fraction(5, 9)), (Fraction(1, 2), Fraction(17, 36))]:
        V = family_v(s, t)
        assert is_perfect(V).is_perfect
        assert is_equisecting(V)


def _cut_fractions(rng, S, samples):
    # share of uniform points of Q_n on the far side of every face hyperplane
    L = S.lagrange_array
    points = rng.random(size=(samples, S.n))
    return ((points @ L[:-1, :] + L[-1, :]) <= 0).mean(axis=0)


@pytest.mark.parametrize("name", ["S1", "S2", "V(1/2,2/5)"])
def test_cut_volumes_against_sampling(rng, name):
    S = resolve(name)
    samples = 200_000
    estimates = _cut_fractions(rng, S, samples)
    for exact, estimate in zip(cut_volumes(S).v, estimates):
        p = float(exact)
        assert abs(estimate - p) <= 5 * np.sqrt(p * (1 - p) / samples) + 1e-9
