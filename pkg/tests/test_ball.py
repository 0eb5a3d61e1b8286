import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from src.exceptions import DomainError
from src.geometry.ball import (
    Ball, alpha_ball, alpha_ball_formulas, ball_report, circumradius, d_n_series, incenter_inradius,
    minimum_enclosing_ball, projector_norm_ball, psi, psi_norm, regular_simplex, xi_ball,
)
from src.geometry.cube import alpha_cube
from src.geometry.simplex import build_simplex, lagrange_eval


def _random_simplex(rng, n):
    while True:
        coords = rng.integers(-97, 98, size=(n + 1, n))
        if abs(np.linalg.det(np.hstack([coords, np.ones((n + 1, 1))]))) > 0.5:
            return build_simplex([[Fraction(int(x), 97) for x in row] for row in coords])


@pytest.mark.parametrize("n, expected", [(1, 1.0), (2, 5 / 3), (3, 2.0), (4, 11 / 5)])
def test_psi_norm_small(n, expected):
    assert psi_norm(n).norm == pytest.approx(expected, abs=1e-12)


def test_psi_norm_perfect_square():
    report = psi_norm(8)
    assert report.exact == 3
    assert report.norm == 3.0
    assert not report.is_minimal
    assert psi_norm(4).is_minimal


def test_psi_matches_integer_evaluation():
    report = psi_norm(10)
    assert report.psi_a == pytest.approx(psi(10, report.a))
    assert report.psi_a1 == pytest.approx(psi(10, report.a + 1))


def test_d_series_zeros_and_bounds():
    series = dict(d_n_series(120))
    for m in range(2, 12):
        assert series[m * m - 1] == 0.0
    for n in range(1, 121):
        norm = psi_norm(n).norm
        assert math.sqrt(n) - 1e-12 <= norm <= math.sqrt(n + 1) + 1e-12
        if math.isqrt(n + 1) ** 2 != n + 1:
            assert series[n] > 0


def test_d_series_domain():
    with pytest.raises(DomainError):
        d_n_series(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_regular_simplex_norm_is_psi(n):
    S = regular_simplex(n)
    assert projector_norm_ball(S, workers=2).norm == pytest.approx(psi_norm(n).norm, abs=1e-9)


@pytest.mark.parametrize("n", range(2, 7))
def test_regular_simplex_in_unit_ball(n):
    S = regular_simplex(n)
    assert np.linalg.norm(S.vertex_array, axis=1) == pytest.approx(np.ones(n + 1), abs=1e-12)
    assert alpha_ball(S) == pytest.approx(n, abs=1e-9)
    assert xi_ball(S) == pytest.approx(n, abs=1e-9)
    assert incenter_inradius(S).radius == pytest.approx(1 / n, abs=1e-12)
    assert ball_report(S).euler_ratio == pytest.approx(1.0, abs=1e-9)


def test_alpha_formulas_agree(rng):
    for k in range(200):
        S = _random_simplex(rng, 2 + k % 5)
        values = list(alpha_ball_formulas(S).values())
        assert np.allclose(values, values[0], rtol=1e-9, atol=0)


def test_euler_inequality_is_strict_off_regular(rng):
    for k in range(50):
        report = ball_report(_random_simplex(rng, 2 + k % 4))
        assert report.euler_ratio > 1 + 1e-9


def test_tangent_points_lie_on_faces(rng):
    S = _random_simplex(rng, 3)
    incircle = incenter_inradius(S)
    for k, point in enumerate(incircle.tangents):
        assert float(lagrange_eval(S, k + 1, [Fraction(x) for x in point])) == pytest.approx(0, abs=1e-9)
        assert np.linalg.norm(np.array(point) - np.array(incircle.center)) == pytest.approx(incircle.radius)


def test_minimum_enclosing_ball_square():
    ball = minimum_enclosing_ball([[0, 0], [1, 0], [0, 1], [1, 1]])
    assert ball.center == pytest.approx((0.5, 0.5))
    assert ball.radius == pytest.approx(math.sqrt(2) / 2)


def test_circumradius_of_obtuse_triangle():
    S = build_simplex([[0, 0], [4, 0], [2, 1]])
    assert circumradius(S) == pytest.approx(2.0)


def test_alpha_scales_with_radius():
    S = regular_simplex(3)
    assert alpha_ball(S, Ball(center=(5.0, 0.0, 0.0), radius=2.0)) == pytest.approx(6.0)


def test_ball_requires_positive_radius():
    with pytest.raises(DomainError):
        Ball(center=(0.0, 0.0), radius=0.0)


def _inradius_lp(S):
    # max r subject to lambda_k(z) >= r |grad lambda_k| for every face
    L = S.lagrange_array
    gradients, constants = L[:-1, :].T, L[-1, :]
    norms = np.linalg.norm(gradients, axis=1)
    A_ub = np.hstack([-gradients, norms[:, None]])
    objective = np.zeros(S.n + 1)
    objective[-1] = -1.0
    result = linprog(objective, A_ub=A_ub, b_ub=constants, bounds=[(None, None)] * (S.n + 1))
    assert result.success
    return result.x[-1]


def test_inradius_matches_linear_program(rng):
    for k in range(20):
        S = _random_simplex(rng, 2 + k % 4)
        assert incenter_inradius(S).radius == pytest.approx(_inradius_lp(S), rel=1e-7)


def _sampled_ball_norm(rng, S, ball, samples):
    directions = rng.standard_normal(size=(samples, S.n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    points = ball.center_array + ball.radius * directions
    L = S.lagrange_array
    return float(np.abs(points @ L[:-1, :] + L[-1, :]).sum(axis=1).max())


@pytest.mark.parametrize("n, rtol", [(2, 1e-2), (3, 5e-2)])
def test_ball_norm_against_boundary_sampling(rng, n, rtol):
    ball = Ball(center=(0.3, -0.2, 0.1)[:n], radius=2.5)
    for _ in range(3):
        S = _random_simplex(rng, n)
        norm = projector_norm_ball(S, ball).norm
        sampled = _sampled_ball_norm(rng, S, ball, 100_000)
        assert sampled <= norm * (1 + 1e-9)
        assert sampled >= norm * (1 - rtol)


def test_xi_ball_dominates_alpha_ball(rng):
    for k in range(100):
        n = 1 + k % 4
        S = _random_simplex(rng, n)
        ball = Ball(center=tuple(rng.uniform(-1, 1, size=n)), radius=float(rng.uniform(0.05, 3.0)))
        assert xi_ball(S, ball) >= alpha_ball(S, ball) * (1 - 1e-12)


def test_segment_absorbing_interval():
    S = build_simplex([[Fraction(-1, 2)], [Fraction(1, 2)]])
    assert xi_ball(S) == pytest.approx(2.0)
    assert xi_ball(S, Ball(center=(0.0,), radius=1.0)) == pytest.approx(2.0)


def test_circumradius_of_flat_obtuse_triangle():
    S = build_simplex([[0, 0], [4, 0], [1, Fraction(1, 10)]])
    ball = minimum_enclosing_ball(S.vertex_array)
    assert circumradius(S) == pytest.approx(2.0)
    assert ball.center == pytest.approx((2.0, 0.0))


def test_alpha_ball_below_alpha_of_enclosing_cube(rng):
    for k in range(50):
        S = _random_simplex(rng, 2 + k % 4)
        assert alpha_ball(S) <= float(alpha_cube(S).alpha_q_prime) * (1 + 1e-12)
