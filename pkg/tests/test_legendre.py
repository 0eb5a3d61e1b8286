import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import eval_legendre, gamma

from src.bounds.fixtures import MAX_DETERMINANTS, PRINTED_LEGENDRE_BOUNDS
from src.bounds.legendre import (
    ball_volume, chi_inv_lower_closed_form, legendre_eval, legendre_inv, regular_simplex_volume,
    slice_measure, theta_lower_ball, theta_lower_constant, theta_lower_cube, theta_lower_simplex_ball,
)
from src.config import get_config
from src.exceptions import DomainError
from src.geometry.ball import regular_simplex


@pytest.mark.parametrize("n", [0, 1, 2, 5, 12])
def test_recurrence_matches_scipy(n):
    t = np.linspace(1.0, 3.0, 9)
    assert legendre_eval(n, t) == pytest.approx(eval_legendre(n, t), rel=1e-12)


def test_chi_at_one():
    for n in range(0, 30):
        assert legendre_eval(n, 1.0) == pytest.approx(1.0)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=40), st.floats(min_value=1.0, max_value=50.0))
def test_inverse_round_trip(n, t):
    s = float(legendre_eval(n, t))
    assert legendre_inv(n, s) == pytest.approx(t, rel=1e-9)


def test_inverse_domain():
    with pytest.raises(DomainError):
        legendre_inv(3, 0.5)
    with pytest.raises(DomainError):
        legendre_inv(0, 2.0)
    assert legendre_inv(4, 1.0) == 1.0


@pytest.mark.parametrize("n, expected", [(2, 1.291), (4, 1.3478), (10, 1.6699), (20, 2.0159)])
def test_printed_bounds_reproduced(n, expected):
    row = theta_lower_cube(n, MAX_DETERMINANTS[n].nu)
    assert row.legendre_bound == pytest.approx(expected, abs=5e-4)
    assert row.linear_bound == pytest.approx(3 - 4 / (n + 1))


def test_legendre_overtakes_linear_first_at_53():
    crossing = [n for n, value in sorted(PRINTED_LEGENDRE_BOUNDS.items()) if value > 3 - 4 / (n + 1)]
    assert crossing[0] == 53


def test_ball_bound_grows_like_sqrt_n():
    for n in range(5, 101):
        assert theta_lower_ball(n) > 0.2135 * math.sqrt(n)
    assert theta_lower_constant() == pytest.approx(0.2135, abs=1e-4)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 20, 51])
def test_ball_volume(n):
    assert ball_volume(n) == pytest.approx(math.pi ** (n / 2) / gamma(n / 2 + 1), rel=1e-12)


def test_regular_simplex_volume():
    assert regular_simplex_volume(2) == pytest.approx(3 * math.sqrt(3) / 4)
    S = regular_simplex(4)
    assert float(S.volume) == pytest.approx(regular_simplex_volume(4), rel=1e-9)


def test_simplex_ball_bound_for_regular_simplex():
    S = regular_simplex(3)
    assert theta_lower_simplex_ball(S) == pytest.approx(theta_lower_ball(3), rel=1e-9)


def test_slice_measure():
    assert slice_measure(3, 1.0) == pytest.approx(1 / 6)
    assert slice_measure(2, 2.0) == pytest.approx(eval_legendre(2, 2.0) / 2)
    with pytest.raises(DomainError):
        slice_measure(2, 0.5)


def _slice_monte_carlo(rng, n, gamma_, samples):
    # E = {x : sum |x_i| + |1 - sum x_i| <= gamma} lies in the box [-(gamma-1)/2, (gamma+1)/2]^n
    low, high = -(gamma_ - 1) / 2, (gamma_ + 1) / 2
    x = rng.uniform(low, high, size=(samples, n))
    inside = np.abs(x).sum(axis=1) + np.abs(1 - x.sum(axis=1)) <= gamma_
    p = inside.mean()
    box = (high - low) ** n
    return p * box, math.sqrt(p * (1 - p) / samples) * box


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("gamma_", [1.0, 1.5, 2.0])
def test_slice_measure_monte_carlo(rng, n, gamma_):
    estimate, error = _slice_monte_carlo(rng, n, gamma_, get_config().sampling.monte_carlo_samples)
    assert abs(estimate - slice_measure(n, gamma_)) <= 3 * error + 1e-12


@pytest.mark.parametrize("n", range(2, 16))
def test_closed_form_lower_bounds(n):
    s = 1e6
    k, odd = divmod(n, 2)
    bound = chi_inv_lower_closed_form(k, s, 'odd' if odd else 'even')
    assert bound < legendre_inv(n, s)


def test_closed_form_parity_validated():
    with pytest.raises(DomainError):
        chi_inv_lower_closed_form(2, 10.0, 'neither')


def test_inverse_residual_within_tolerance():
    root = legendre_inv(5, 10.0)
    assert abs(legendre_eval(5, root) - 10.0) <= get_config().tolerance.legendre_inverse * 10.0


def test_inaccurate_root_is_reported(monkeypatch, caplog):
    monkeypatch.setattr("src.bounds.legendre.brentq", lambda f, a, b, **kwargs: (a + b) / 2)
    with caplog.at_level(logging.WARNING, logger="src.bounds.legendre"):
        legendre_inv(3, 10.0)
    assert any("misses the tolerance" in record.getMessage() for record in caplog.records)
