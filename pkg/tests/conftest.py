"""
Shared fixtures: catalog simplices, a seeded RNG and a clean configuration per test.
"""

import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.config import load_config
from src.families.catalog import catalog
from src.geometry.simplex import build_simplex


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Defaults only: no .env file and no SIMPLEX_* overrides leak between tests."""
    for variable in ("SIMPLEX_WORKERS", "SIMPLEX_ALLOW_LONG", "SIMPLEX_OUTPUT_FORMAT", "SIMPLEX_FLOAT_DIGITS"):
        monkeypatch.delenv(variable, raising=False)
    config = load_config(env_file="")
    yield config
    load_config(env_file="")


@pytest.fixture
def rng():
    return np.random.default_rng(20210101)


@pytest.fixture
def s1():
    return catalog("S1")


@pytest.fixture
def s2():
    return catalog("S2")


@pytest.fixture
def corner_triangle():
    return build_simplex([[0, 0], [1, 0], [0, 1]])


def _random_cube_simplex(rng, n: int, denominator: int = 6):
    """Random nondegenerate simplex with vertices on the grid (1/denominator) Z^n inside Q_n."""
    while True:
        vertices = rng.integers(0, denominator + 1, size=(n + 1, n))
        A = np.hstack([vertices, np.ones((n + 1, 1))])
        if abs(np.linalg.det(A)) > 0.5:
            return build_simplex([[Fraction(int(x), denominator) for x in row] for row in vertices])


@pytest.fixture
def cube_simplex(rng):
    """Factory: cube_simplex(n, denominator=6) draws from the seeded RNG."""
    return lambda n, denominator=6: _random_cube_simplex(rng, n, denominator)
