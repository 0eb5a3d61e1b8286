import math
from fractions import Fraction

import pytest

from src.bounds.fixtures import THETA_PRIME, XI_PRIME
from src.exceptions import UnknownName
from src.reports.tables import (
    TABLE_NAMES, build_table, t6_table, theta_lower_table, theta_upper_small_table, xi_small_table,
)


def test_xi_small_constructions():
    rows = {row.n: row for row in xi_small_table()}
    assert sorted(rows) == list(range(1, 11))
    assert rows[3].construction == "hadamard(3)"
    assert rows[3].construction_xi == 3
    assert rows[5].construction == "s-star(5)"
    assert rows[5].construction_xi == Fraction(11, 2)
    assert rows[7].construction_xi == 7
    assert rows[2].construction == "T8"
    assert float(rows[2].construction_xi) == pytest.approx(1 + 3 / math.sqrt(5), abs=1e-9)


def test_theta_upper_norms():
    rows = {row.n: row for row in theta_upper_small_table(workers=2)}
    assert rows[1].construction_norm == 1
    assert rows[3].construction_norm == 2
    assert rows[7].construction_norm == Fraction(5, 2)
    assert float(rows[2].construction_norm) == pytest.approx(1 + 2 / math.sqrt(5), abs=1e-9)
    assert rows[4].construction_norm is None


def test_theta_lower_structure():
    rows = theta_lower_table()
    assert [row.n for row in rows] == list(range(1, 55))
    for row in rows:
        assert row.max_bound >= row.linear_bound
        if row.n <= 20:
            assert row.computed is not None
            if row.n in (2, 4, 10, 20):
                assert not row.flagged
        else:
            assert row.computed is None and row.deviation is None
    assert rows[52].max_bound == rows[52].printed


def test_theta_lower_flags_with_tight_tolerance():
    rows = theta_lower_table(tolerance=0.0)
    assert any(row.flagged for row in rows)


@pytest.mark.slow
def test_t6_table():
    rows = {row.n: row for row in t6_table(allow_long=False, workers=2)}
    for n in range(1, 6):
        assert rows[n].status == "computed"
        assert (rows[n].xi_prime, rows[n].theta_prime) == (XI_PRIME[n], THETA_PRIME[n])
    assert rows[6].status == "computed-if-enabled" and rows[6].xi_prime is None
    assert rows[7].status == "hadamard"
    assert rows[7].theta_prime == rows[7].theta_lower == Fraction(5, 2)


def test_unknown_table():
    assert TABLE_NAMES == ('xi-small', 'theta-upper-small', 'theta-lower', 't6')
    with pytest.raises(UnknownName):
        build_table("t9")
