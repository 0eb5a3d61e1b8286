from fractions import Fraction

import pytest

from src.exceptions import DimensionTooLarge, DomainError, LongRunningNotAllowed
from src.families.search import Objective, search_01
from src.geometry.cube import projector_norm_cube, xi_cube
from src.processing.combinations import candidate_count

EXPECTED = {
    2: (Fraction(4), Fraction(3)),
    3: (Fraction(3), Fraction(2)),
    4: (Fraction(13, 3), Fraction(7, 3)),
    5: (Fraction(11, 2), Fraction(13, 5)),
}


@pytest.mark.parametrize("n", sorted(EXPECTED))
def test_minimal_absorption(n):
    result = search_01(n, "xi", workers=2)
    assert result.objective is Objective.XI
    assert result.best == EXPECTED[n][0]
    assert result.examined == candidate_count(n)
    assert result.minimizers >= 1
    assert xi_cube(result.witness).xi == result.best
    assert all(x in (0, 1) for vertex in result.witness.vertices for x in vertex)


@pytest.mark.parametrize("n", sorted(EXPECTED))
def test_minimal_projector_norm(n):
    result = search_01(n, Objective.NORM, workers=2)
    assert result.best == EXPECTED[n][1]
    assert projector_norm_cube(result.witness).norm == result.best


def test_candidate_counts():
    assert candidate_count(5) == 169_911
    assert candidate_count(6) == 67_945_521


def test_search_limits():
    with pytest.raises(LongRunningNotAllowed):
        search_01(6)
    with pytest.raises(DimensionTooLarge):
        search_01(7, allow_long=True)
    with pytest.raises(DomainError):
        search_01(3, objective="volume")
