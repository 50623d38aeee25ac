"""
Brute-force oracles on small hand-checked inputs and their budgets
"""

import math

import pytest

from errors import CapacityError, DimensionError, ValidationError
from oracles import (
    DEFAULT_BUDGET,
    OracleBudget,
    brute_cycle_radius,
    brute_extreme_points,
    brute_majorization_witness,
    iterative_local_radius,
)
from semiring import MaxMatrix, MaxVector, otimes
from stochastic import classify


def test_cycle_radius_examples():
    assert brute_cycle_radius(MaxMatrix([[3.0]])) == 3.0
    assert brute_cycle_radius(MaxMatrix([[0, 4], [1, 0]])) == pytest.approx(2.0)
    assert brute_cycle_radius(MaxMatrix([[0, 2], [3, 0]])) == pytest.approx(math.sqrt(6))
    assert brute_cycle_radius(MaxMatrix([[0, 1], [0, 0]])) == 0.0
    assert brute_cycle_radius(MaxMatrix([[0.5, 8, 0], [0, 0, 8], [1, 0, 0]])) == pytest.approx(4.0)


def test_cycle_radius_budget():
    with pytest.raises(CapacityError):
        brute_cycle_radius(MaxMatrix.identity(7))
    with pytest.raises(DimensionError):
        brute_cycle_radius(MaxMatrix([[1, 0]]))


def test_extreme_points_for_small_sizes():
    assert brute_extreme_points(1) == (MaxMatrix([[1.0]]),)
    points = brute_extreme_points(2)
    assert len(points) == 6
    assert MaxMatrix([[1, 1], [1, 1]]) not in points
    assert MaxMatrix([[1, 1], [0, 1]]) in points


def test_extreme_points_budget():
    with pytest.raises(CapacityError):
        brute_extreme_points(5)
    with pytest.raises(CapacityError):
        brute_extreme_points(3, OracleBudget(max_pattern_dim=2))
    with pytest.raises(ValidationError):
        brute_extreme_points(0)


def test_majorization_witness_search():
    x, y = MaxVector([2, 1.5]), MaxVector([1, 2])
    found = brute_majorization_witness(x, y)
    assert found is not None
    assert classify(found).doubly
    assert otimes(found, y) == x
    assert brute_majorization_witness(MaxVector([2, 0.5]), MaxVector([2, 1])) is None


def test_majorization_witness_budget():
    with pytest.raises(CapacityError):
        brute_majorization_witness(MaxVector([1] * 4), MaxVector([1] * 4))
    with pytest.raises(CapacityError):
        brute_majorization_witness(MaxVector([1, 1]), MaxVector([1, 1]),
                                   budget=OracleBudget(max_candidates=1))
    with pytest.raises(DimensionError):
        brute_majorization_witness(MaxVector([1, 1]), MaxVector([1, 1, 1]))


def test_iterative_local_radius():
    A = MaxMatrix([[2, 0], [1, 0.5]])
    assert iterative_local_radius(A, MaxVector([1, 0]), 200) == pytest.approx(2.0, rel=0.01)
    assert iterative_local_radius(A, MaxVector([0, 1]), 200) == pytest.approx(0.5, rel=0.01)
    nilpotent = MaxMatrix([[0, 1], [0, 0]])
    assert iterative_local_radius(nilpotent, MaxVector([1, 1]), 10) == 0.0


@pytest.mark.parametrize("x, steps, error", [
    ([0, 0], 10, ValidationError),
    ([1, 0], 0, ValidationError),
    ([1, 0, 0], 10, DimensionError),
])
def test_iterative_local_radius_rejects(x, steps, error):
    with pytest.raises(error):
        iterative_local_radius(MaxMatrix.identity(2), MaxVector(x), steps)


def test_default_budget():
    assert DEFAULT_BUDGET == OracleBudget(4, 6, 3, 1_000_000)
