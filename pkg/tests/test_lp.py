"""Tests for exact Phase I feasibility."""

from fractions import Fraction

import pytest

from cambrian.geometry.lp import Constraint, feasible_point


class TestFeasiblePoint:
    def test_feasible_system(self):
        """x + y >= 2 with x <= 1 has a solution that satisfies both rows."""
        rows = [Constraint.of([1, 1], ">=", 2), Constraint.of([1, 0], "<=", 1)]
        point = feasible_point(rows, 2)
        assert point is not None
        assert all(row.holds(point) for row in rows)

    def test_unique_solution_is_exact(self):
        """Two independent equalities pin the point down exactly."""
        rows = [Constraint.of([1, 1], "==", 3), Constraint.of([1, -1], "==", Fraction(1, 2))]
        assert feasible_point(rows, 2) == (Fraction(7, 4), Fraction(5, 4))

    def test_infeasible_system(self):
        """x >= 1 and x <= 0 cannot both hold."""
        rows = [Constraint.of([1], ">=", 1), Constraint.of([1], "<=", 0)]
        assert feasible_point(rows, 1) is None

    def test_negative_values_are_reachable(self):
        """Variables are free, not sign-restricted."""
        point = feasible_point([Constraint.of([1, 0], "<=", -3)], 2)
        assert point is not None and point[0] <= -3

    def test_empty_system(self):
        """No constraints means the origin."""
        assert feasible_point([], 3) == (0, 0, 0)

    def test_dimension_mismatch(self):
        """Every row must have one coefficient per variable."""
        with pytest.raises(ValueError):
            feasible_point([Constraint.of([1, 2], ">=", 0)], 3)
