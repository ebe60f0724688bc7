"""
Exact rational feasibility by the two-phase simplex method.

Only Phase I is needed here: the geometry layer asks whether a system of
linear (in)equalities over free rational variables has a solution and, if so,
for one such solution. Pivoting follows Bland's rule so degenerate systems,
which are the normal case for cone face relations, cannot cycle.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

logger = logging.getLogger(__name__)

Sense = Literal[">=", "<=", "=="]


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[Fraction, ...]
    sense: Sense
    rhs: Fraction

    @classmethod
    def of(cls, coefficients: Sequence, sense: Sense, rhs=0) -> "Constraint":
        return cls(tuple(Fraction(c) for c in coefficients), sense, Fraction(rhs))

    def holds(self, point: Sequence[Fraction]) -> bool:
        value = sum((c * x for c, x in zip(self.coefficients, point, strict=True)), Fraction(0))
        if self.sense == ">=":
            return value >= self.rhs
        if self.sense == "<=":
            return value <= self.rhs
        return value == self.rhs


class SimplexTableau:
    """
    Phase I tableau for free variables x = x_plus - x_minus.

    Columns: 2 per free variable, one slack per inequality, one artificial per
    row. The objective row holds the reduced costs of the sum of artificials.
    """

    def __init__(self, constraints: Sequence[Constraint], dimension: int):
        self.dimension = dimension
        inequalities = [k for k, c in enumerate(constraints) if c.sense != "=="]
        self.slack_start = 2 * dimension
        self.artificial_start = self.slack_start + len(inequalities)
        self.width = self.artificial_start + len(constraints)
        self.rows: list[list[Fraction]] = []
        self.basis: list[int] = []
        for k, constraint in enumerate(constraints):
            row = [Fraction(0)] * (self.width + 1)
            for j, coefficient in enumerate(constraint.coefficients):
                row[2 * j] = coefficient
                row[2 * j + 1] = -coefficient
            if constraint.sense != "==":
                slack = self.slack_start + inequalities.index(k)
                row[slack] = Fraction(1) if constraint.sense == "<=" else Fraction(-1)
            row[-1] = constraint.rhs
            if row[-1] < 0:
                row = [-v for v in row]
            row[self.artificial_start + k] = Fraction(1)
            self.rows.append(row)
            self.basis.append(self.artificial_start + k)
        self.objective = [Fraction(0)] * (self.width + 1)
        for row in self.rows:
            for j in range(self.artificial_start):
                self.objective[j] += row[j]
            self.objective[-1] += row[-1]
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        pivot_row = self.rows[i]
        value = pivot_row[j]
        pivot_row[:] = [v / value for v in pivot_row]
        for k, row in enumerate(self.rows):
            if k != i and row[j]:
                factor = row[j]
                row[:] = [a - factor * b for a, b in zip(row, pivot_row, strict=True)]
        if self.objective[j]:
            factor = self.objective[j]
            self.objective = [a - factor * b for a, b in zip(self.objective, pivot_row, strict=True)]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> bool:
        """One pivot; False once no entering column improves the objective."""
        entering = next((j for j in range(self.artificial_start) if self.objective[j] > 0), None)
        if entering is None:
            return False
        candidates = [
            (row[-1] / row[entering], self.basis[i], i)
            for i, row in enumerate(self.rows)
            if row[entering] > 0
        ]
        # the artificial objective is bounded below by zero
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return True

    def solve(self) -> tuple[Fraction, ...] | None:
        while self.bland_step():
            pass
        logger.debug(f"Phase I finished after {self.pivots} pivots, residual {self.objective[-1]}")
        if self.objective[-1] > 0:
            return None
        values = [Fraction(0)] * self.width
        for i, column in enumerate(self.basis):
            values[column] = self.rows[i][-1]
        return tuple(values[2 * j] - values[2 * j + 1] for j in range(self.dimension))


def feasible_point(constraints: Sequence[Constraint], dimension: int) -> tuple[Fraction, ...] | None:
    """
    A rational point satisfying every constraint, or None when the system is infeasible.

    Args:
        constraints: rows over `dimension` free variables
        dimension: number of variables

    Returns:
        Exact solution vector or None
    """
    if not constraints:
        return (Fraction(0),) * dimension
    for constraint in constraints:
        if len(constraint.coefficients) != dimension:
            size = len(constraint.coefficients)
            raise ValueError(f"constraint has {size} coefficients, expected {dimension}")
    point = SimplexTableau(constraints, dimension).solve()
    if point is not None and not all(c.holds(point) for c in constraints):
        raise ArithmeticError("simplex returned a point violating its constraints")
    return point
