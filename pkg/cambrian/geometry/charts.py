"""
Coordinates for drawing fans.

Affine slices send a ray r to r / |<r, delta>| on V1* or V-1*; rays on the
other side of delta-perp are reported as directions. The V0* chart uses the
generators of each cone's intersection with delta-perp. The sphere chart
normalises rays and projects stereographically from a generic pole.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from cambrian.core.rootsys import RootSpace
from cambrian.errors import ChartPole
from cambrian.geometry.cones import SimplicialCone, delta_pairing, delta_slice

logger = logging.getLogger(__name__)

POLE_TOLERANCE = 1e-12


class Chart(str, Enum):
    V1 = "v1"
    V_MINUS_1 = "v-1"
    V0 = "v0"
    SPHERE = "sphere"


@dataclass(frozen=True)
class ChartPoint:
    cone: int
    index: int
    kind: str  # "point" or "direction"
    coordinates: tuple[float, ...]


def default_pole(n: int) -> np.ndarray:
    pole = np.sqrt(np.arange(2, n + 2, dtype=float)) * np.array([(-1) ** k for k in range(n)], dtype=float)
    return pole / np.linalg.norm(pole)


def _plane_basis(pole: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the hyperplane orthogonal to the pole, as rows."""
    n = pole.shape[0]
    q, _ = np.linalg.qr(np.column_stack([pole, np.eye(n)]))
    return q[:, 1:n].T


def stereographic(vector: Sequence, pole: np.ndarray | None = None) -> tuple[float, ...]:
    """Project the unit direction of a nonzero vector from the pole onto the plane orthogonal to it."""
    u = np.asarray([float(x) for x in vector], dtype=float)
    norm = np.linalg.norm(u)
    if norm == 0:
        raise ChartPole("the zero vector has no direction")
    u = u / norm
    pole = default_pole(u.shape[0]) if pole is None else pole
    height = float(u @ pole)
    if abs(1 - height) < POLE_TOLERANCE:
        raise ChartPole(f"direction {tuple(vector)} is the projection pole")
    image = (u - height * pole) / (1 - height)
    return tuple(float(x) for x in _plane_basis(pole) @ image)


def _slice_point(space: RootSpace, ray: Sequence[int], sign: int) -> tuple[str, tuple[float, ...]]:
    value = delta_pairing(space, ray)
    if (value > 0) - (value < 0) == sign:
        return "point", tuple(float(Fraction(x) / abs(value)) for x in ray)
    return "direction", tuple(float(x) for x in ray)


def project(
    space: RootSpace, cones: Sequence[SimplicialCone], chart: Chart, pole: np.ndarray | None = None
) -> list[ChartPoint]:
    """
    Chart coordinates for every ray (or delta-perp generator) of every cone.

    Args:
        space: root space; affine type for the slice charts
        cones: cones to project, numbered in the given order
        chart: which chart to use
        pole: sphere-chart pole, a unit vector; a generic one by default

    Returns:
        One ChartPoint per projected generator
    """
    points = []
    for number, cone in enumerate(cones):
        if chart == Chart.SPHERE:
            for k, ray in enumerate(cone.rays):
                points.append(ChartPoint(number, k, "point", stereographic(ray, pole)))
        elif chart == Chart.V0:
            for k, generator in enumerate(delta_slice(space, cone)):
                points.append(ChartPoint(number, k, "point", tuple(float(x) for x in generator)))
        else:
            sign = 1 if chart == Chart.V1 else -1
            for k, ray in enumerate(cone.rays):
                kind, coordinates = _slice_point(space, ray, sign)
                points.append(ChartPoint(number, k, kind, coordinates))
    logger.debug(f"Projected {len(cones)} cones to {len(points)} {chart.value} chart points")
    return points
