"""
Simplicial cones in V* and the face relations between them.

A cone is stored by its facet normals (the labels of a framework vertex) and
its rays, the dual basis to the co-labels: <ray_i, normal_j^v> = 0 for i != j
and > 0 for i = j. Rays are kept as primitive integer vectors in
fundamental-weight coordinates; the exact (unscaled) dual basis is available
separately because g-vectors are compared against it.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from cambrian.core.matrices import CartanType, IntVector, determinant, inverse_columns, primitive
from cambrian.core.rootsys import Root, RootSpace, negate
from cambrian.errors import SingularLabels
from cambrian.geometry.lp import Constraint, feasible_point

logger = logging.getLogger(__name__)


class Provenance(str, Enum):
    FROM_C = "FromC"
    FROM_ANTI_CINV = "FromAntiCinv"
    BOTH = "Both"


class Side(str, Enum):
    """Position against beta-perp: below is the side of D, above the opposite side."""

    ABOVE = "above"
    BELOW = "below"
    STRADDLES = "straddles"


@dataclass(frozen=True)
class SimplicialCone:
    normals: tuple[Root, ...]
    rays: tuple[IntVector, ...]
    provenance: Provenance

    @property
    def key(self) -> frozenset[Root]:
        return frozenset(self.normals)

    @property
    def dimension(self) -> int:
        return len(self.normals)

    def ray_for(self, normal: Root) -> IntVector:
        return self.rays[self.normals.index(normal)]

    def negated(self, provenance: Provenance | None = None) -> "SimplicialCone":
        return SimplicialCone(
            normals=tuple(negate(r) for r in self.normals),
            rays=tuple(negate(r) for r in self.rays),
            provenance=provenance or self.provenance,
        )

    def with_provenance(self, provenance: Provenance) -> "SimplicialCone":
        return SimplicialCone(self.normals, self.rays, provenance)


def colabel_matrix(space: RootSpace, labels: Sequence[Root]) -> list[IntVector]:
    return [space.coroot(label) for label in labels]


def dual_basis(space: RootSpace, labels: Sequence[Root]) -> list[tuple[Fraction, ...]]:
    """Exact R(v, e): the weights with <R_i, label_j^v> = delta_ij."""
    rows = colabel_matrix(space, labels)
    if determinant(rows) == 0:
        logger.error(f"Co-labels of {list(labels)} are linearly dependent")
        raise SingularLabels(f"labels {list(labels)} do not form a basis")
    return inverse_columns(rows)


def cone_of(space: RootSpace, labels: Sequence[Root], provenance: Provenance = Provenance.FROM_C) -> SimplicialCone:
    """Cone_c(v) from its label set, normals in the given order."""
    rays = tuple(primitive(column) for column in dual_basis(space, labels))
    return SimplicialCone(normals=tuple(labels), rays=rays, provenance=provenance)


def above_below(space: RootSpace, cone: SimplicialCone, root: Sequence[int]) -> Side:
    """Position of a cone relative to the hyperplane root-perp, by exact ray signs."""
    values = [space.pair(ray, root) for ray in cone.rays]
    if all(v >= 0 for v in values):
        return Side.BELOW
    if all(v <= 0 for v in values):
        return Side.ABOVE
    return Side.STRADDLES


def delta_pairing(space: RootSpace, weight: Sequence) -> Fraction:
    delta = space.affine.delta
    return space.pair(weight, delta)


def boundary_face(space: RootSpace, cone: SimplicialCone) -> tuple[IntVector, ...]:
    """Rays of the face of the cone lying in delta-perp."""
    return tuple(ray for ray in cone.rays if delta_pairing(space, ray) == 0)


def delta_slice(space: RootSpace, cone: SimplicialCone) -> list[IntVector]:
    """Generators of cone ∩ delta-perp."""
    zero, positive, negative = [], [], []
    for ray in cone.rays:
        value = delta_pairing(space, ray)
        (zero if value == 0 else positive if value > 0 else negative).append((ray, value))
    generators = [ray for ray, _ in zero]
    for (up, up_value), (down, down_value) in ((p, m) for p in positive for m in negative):
        combined = [up_value * b - down_value * a for a, b in zip(up, down, strict=True)]
        generators.append(primitive(combined))
    return sorted(set(generators))


def cones_meeting_boundary(space: RootSpace, cones: Iterable[SimplicialCone]) -> int:
    """Number of maximal cones whose interior meets delta-perp."""
    count = 0
    for cone in cones:
        signs = {(v > 0) - (v < 0) for v in (delta_pairing(space, r) for r in cone.rays)}
        if 1 in signs and -1 in signs:
            count += 1
    return count


def _tits_samples(rays: Sequence[IntVector], interior: bool) -> list[tuple[int, ...]]:
    total = tuple(sum(column) for column in zip(*rays, strict=True))
    if interior:
        return [total] + [tuple(t + 2 * r for t, r in zip(total, ray, strict=True)) for ray in rays]
    pairs = [tuple(a + b for a, b in zip(x, y, strict=True)) for x, y in combinations(rays, 2)]
    return list(rays) + [total] + pairs


def _meets_open_tits(space: RootSpace, rays: Sequence[IntVector], sign: int, interior: bool) -> bool:
    if not rays:
        return False
    kind = space.classification.kind
    if kind == CartanType.FINITE:
        return True
    if kind == CartanType.AFFINE:
        return any((delta_pairing(space, r) > 0) - (delta_pairing(space, r) < 0) == sign for r in rays)
    for point in _tits_samples(rays, interior):
        if space.in_tits_cone(point if sign > 0 else negate(point)):
            return True
    return False


def facet_meets_tits(space: RootSpace, cone: SimplicialCone, normal: Root, sign: int = 1) -> bool:
    """Whether the facet normal-perp of the cone meets the open (sign * Tits) cone."""
    index = cone.normals.index(normal)
    rays = [ray for k, ray in enumerate(cone.rays) if k != index]
    return _meets_open_tits(space, rays, sign, interior=False)


def interior_meets_tits(space: RootSpace, cone: SimplicialCone, sign: int = 1) -> bool:
    """Whether the interior of the cone meets the open (sign * Tits) cone."""
    return _meets_open_tits(space, list(cone.rays), sign, interior=True)


@dataclass(frozen=True)
class SharedFace:
    rays: tuple[IntVector, ...]
    certificate: tuple[Fraction, ...]  # functional in ray coordinates separating the cones

    @property
    def dimension(self) -> int:
        return len(self.rays)


@dataclass(frozen=True)
class Violation:
    first: frozenset[Root]
    second: frozenset[Root]
    witness: tuple[Fraction, ...] | None  # a point of (F1 ∩ F2) outside the common face
    reason: str


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b, strict=True)), Fraction(0))


def _separates(functional: Sequence, first_only, second_only, common) -> bool:
    return (
        all(_dot(r, functional) > 0 for r in first_only)
        and all(_dot(r, functional) < 0 for r in second_only)
        and all(_dot(r, functional) == 0 for r in common)
    )


def meets_nicely(space: RootSpace, first: SimplicialCone, second: SimplicialCone) -> SharedFace | Violation:
    """
    Decide whether two cones intersect in their common face.

    The common face G is spanned by the shared rays. A functional that is
    positive on the other rays of the first cone, negative on the other rays of
    the second and zero on G certifies F1 ∩ F2 = G. Label normals are tried
    first; otherwise an exact LP searches for one and, failing that, for a
    point of F1 ∩ F2 outside G.
    """
    common = sorted(set(first.rays) & set(second.rays))
    first_only = [r for r in first.rays if r not in common]
    second_only = [r for r in second.rays if r not in common]
    n = first.dimension

    for normal in list(first.normals) + [negate(r) for r in second.normals]:
        functional = tuple(s * v for s, v in zip(space.scale, normal, strict=True))
        if _separates(functional, first_only, second_only, common):
            return SharedFace(rays=tuple(common), certificate=functional)

    constraints = (
        [Constraint.of(r, ">=", 1) for r in first_only]
        + [Constraint.of(r, "<=", -1) for r in second_only]
        + [Constraint.of(r, "==", 0) for r in common]
    )
    functional = feasible_point(constraints, n)
    if functional is not None:
        return SharedFace(rays=tuple(common), certificate=functional)

    # a = coefficients on first.rays, b = coefficients on second.rays
    size = 2 * n
    rows = []
    for k in range(n):
        coefficients = [r[k] for r in first.rays] + [-r[k] for r in second.rays]
        rows.append(Constraint.of(coefficients, "==", 0))
    for k in range(size):
        rows.append(Constraint.of([1 if j == k else 0 for j in range(size)], ">=", 0))
    outside = [1 if r not in common else 0 for r in first.rays] + [
        1 if r not in common else 0 for r in second.rays
    ]
    rows.append(Constraint.of(outside, ">=", 1))
    solution = feasible_point(rows, size)
    witness = None
    if solution is not None:
        witness = tuple(
            sum((a * r[k] for a, r in zip(solution[:n], first.rays, strict=True)), Fraction(0))
            for k in range(n)
        )
    logger.debug(f"Cones {sorted(first.normals)} and {sorted(second.normals)} do not meet nicely")
    return Violation(first=first.key, second=second.key, witness=witness, reason="no separating functional")


@dataclass
class FanReport:
    cones: int
    pairs: int
    violations: list[Violation] = field(default_factory=list)
    face_dimensions: dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations


def fan_check(space: RootSpace, cones: Sequence[SimplicialCone]) -> FanReport:
    """Run meets_nicely on every pair of distinct cones."""
    unique = list({cone.key: cone for cone in cones}.values())
    report = FanReport(cones=len(unique), pairs=0)
    for first, second in combinations(unique, 2):
        report.pairs += 1
        result = meets_nicely(space, first, second)
        if isinstance(result, Violation):
            report.violations.append(result)
        else:
            report.face_dimensions[result.dimension] = report.face_dimensions.get(result.dimension, 0) + 1
    level = logging.WARNING if report.violations else logging.INFO
    logger.log(level, f"Fan check: {report.cones} cones, {report.pairs} pairs, {len(report.violations)} violations")
    return report
