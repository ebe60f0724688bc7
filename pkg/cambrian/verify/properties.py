"""
Geometric properties of the doubled fan checked edge by edge.

Covers the above/below position of Cambrian cones against alpha_s-perp for
every letter s, the recursive description of the cones for initial s, the
number of rays a cone may have in delta-perp, the shared rays of adjacent
cones, and the rank-two stars around codimension-2 faces.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import unit
from cambrian.core.sortable import SortableEngine
from cambrian.geometry.cones import Side, above_below, boundary_face, cone_of
from cambrian.geometry.framework import FrameworkGraph, SlotKind, sort_key
from cambrian.geometry.stars import RankTwoStar, StarKind, rank_two_star
from cambrian.verify.axioms import CheckStatus

logger = logging.getLogger(__name__)


@dataclass
class PropertyReport:
    checked: Counter = field(default_factory=Counter)
    violations: dict[str, list[str]] = field(default_factory=dict)

    def fail(self, name: str, message: str) -> None:
        self.violations.setdefault(name, []).append(message)

    @property
    def status(self) -> CheckStatus:
        return CheckStatus.FAIL if self.violations else CheckStatus.PASS


def fan_properties(graph: FrameworkGraph, group: CoxeterGroup | None = None) -> PropertyReport:
    space = graph.space
    engine = SortableEngine(space, group or CoxeterGroup(space.cartan, space.d), graph.c)
    report = PropertyReport()

    for vertex in graph.interior_vertices():
        v = vertex.sortable
        if v is not None:
            initial = set(graph.c.initial_letters)
            for s in range(space.n):
                alpha = unit(space.n, s)
                side = above_below(space, vertex.cone, alpha)
                above = engine.group.geq_s(v.element, s)
                expected = Side.ABOVE if above else Side.BELOW
                report.checked["AboveBelow"] += 1
                if side != expected:
                    report.fail("AboveBelow", f"{v.word} is {side.value} alpha_{s}-perp, expected {expected.value}")
                if s not in initial:
                    continue

                report.checked["RecursiveFan"] += 1
                if not above:
                    if alpha not in vertex.labels or s in engine.group.support(v.element):
                        report.fail("RecursiveFan", f"{v.word} lies below alpha_{s}-perp outside W_<s>")
                    continue
                rotated = graph.c.rotate(s)
                shorter = engine.group.apply(v.element, s, side="left")
                if not engine.is_sortable(shorter, rotated):
                    report.fail("RecursiveFan", f"s_{s} {v.word} is not {rotated.word}-sortable")
                    continue
                inner = engine.labels(shorter, rotated)
                moved = [space.reflect(inner[t], s) for t in sorted(inner)]
                if cone_of(space, moved).key != vertex.cone.key:
                    report.fail("RecursiveFan", f"cone of {v.word} is not s_{s} times the cone of s_{s}v")

        if space.classification.kind == CartanType.AFFINE:
            report.checked["FaceInBoundary"] += 1
            if len(boundary_face(space, vertex.cone)) > space.n - 2:
                report.fail("FaceInBoundary", f"cone {sort_key(vertex.key)} has a facet in delta-perp")

        for label, slot in vertex.slots.items():
            if slot.kind != SlotKind.FULL:
                continue
            other = graph.vertices[slot.neighbor]
            report.checked["DualAdjacent"] += 1
            ray = vertex.cone.ray_for(label)
            shared = set(vertex.cone.rays) - {ray}
            across = set(other.cone.rays) - shared
            if len(shared & set(other.cone.rays)) != space.n - 1 or len(across) != 1:
                report.fail("DualAdjacent", f"{sort_key(vertex.key)} and {sort_key(other.key)} share no facet")
                continue
            if not space.pair(ray, label) > 0 > space.pair(across.pop(), label):
                report.fail("DualAdjacent", f"rays across {label} at {sort_key(vertex.key)} are not separated")

    for name, messages in report.violations.items():
        logger.warning(f"{name}: {len(messages)} violations, first: {messages[0]}")
    logger.info(f"Fan properties: {dict(report.checked)}")
    return report


@dataclass
class RankTwoScan:
    stars: list[RankTwoStar] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        return dict(Counter(star.kind.value for star in self.stars))

    @property
    def inconsistent(self) -> list[RankTwoStar]:
        return [star for star in self.stars if not star.consistent]

    @property
    def status(self) -> CheckStatus:
        if self.inconsistent:
            return CheckStatus.FAIL
        if not self.stars or all(star.kind == StarKind.TRUNCATED for star in self.stars):
            return CheckStatus.INCONCLUSIVE
        return CheckStatus.PASS


def rank_two_scan(graph: FrameworkGraph) -> RankTwoScan:
    """One star per codimension-2 face of an interior cone."""
    scan = RankTwoScan()
    faces = set()
    for vertex in graph.interior_vertices():
        cone = vertex.cone
        for e, f in combinations(vertex.labels, 2):
            face = frozenset(cone.rays) - {cone.ray_for(e), cone.ray_for(f)}
            if face in faces:
                continue
            faces.add(face)
            scan.stars.append(rank_two_star(graph, vertex.key, e, f))
    logger.info(f"Rank-two scan: {scan.counts}, {len(scan.inconsistent)} inconsistent")
    return scan
