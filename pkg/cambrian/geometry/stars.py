"""Rank-two stars: the cycle or path of vertices around a codimension-2 face."""

import logging
from dataclasses import dataclass
from enum import Enum

from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import RankTwoSubsystem, Root, negate, positive_part, rank_two_subsystem
from cambrian.geometry.cones import delta_pairing
from cambrian.geometry.framework import FrameworkGraph, SlotKind, VertexKey, reflected_label

logger = logging.getLogger(__name__)


class StarKind(str, Enum):
    CYCLE = "cycle"
    PATH = "path"
    TRUNCATED = "truncated"


class StarEnd(str, Enum):
    """How one direction of a rank-two walk stopped."""

    CLOSED = "closed"
    HALF = "half"  # certified half-edge
    FRONTIER = "frontier"  # left the enumerated region
    BROKEN = "broken"  # interior vertex without the expected label or slot


@dataclass(frozen=True)
class RankTwoStar:
    start: VertexKey
    labels: tuple[Root, Root]
    kind: StarKind
    vertices: tuple[VertexKey, ...]
    subsystem: RankTwoSubsystem
    face_in_boundary: bool | None  # None outside affine type
    ends: tuple[StarEnd, StarEnd] = (StarEnd.CLOSED, StarEnd.CLOSED)

    @property
    def consistent(self) -> bool:
        """
        Cycle iff finite subsystem, of the expected length. Faces in delta-perp
        never carry a cycle or a finite subsystem, and a path around one is affine.
        """
        if StarEnd.BROKEN in self.ends:
            return False
        finite = self.subsystem.kind == CartanType.FINITE
        if self.face_in_boundary:
            if self.kind == StarKind.CYCLE or finite:
                return False
            if self.kind == StarKind.PATH:
                return self.subsystem.kind == CartanType.AFFINE
            return True
        if self.kind == StarKind.TRUNCATED:
            return True
        if self.kind == StarKind.CYCLE:
            return finite and len(self.vertices) == self.subsystem.cycle_length
        return not finite


def _walk(graph: FrameworkGraph, start: VertexKey, cross: Root, other: Root, limit: int):
    """Alternate across the two edges of the star; returns (keys, end)."""
    space = graph.space
    keys = [start]
    current = start
    for _ in range(limit):
        vertex = graph.vertices[current]
        if not vertex.interior and current != start:
            return keys, StarEnd.FRONTIER
        slot = vertex.slots[cross]
        if slot.kind == SlotKind.HALF:
            return keys, StarEnd.HALF
        if slot.kind != SlotKind.FULL:
            return keys, StarEnd.FRONTIER if not vertex.interior else StarEnd.BROKEN
        other_next = reflected_label(space, cross, other)
        current, cross, other = slot.neighbor, other_next, negate(cross)
        if current == start:
            return keys, StarEnd.CLOSED
        if cross not in graph.vertices[current].slots:
            logger.warning(f"Rank-two walk reached {sorted(current)} without label {cross}")
            return keys, StarEnd.BROKEN
        if current in keys:
            logger.warning(f"Rank-two walk revisited {sorted(current)} before closing")
            return keys, StarEnd.BROKEN
        keys.append(current)
    return keys, StarEnd.BROKEN


def rank_two_star(graph: FrameworkGraph, key: VertexKey, e: Root, f: Root) -> RankTwoStar:
    """
    Walk the rank-two sequence through the edges e and f of a vertex.

    The sequence closes into a cycle, or is a path when both directions end
    at certified half-edges. A direction that leaves the enumerated region
    makes the star truncated; around faces in delta-perp this is the
    expected outcome, since those sequences are bi-infinite.
    """
    space = graph.space
    limit = 2 * len(graph.vertices) + 2
    forward, end = _walk(graph, key, e, f, limit)
    subsystem = rank_two_subsystem(space, positive_part(e), positive_part(f))
    face_in_boundary = None
    if space.classification.kind == CartanType.AFFINE:
        cone = graph.vertices[key].cone
        face = [cone.ray_for(r) for r in cone.normals if r not in (e, f)]
        face_in_boundary = all(delta_pairing(space, ray) == 0 for ray in face)

    if end == StarEnd.CLOSED:
        kind, vertices, ends = StarKind.CYCLE, tuple(forward), (end, end)
    else:
        backward, back_end = _walk(graph, key, f, e, limit)
        vertices = tuple(reversed(backward[1:])) + tuple(forward)
        ends = (back_end, end)
        kind = StarKind.PATH if ends == (StarEnd.HALF, StarEnd.HALF) else StarKind.TRUNCATED
    return RankTwoStar(
        start=key,
        labels=(e, f),
        kind=kind,
        vertices=vertices,
        subsystem=subsystem,
        face_in_boundary=face_in_boundary,
        ends=ends,
    )
