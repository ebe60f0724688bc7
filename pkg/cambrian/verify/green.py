"""Maximal green sequences read off the doubled framework."""

import logging
from dataclasses import dataclass

from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.rootsys import Root, is_positive, negate
from cambrian.core.sortable import SortableEngine
from cambrian.errors import GreenSequenceNotFound
from cambrian.geometry.framework import (
    FrameworkGraph,
    VertexKey,
    crossing_label,
    sort_key,
    split_blocks,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GreenSequence:
    vertices: tuple[VertexKey, ...]
    crossings: tuple[Root, ...]  # label crossed at each step, read at the earlier vertex

    @property
    def length(self) -> int:
        return len(self.crossings)


def _prefix_keys(engine: SortableEngine, word: tuple[int, ...], flip: bool) -> list[VertexKey]:
    group = engine.group
    keys = []
    for k in range(len(word) + 1):
        labels = engine.vertex(group.element(word[:k])).label_set
        keys.append(frozenset(negate(r) for r in labels) if flip else labels)
    return keys


def find_green_sequence(graph: FrameworkGraph, group: CoxeterGroup | None = None) -> GreenSequence:
    """
    Walk from Pi to -Pi through the overlap of Camb_c and -Camb_{c^-1}.

    The first half follows the c-sorting word of (w0)_J upward in Camb_c, the
    second half follows the c^-1-sorting word of (w0)_{S-J} downward in the
    negated graph. Raises GreenSequenceNotFound when a vertex or an edge of the
    walk lies outside the enumerated graph, or a crossing label is negative.
    """
    space = graph.space
    group = group or CoxeterGroup(space.cartan, space.d)
    c = graph.c
    i, head, tail = split_blocks(space, c)
    forward = SortableEngine(space, group, c)
    backward = SortableEngine(space, group, c.inverse())

    up = _prefix_keys(forward, forward.sorting_word(group.longest_element(tail)), flip=False)
    down = _prefix_keys(backward, backward.sorting_word(group.longest_element(head)), flip=True)
    if up[-1] != down[-1]:
        raise GreenSequenceNotFound(f"the two halves do not meet at split {i}")
    keys = up + list(reversed(down))[1:]

    crossings = []
    for current, following in zip(keys, keys[1:]):
        for key in (current, following):
            if key not in graph.vertices:
                raise GreenSequenceNotFound(f"vertex {sort_key(key)} is beyond maxLen {graph.max_len}")
        label = crossing_label(graph, current, following)
        if label is None:
            raise GreenSequenceNotFound(f"no full edge from {sort_key(current)} to {sort_key(following)}")
        if not is_positive(label):
            raise GreenSequenceNotFound(f"crossing label {label} at {sort_key(current)} is red")
        crossings.append(label)

    logger.info(f"Green sequence of length {len(crossings)} through split {i} (J = {sorted(tail)})")
    return GreenSequence(vertices=tuple(keys), crossings=tuple(crossings))
