"""
Cambrian framework graphs and their doubling.

camb_graph turns the enumerated c-sortable elements into an n-regular
quasi-graph: every cover reflection of v gives a full edge down to
pi_down(v s), and positive labels without an up-neighbour become half-edges
(certified) or open slots (the neighbour lies beyond maxLen). doubled_graph
glues Camb_c to the negation of Camb_{c^-1} along equal label sets.
"""

import logging
import random
from collections.abc import Iterator
from dataclasses import dataclass, field, replace
from enum import Enum

import networkx as nx

from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.matrices import CartanType, cartan_type
from cambrian.core.rootsys import Root, RootSpace, is_negative, negate, positive_part
from cambrian.core.sortable import (
    CoxeterWord,
    SortableEngine,
    SortableVertex,
    coxeter_word,
    w0_region_labels,
)
from cambrian.errors import InfiniteParabolicBlock
from cambrian.geometry.cones import (
    Provenance,
    SimplicialCone,
    cone_of,
    facet_meets_tits,
    interior_meets_tits,
)

logger = logging.getLogger(__name__)

VertexKey = frozenset[Root]


class SlotKind(str, Enum):
    FULL = "full"
    HALF = "half"  # certified: no neighbour exists
    OPEN = "open"  # neighbour lies beyond the enumeration bound


@dataclass
class Slot:
    label: Root
    kind: SlotKind
    neighbor: VertexKey | None = None


@dataclass
class FrameworkVertex:
    key: VertexKey
    cone: SimplicialCone
    slots: dict[Root, Slot]
    provenance: Provenance
    sortable: SortableVertex | None = None  # c-sortable element, labels as stored
    anti: SortableVertex | None = None  # c^-1-sortable element before negation
    interior: bool = False

    @property
    def labels(self) -> tuple[Root, ...]:
        return self.cone.normals


@dataclass
class FrameworkGraph:
    space: RootSpace
    c: CoxeterWord
    max_len: int
    doubled: bool
    vertices: dict[VertexKey, FrameworkVertex] = field(default_factory=dict)
    conflicts: list[str] = field(default_factory=list)

    @property
    def base_key(self) -> VertexKey:
        return frozenset(self.space.simple_roots)

    @property
    def negated_base_key(self) -> VertexKey:
        return frozenset(negate(r) for r in self.space.simple_roots)

    def edges(self) -> Iterator[tuple[VertexKey, Root, VertexKey]]:
        """Each full edge once, from the endpoint carrying the positive label."""
        for key in sorted(self.vertices, key=sort_key):
            for label, slot in sorted(self.vertices[key].slots.items()):
                if slot.kind == SlotKind.FULL and not is_negative(label):
                    yield key, label, slot.neighbor

    def half_edges(self) -> Iterator[tuple[VertexKey, Root]]:
        for key in sorted(self.vertices, key=sort_key):
            for label, slot in sorted(self.vertices[key].slots.items()):
                if slot.kind == SlotKind.HALF:
                    yield key, label

    def interior_vertices(self) -> list[FrameworkVertex]:
        return [self.vertices[k] for k in sorted(self.vertices, key=sort_key) if self.vertices[k].interior]

    def cones(self) -> list[SimplicialCone]:
        return [self.vertices[k].cone for k in sorted(self.vertices, key=sort_key)]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for key, vertex in self.vertices.items():
            graph.add_node(sort_key(key), provenance=vertex.provenance.value, interior=vertex.interior)
        for key, label, neighbor in self.edges():
            graph.add_edge(sort_key(key), sort_key(neighbor), label=label)
        return graph


def sort_key(key: VertexKey) -> tuple[Root, ...]:
    return tuple(sorted(key))


def _vertex_from_sortable(space: RootSpace, v: SortableVertex, provenance: Provenance) -> FrameworkVertex:
    labels = tuple(v.labels[s] for s in sorted(v.labels))
    cone = cone_of(space, labels, provenance)
    return FrameworkVertex(
        key=frozenset(labels),
        cone=cone,
        slots={label: Slot(label, SlotKind.OPEN) for label in labels},
        provenance=provenance,
        sortable=v,
    )


def camb_graph(engine: SortableEngine, max_len: int, node_cap: int | None = None) -> FrameworkGraph:
    """
    Camb_c truncated at maxLen.

    Args:
        engine: sortable engine for c
        max_len: length bound on the enumerated sortable elements
        node_cap: enumeration cap, defaults to the NODE_CAP setting

    Returns:
        FrameworkGraph with FromC provenance
    """
    space = engine.space
    graph = FrameworkGraph(space=space, c=engine.c, max_len=max_len, doubled=False)
    sortables = engine.sortables(max_len, node_cap=node_cap)
    keys = {}
    for v in sortables:
        vertex = _vertex_from_sortable(space, v, Provenance.FROM_C)
        graph.vertices[vertex.key] = vertex
        keys[v.element.key] = vertex.key

    for v in sortables:
        upper = graph.vertices[keys[v.element.key]]
        for s, beta in v.covers.items():
            lower_sortable = engine.pi_down(engine.group.apply(v.element, s))
            lower = graph.vertices[keys[lower_sortable.element.key]]
            down_slot = upper.slots.get(negate(beta))
            up_slot = lower.slots.get(beta)
            if down_slot is None or up_slot is None:
                graph.conflicts.append(f"cover {beta} of {v.word} has no matching labels")
                continue
            down_slot.kind, down_slot.neighbor = SlotKind.FULL, lower.key
            up_slot.kind, up_slot.neighbor = SlotKind.FULL, upper.key

    for vertex in graph.vertices.values():
        for label, slot in vertex.slots.items():
            if slot.kind == SlotKind.FULL:
                continue
            if is_negative(label):
                graph.conflicts.append(f"negative label {label} at {vertex.sortable.word} has no down edge")
                continue
            if not facet_meets_tits(space, vertex.cone, label):
                slot.kind = SlotKind.HALF
        vertex.interior = all(slot.kind != SlotKind.OPEN for slot in vertex.slots.values())

    logger.info(
        f"Camb graph for c = {engine.c.word}, maxLen {max_len}: {len(graph.vertices)} vertices, "
        f"{len(graph.interior_vertices())} interior"
    )
    for conflict in graph.conflicts:
        logger.warning(f"Camb graph: {conflict}")
    return graph


def negated(graph: FrameworkGraph) -> FrameworkGraph:
    """-Camb: every label, cone and neighbour key negated, provenance FromAntiCinv."""

    def flip(key: VertexKey | None) -> VertexKey | None:
        return None if key is None else frozenset(negate(r) for r in key)

    result = FrameworkGraph(
        space=graph.space, c=graph.c, max_len=graph.max_len, doubled=False, conflicts=list(graph.conflicts)
    )
    for vertex in graph.vertices.values():
        slots = {
            negate(label): Slot(negate(label), slot.kind, flip(slot.neighbor))
            for label, slot in vertex.slots.items()
        }
        result.vertices[flip(vertex.key)] = FrameworkVertex(
            key=flip(vertex.key),
            cone=vertex.cone.negated(Provenance.FROM_ANTI_CINV),
            slots=slots,
            provenance=Provenance.FROM_ANTI_CINV,
            anti=vertex.sortable,
            interior=vertex.interior,
        )
    return result


def _merge_slot(label: Root, first: Slot | None, second: Slot | None, conflicts: list[str]) -> Slot:
    present = [s for s in (first, second) if s is not None]
    full = [s for s in present if s.kind == SlotKind.FULL]
    if full:
        if len(full) == 2 and full[0].neighbor != full[1].neighbor:
            conflicts.append(f"label {label} leads to different neighbours on the two sides")
        return Slot(label, SlotKind.FULL, full[0].neighbor)
    if any(s.kind == SlotKind.OPEN for s in present):
        return Slot(label, SlotKind.OPEN)
    return Slot(label, SlotKind.HALF)


def doubled_graph(
    space: RootSpace,
    max_len: int,
    node_cap: int | None = None,
    rng: random.Random | None = None,
    group: CoxeterGroup | None = None,
) -> FrameworkGraph:
    """
    DCamb_c: Camb_c and -Camb_{c^-1} identified along equal label sets.

    A merged slot is full when either side has it full. A vertex is interior
    when it has no open slot and each side whose fan must contain the cone is
    present: the c side whenever the cone's interior meets the open Tits cone,
    the c^-1 side whenever it meets the open negative Tits cone.
    """
    group = group or CoxeterGroup(space.cartan, space.d)
    c = coxeter_word(space)
    forward = camb_graph(SortableEngine(space, group, c, rng), max_len, node_cap)
    backward = negated(camb_graph(SortableEngine(space, group, c.inverse(), rng), max_len, node_cap))
    graph = FrameworkGraph(space=space, c=c, max_len=max_len, doubled=True)
    graph.conflicts.extend(forward.conflicts)
    graph.conflicts.extend(f"c^-1 side: {text}" for text in backward.conflicts)

    for key in sorted(set(forward.vertices) | set(backward.vertices), key=sort_key):
        a = forward.vertices.get(key)
        b = backward.vertices.get(key)
        base = a or b
        labels = base.cone.normals
        slots = {
            label: _merge_slot(
                label,
                a.slots[label] if a else None,
                b.slots[label] if b else None,
                graph.conflicts,
            )
            for label in labels
        }
        provenance = Provenance.BOTH if a and b else base.provenance
        cone = base.cone.with_provenance(provenance)
        expected_a = interior_meets_tits(space, cone, 1)
        expected_b = interior_meets_tits(space, cone, -1)
        interior = (
            (a is not None or not expected_a)
            and (b is not None or not expected_b)
            and all(slot.kind != SlotKind.OPEN for slot in slots.values())
        )
        graph.vertices[key] = FrameworkVertex(
            key=key,
            cone=cone,
            slots=slots,
            provenance=provenance,
            sortable=a.sortable if a else None,
            anti=b.anti if b else None,
            interior=interior,
        )

    both = sum(1 for v in graph.vertices.values() if v.provenance == Provenance.BOTH)
    logger.info(
        f"Doubled graph, maxLen {max_len}: {len(graph.vertices)} vertices ({both} on both sides), "
        f"{len(graph.interior_vertices())} interior"
    )
    return graph


def corrupted(graph: FrameworkGraph, key: VertexKey, label: Root) -> FrameworkGraph:
    """Copy of the graph with one label of one vertex negated."""
    vertices = dict(graph.vertices)
    vertex = vertices[key]
    flipped = negate(label)
    normals = tuple(flipped if r == label else r for r in vertex.cone.normals)
    slots = {}
    for existing, slot in vertex.slots.items():
        if existing == label:
            slots[flipped] = Slot(flipped, slot.kind, slot.neighbor)
        else:
            slots[existing] = slot
    # the key is kept so that neighbours still point at the corrupted vertex
    vertices[key] = replace(vertex, cone=replace(vertex.cone, normals=normals), slots=slots)
    return replace(graph, vertices=vertices, conflicts=list(graph.conflicts))


def split_blocks(space: RootSpace, c: CoxeterWord) -> tuple[int, frozenset[int], frozenset[int]]:
    """Smallest split position whose two blocks of c both have finite type."""
    for i in range(len(c.word) - 1):
        head = frozenset(c.word[: i + 1])
        tail = frozenset(c.word[i + 1 :])
        if all(cartan_type(space.cartan, space.d, sorted(block)) == CartanType.FINITE for block in (head, tail)):
            return i, head, tail
    raise InfiniteParabolicBlock(f"no split of {c.word} into two finite blocks")


def overlap_witness(
    space: RootSpace, i: int | None = None, group: CoxeterGroup | None = None
) -> tuple[SortableVertex, SortableVertex]:
    """
    The c-sortable (w0)_J and the c^-1-sortable (w0)_{S-J} with opposite label sets.

    J is the set of letters after position i of c; i defaults to the smallest
    split whose blocks are both finite.
    """
    group = group or CoxeterGroup(space.cartan, space.d)
    c = coxeter_word(space)
    if i is None:
        i, head, tail = split_blocks(space, c)
    else:
        head, tail = frozenset(c.word[: i + 1]), frozenset(c.word[i + 1 :])
        for block in (head, tail):
            if cartan_type(space.cartan, space.d, sorted(block)) != CartanType.FINITE:
                raise InfiniteParabolicBlock(f"block {sorted(block)} of {c.word} is not finite")
    forward = SortableEngine(space, group, c)
    backward = SortableEngine(space, group, c.inverse())
    upper = forward.vertex(group.longest_element(tail))
    lower = backward.vertex(group.longest_element(head))
    expected = w0_region_labels(c, head)
    if upper.label_set != frozenset(expected.values()):
        raise ValueError(f"labels of (w0)_J are {sorted(upper.label_set)}, expected {sorted(expected.values())}")
    if lower.label_set != frozenset(negate(r) for r in upper.label_set):
        raise ValueError("the two witnesses do not carry opposite label sets")
    logger.debug(f"Overlap witness at split {i}: {upper.word} and {lower.word}")
    return upper, lower


def crossing_label(graph: FrameworkGraph, key: VertexKey, target: VertexKey) -> Root | None:
    for label, slot in graph.vertices[key].slots.items():
        if slot.kind == SlotKind.FULL and slot.neighbor == target:
            return label
    return None


def reflected_label(space: RootSpace, crossed: Root, gamma: Root) -> Root:
    """gamma' of the reflection condition for an edge labelled ±beta_t."""
    beta_t = positive_part(crossed)
    if space.omega_form(space.coroot(beta_t), gamma) >= 0:
        return space.reflect_in(beta_t, gamma)
    return tuple(gamma)
