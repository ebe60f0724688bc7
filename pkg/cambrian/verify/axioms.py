"""
Reflection-framework axioms on the interior of a framework graph.

Every check returns a status per axiom and, for failures, witnesses that
carry enough data to be replayed by recheck().
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations

import networkx as nx

from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import Root, RootSpace, is_negative, is_positive, negate
from cambrian.geometry.framework import (
    FrameworkGraph,
    FrameworkVertex,
    SlotKind,
    VertexKey,
    corrupted,
    reflected_label,
    sort_key,
)

logger = logging.getLogger(__name__)


class Axiom(str, Enum):
    BASE = "Base"
    ROOT = "Root"
    E1 = "E1"
    E2 = "E2"
    E3 = "E3"
    REFLECTION = "Reflection"
    FULL_EDGE = "FullEdge"
    COMPLETENESS = "Completeness"


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_CLAIMED = "NOT_CLAIMED"


@dataclass(frozen=True)
class Witness:
    axiom: Axiom
    vertex: tuple[Root, ...]
    labels: tuple[Root, ...]
    neighbor: tuple[Root, ...] | None = None
    detail: str = ""


@dataclass
class AxiomReport:
    statuses: dict[Axiom, CheckStatus]
    witnesses: list[Witness] = field(default_factory=list)
    interior: int = 0

    @property
    def passed(self) -> bool:
        return CheckStatus.FAIL not in self.statuses.values()


def _sign(root: Root) -> int:
    return 1 if is_positive(root) else -1


def euler_sign(space: RootSpace, beta: Root, gamma: Root):
    """E(beta^v, gamma); its sign agrees with E(beta, gamma)."""
    return space.euler_form(space.coroot(beta), gamma)


def _vertex_witnesses(space: RootSpace, vertex: FrameworkVertex, axiom: Axiom) -> list[Witness]:
    labels = vertex.labels
    where = sort_key(vertex.key)
    found = []
    if axiom == Axiom.ROOT:
        for beta in labels:
            if not space.is_real_root(beta):
                found.append(Witness(axiom, where, (beta,), detail="label is not a real root"))
    elif axiom == Axiom.E1:
        for beta, gamma in permutations(labels, 2):
            if is_positive(beta) and is_negative(gamma) and euler_sign(space, beta, gamma) != 0:
                value = euler_sign(space, beta, gamma)
                found.append(Witness(axiom, where, (beta, gamma), detail=f"E = {value}"))
    elif axiom == Axiom.E2:
        for beta, gamma in permutations(labels, 2):
            if _sign(beta) == _sign(gamma) and euler_sign(space, beta, gamma) > 0:
                value = euler_sign(space, beta, gamma)
                found.append(Witness(axiom, where, (beta, gamma), detail=f"E = {value}"))
    elif axiom == Axiom.E3:
        graph = nx.DiGraph()
        graph.add_nodes_from(labels)
        graph.add_edges_from(
            (beta, gamma) for beta, gamma in permutations(labels, 2) if euler_sign(space, beta, gamma) != 0
        )
        if not nx.is_directed_acyclic_graph(graph):
            cycle = tuple(u for u, _ in nx.find_cycle(graph))
            found.append(Witness(axiom, where, cycle, detail="Gamma(v) has a directed cycle"))
    elif axiom == Axiom.FULL_EDGE:
        for beta in labels:
            if is_negative(beta) and vertex.slots[beta].kind != SlotKind.FULL:
                found.append(Witness(axiom, where, (beta,), detail="negative label on a half-edge"))
    elif axiom == Axiom.COMPLETENESS:
        for beta in labels:
            if vertex.slots[beta].kind == SlotKind.HALF:
                found.append(Witness(axiom, where, (beta,), detail="half-edge"))
    return found


def _reflection_witnesses(graph: FrameworkGraph, vertex: FrameworkVertex) -> list[Witness]:
    space = graph.space
    found = []
    for crossed, slot in vertex.slots.items():
        if slot.kind != SlotKind.FULL:
            continue
        neighbor = graph.vertices[slot.neighbor]
        for gamma in vertex.labels:
            image = reflected_label(space, crossed, gamma)
            if image not in neighbor.slots:
                found.append(
                    Witness(
                        Axiom.REFLECTION,
                        sort_key(vertex.key),
                        (crossed, gamma),
                        neighbor=sort_key(neighbor.key),
                        detail=f"expected {image} at the neighbour",
                    )
                )
    return found


def check_axioms(graph: FrameworkGraph) -> AxiomReport:
    """
    Base, Root, Euler, Reflection, Full edge and completeness on interior vertices.

    Full edge and completeness are only claimed in finite and affine type.
    """
    space = graph.space
    interior = graph.interior_vertices()
    statuses: dict[Axiom, CheckStatus] = {}
    witnesses: list[Witness] = []

    base = graph.vertices.get(graph.base_key)
    if base is None or set(base.labels) != set(space.simple_roots):
        statuses[Axiom.BASE] = CheckStatus.FAIL
        witnesses.append(Witness(Axiom.BASE, sort_key(graph.base_key), (), detail="no vertex labelled by Pi"))
    else:
        statuses[Axiom.BASE] = CheckStatus.PASS

    claimed = space.classification.kind != CartanType.INDEFINITE
    for axiom in (Axiom.ROOT, Axiom.E1, Axiom.E2, Axiom.E3, Axiom.REFLECTION, Axiom.FULL_EDGE, Axiom.COMPLETENESS):
        if axiom in (Axiom.FULL_EDGE, Axiom.COMPLETENESS) and not claimed:
            statuses[axiom] = CheckStatus.NOT_CLAIMED
            continue
        if not interior:
            statuses[axiom] = CheckStatus.INCONCLUSIVE
            continue
        found = []
        for vertex in interior:
            if axiom == Axiom.REFLECTION:
                found.extend(_reflection_witnesses(graph, vertex))
            else:
                found.extend(_vertex_witnesses(space, vertex, axiom))
        statuses[axiom] = CheckStatus.FAIL if found else CheckStatus.PASS
        witnesses.extend(found)

    report = AxiomReport(statuses=statuses, witnesses=witnesses, interior=len(interior))
    summary = ", ".join(f"{axiom.value}={status.value}" for axiom, status in statuses.items())
    logger.info(f"Axioms on {len(interior)} interior vertices: {summary}")
    return report


def recheck(graph: FrameworkGraph, witness: Witness) -> bool:
    """Replay one witness; True when the failure is still present."""
    space = graph.space
    vertex = graph.vertices.get(frozenset(witness.vertex))
    if witness.axiom == Axiom.BASE:
        return vertex is None or set(vertex.labels) != set(space.simple_roots)
    if vertex is None:
        return False
    if witness.axiom == Axiom.REFLECTION:
        crossed, gamma = witness.labels
        slot = vertex.slots.get(crossed)
        if slot is None or slot.kind != SlotKind.FULL:
            return False
        return reflected_label(space, crossed, gamma) not in graph.vertices[slot.neighbor].slots
    return any(w.labels == witness.labels for w in _vertex_witnesses(space, vertex, witness.axiom))


def corrupt_label(graph: FrameworkGraph, key: VertexKey | None = None, slot: int = 0) -> FrameworkGraph:
    """Negative control: negate one label (by default slot 0 of the base vertex)."""
    key = graph.base_key if key is None else key
    label = graph.vertices[key].labels[slot]
    logger.info(f"Corrupting label {label} at {sort_key(key)} to {negate(label)}")
    return corrupted(graph, key, label)
