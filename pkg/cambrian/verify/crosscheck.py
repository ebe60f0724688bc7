"""
Framework <-> cluster algebra dictionary.

Both sides are grown breadth-first in lockstep from the principal seed and the
vertex labelled by the simple roots. A map sigma from seed columns to labels
is carried along; at each matched pair the exchange matrix, c-vectors and
g-vectors are compared exactly with the omega-pairings, labels and dual rays.
The matched seeds are then held against the exchange graph to the same depth:
a mutation out of an interior vertex that lands on an unmatched seed class is
a mismatch.
"""

import logging
import random
from collections import deque
from dataclasses import dataclass, field

from cambrian.cluster.exchange import (
    ExchangeGraphSlice,
    Seed,
    c_vectors,
    exchange_graph,
    mutate_seed,
    principal_seed,
)
from cambrian.config import get_settings
from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import Root, RootSpace, is_negative, is_positive, negate
from cambrian.geometry.cones import dual_basis
from cambrian.geometry.framework import (
    FrameworkGraph,
    SlotKind,
    VertexKey,
    doubled_graph,
    reflected_label,
    sort_key,
)
from cambrian.verify.axioms import CheckStatus

logger = logging.getLogger(__name__)


@dataclass
class MatchedPair:
    vertex: tuple[Root, ...]
    path: tuple[int, ...]
    cluster: tuple  # seed class key
    sigma: tuple[Root, ...]  # label of each seed column


@dataclass
class CrossCheckReport:
    depth: int
    matched: dict[VertexKey, MatchedPair] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)
    unmatched: list[tuple[int, ...]] = field(default_factory=list)  # paths of non-frontier classes left over
    claimed: bool = True

    @property
    def status(self) -> CheckStatus:
        if not self.mismatches:
            return CheckStatus.PASS
        return CheckStatus.FAIL if self.claimed else CheckStatus.INCONCLUSIVE

    def bijection(self) -> dict[tuple[Root, ...], tuple]:
        """Matched vertex -> class key of its seed; independent of the search order."""
        return {pair.vertex: pair.cluster for pair in self.matched.values()}


def _compare(space: RootSpace, seed: Seed, sigma: tuple[Root, ...]) -> list[str]:
    """Exchange entries, c-vectors, sign coherence and g-vectors against the labels."""
    problems = []
    n = seed.n
    where = f"seed {seed.path}"
    for e in range(n):
        coroot = space.coroot(sigma[e])
        for f in range(n):
            expected = space.omega_form(coroot, sigma[f])
            if seed.matrix.top[e][f] != expected:
                problems.append(f"{where}: b_{e}{f} = {seed.matrix.top[e][f]}, omega gives {expected}")
    for e, vector in enumerate(c_vectors(seed)):
        if tuple(vector) != sigma[e]:
            problems.append(f"{where}: c-vector {e} is {vector}, label is {sigma[e]}")
        if not (is_positive(vector) or is_negative(vector)):
            problems.append(f"{where}: c-vector {e} = {vector} is not sign-coherent")
    rays = dual_basis(space, sigma)
    for e in range(n):
        if tuple(seed.gvectors[e]) != tuple(rays[e]):
            problems.append(f"{where}: g-vector {e} is {seed.gvectors[e]}, dual ray is {tuple(map(str, rays[e]))}")
    return problems


def _coverage(report: CrossCheckReport, graph: FrameworkGraph, classes: ExchangeGraphSlice) -> None:
    """Every mutation out of a seed matched at an interior vertex must land on a matched seed."""
    by_cluster = {pair.cluster: key for key, pair in report.matched.items()}
    frontier = classes.frontier
    for k, seed in enumerate(classes.seeds):
        if k in frontier:
            continue
        if seed.key not in by_cluster:
            report.unmatched.append(seed.path)
            continue
        vertex = graph.vertices[by_cluster[seed.key]]
        if not vertex.interior:
            continue
        for e in range(seed.n):
            edge = classes.neighbor(k, e)
            if edge is None:
                continue
            target = classes.seeds[edge.target]
            if target.key not in by_cluster:
                report.mismatches.append(
                    f"seed {target.path} (column {e} of {seed.path}) has no vertex next to {sort_key(vertex.key)}"
                )
    if report.unmatched:
        logger.info(f"{len(report.unmatched)} non-frontier seed classes lie beyond the framework truncation")


def cross_check(
    space: RootSpace,
    depth: int | None = None,
    max_len: int | None = None,
    graph: FrameworkGraph | None = None,
    rng: random.Random | None = None,
    classes: ExchangeGraphSlice | None = None,
) -> CrossCheckReport:
    """
    Match interior framework vertices with seeds up to the given mutation depth.

    Args:
        space: root space of the initial exchange matrix
        depth: mutation depth, defaults to the DEPTH setting
        max_len: enumeration bound for the doubled graph when none is given
        graph: a doubled graph to reuse
        rng: shuffles the mutation order; the resulting matching is the same
        classes: exchange graph slice to the same depth to reuse

    Returns:
        CrossCheckReport with the matched pairs and every disagreement found
    """
    settings = get_settings()
    depth = depth if depth is not None else settings.DEPTH
    graph = graph or doubled_graph(space, max_len if max_len is not None else settings.MAX_LEN)
    B = space.B
    report = CrossCheckReport(depth=depth, claimed=space.classification.kind != CartanType.INDEFINITE)

    start = graph.vertices.get(graph.base_key)
    if start is None:
        report.mismatches.append("no vertex labelled by the simple roots")
        return report

    seen_seeds: dict = {}
    queue = deque([(principal_seed(B), graph.base_key, space.simple_roots)])
    while queue:
        seed, key, sigma = queue.popleft()
        if key in report.matched:
            if seen_seeds.get(seed.key) != key:
                report.mismatches.append(f"vertex {sort_key(key)} reached again by a different seed {seed.path}")
            continue
        if seed.key in seen_seeds:
            report.mismatches.append(f"seed {seed.path} already matched with {sort_key(seen_seeds[seed.key])}")
            continue
        vertex = graph.vertices[key]
        if set(sigma) != set(vertex.labels):
            report.mismatches.append(f"seed {seed.path}: labels {sorted(sigma)} differ from {sort_key(key)}")
            continue
        report.mismatches.extend(_compare(space, seed, sigma))
        report.matched[key] = MatchedPair(vertex=sort_key(key), path=seed.path, cluster=seed.key, sigma=sigma)
        seen_seeds[seed.key] = key

        if seed.depth >= depth or not vertex.interior:
            continue
        columns = list(range(B.n))
        if rng is not None:
            rng.shuffle(columns)
        for e in columns:
            slot = vertex.slots[sigma[e]]
            if slot.kind != SlotKind.FULL:
                continue
            image = tuple(
                negate(sigma[e]) if f == e else reflected_label(space, sigma[e], sigma[f])
                for f in range(B.n)
            )
            queue.append((mutate_seed(seed, e, B), slot.neighbor, image))

    _coverage(report, graph, classes or exchange_graph(B, depth, settings.NODE_CAP))

    level = logging.WARNING if report.mismatches else logging.INFO
    logger.log(
        level,
        f"Cross check to depth {depth}: {len(report.matched)} matched, {len(report.mismatches)} mismatches",
    )
    return report
