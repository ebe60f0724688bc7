"""Half-edges on interior vertices, and deficits that survive a larger bound."""

import logging
from dataclasses import dataclass, field

from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import Root, RootSpace
from cambrian.geometry.framework import FrameworkGraph, SlotKind, doubled_graph, sort_key
from cambrian.verify.axioms import CheckStatus

logger = logging.getLogger(__name__)

Deficit = tuple[tuple[Root, ...], Root]  # (vertex, label of the half-edge)


@dataclass
class CompletenessReport:
    kind: CartanType
    interior: int
    interior_half_edges: list[Deficit] = field(default_factory=list)
    deficits: list[Deficit] = field(default_factory=list)  # half-edges anywhere in the graph

    @property
    def status(self) -> CheckStatus:
        if self.kind == CartanType.INDEFINITE:
            return CheckStatus.NOT_CLAIMED
        return CheckStatus.FAIL if self.interior_half_edges else CheckStatus.PASS

    @property
    def complete(self) -> bool:
        return not self.deficits


def completeness_scan(graph: FrameworkGraph) -> CompletenessReport:
    kind = graph.space.classification.kind
    interior = graph.interior_vertices()
    report = CompletenessReport(kind=kind, interior=len(interior))
    interior_keys = {v.key for v in interior}
    for key, label in graph.half_edges():
        deficit = (sort_key(key), label)
        report.deficits.append(deficit)
        if key in interior_keys:
            report.interior_half_edges.append(deficit)
    if report.interior_half_edges and kind != CartanType.INDEFINITE:
        logger.warning(f"{len(report.interior_half_edges)} half-edges on interior vertices of a {kind.value} graph")
    logger.info(
        f"Completeness scan: {len(report.deficits)} half-edges, "
        f"{len(report.interior_half_edges)} on interior vertices"
    )
    return report


def persisting(first: CompletenessReport, second: CompletenessReport) -> list[Deficit]:
    """Deficits of the smaller truncation that are still there in the larger one."""
    return sorted(set(first.deficits) & set(second.deficits))


def persistent_deficits(space: RootSpace, max_len: int, node_cap: int | None = None) -> list[Deficit]:
    """Half-edges present in the doubled graph at both maxLen and maxLen + 1."""
    first = completeness_scan(doubled_graph(space, max_len, node_cap))
    second = completeness_scan(doubled_graph(space, max_len + 1, node_cap))
    stable = persisting(first, second)
    logger.info(f"{len(stable)} half-edges persist from maxLen {max_len} to {max_len + 1}")
    return stable
