"""
The verification suite behind `cambrian verify`.

Each section reports a CheckStatus; violations are data in the section
reports, never exceptions. Sections that need affine type are skipped with
NOT_CLAIMED on other inputs.
"""

import logging
import random
from dataclasses import dataclass, field

from cambrian.config import Settings, get_settings
from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import RootSpace
from cambrian.errors import GreenSequenceNotFound, InfiniteParabolicBlock
from cambrian.geometry.boundary import BoundarySupport, boundary_support
from cambrian.geometry.cones import FanReport, cones_meeting_boundary, fan_check
from cambrian.geometry.framework import FrameworkGraph, doubled_graph
from cambrian.verify.axioms import AxiomReport, CheckStatus, check_axioms, corrupt_label, recheck
from cambrian.verify.completeness import CompletenessReport, Deficit, completeness_scan, persisting
from cambrian.verify.crosscheck import CrossCheckReport, cross_check
from cambrian.verify.green import GreenSequence, find_green_sequence
from cambrian.verify.properties import PropertyReport, RankTwoScan, fan_properties, rank_two_scan

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    kind: CartanType
    max_len: int
    depth: int
    graph: FrameworkGraph
    axioms: AxiomReport
    fan: FanReport
    cross: CrossCheckReport
    completeness: CompletenessReport
    properties: PropertyReport
    rank_two: RankTwoScan
    green: GreenSequence | None = None
    boundary: BoundarySupport | None = None
    cones_at_boundary: tuple[int, int] | None = None  # at maxLen and maxLen + 1
    persistent: list[Deficit] = field(default_factory=list)  # half-edges at maxLen and maxLen + 1
    statuses: dict[str, CheckStatus] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return CheckStatus.FAIL not in self.statuses.values()


def _axiom_status(report: AxiomReport) -> CheckStatus:
    statuses = set(report.statuses.values())
    for status in (CheckStatus.FAIL, CheckStatus.INCONCLUSIVE):
        if status in statuses:
            return status
    return CheckStatus.PASS


def _persistence_status(
    kind: CartanType, persistent: list[Deficit], first: CompletenessReport, second: CompletenessReport
) -> CheckStatus:
    """Indefinite input must keep a deficit; elsewhere no interior half-edge may survive the larger bound."""
    if kind == CartanType.INDEFINITE:
        return CheckStatus.PASS if persistent else CheckStatus.INCONCLUSIVE
    interior = set(first.interior_half_edges) & set(second.interior_half_edges)
    return CheckStatus.FAIL if interior & set(persistent) else CheckStatus.PASS


def run_suite(
    space: RootSpace,
    settings: Settings | None = None,
    max_len: int | None = None,
    depth: int | None = None,
    rng: random.Random | None = None,
    corrupt: bool = False,
) -> SuiteReport:
    """
    Axioms, fan check, dictionary cross check, completeness, fan properties,
    rank-two stars, green sequence and, in affine type, the boundary support.
    Half-edges and the count of cones meeting delta-perp are also compared
    against the doubled graph at maxLen + 1.

    With corrupt=True the axioms run on a copy whose base vertex has one label
    negated; every FAIL witness is replayed before it is reported.
    """
    settings = settings or get_settings()
    max_len = max_len if max_len is not None else settings.MAX_LEN
    depth = depth if depth is not None else settings.DEPTH
    kind = space.classification.kind
    group = CoxeterGroup(space.cartan, space.d)
    graph = doubled_graph(space, max_len, settings.NODE_CAP, rng=rng, group=group)
    larger = doubled_graph(space, max_len + 1, settings.NODE_CAP, rng=rng, group=group)

    checked = corrupt_label(graph) if corrupt else graph
    axioms = check_axioms(checked)
    stale = [w for w in axioms.witnesses if not recheck(checked, w)]
    if stale:
        logger.error(f"{len(stale)} axiom witnesses did not replay")

    report = SuiteReport(
        kind=kind,
        max_len=max_len,
        depth=depth,
        graph=graph,
        axioms=axioms,
        fan=fan_check(space, graph.cones()),
        cross=cross_check(space, depth, graph=graph, rng=rng),
        completeness=completeness_scan(graph),
        properties=fan_properties(graph, group),
        rank_two=rank_two_scan(graph),
    )
    statuses = report.statuses
    statuses["axioms"] = _axiom_status(axioms)
    if stale:
        statuses["axioms"] = CheckStatus.FAIL
        report.notes.append(f"{len(stale)} witnesses did not replay")
    statuses["fan"] = CheckStatus.PASS if report.fan.passed else CheckStatus.FAIL
    statuses["crossCheck"] = report.cross.status
    statuses["completeness"] = report.completeness.status
    larger_scan = completeness_scan(larger)
    report.persistent = persisting(report.completeness, larger_scan)
    statuses["persistence"] = _persistence_status(kind, report.persistent, report.completeness, larger_scan)
    statuses["fanProperties"] = report.properties.status
    statuses["rankTwo"] = report.rank_two.status
    if graph.conflicts:
        statuses["construction"] = CheckStatus.FAIL if kind != CartanType.INDEFINITE else CheckStatus.INCONCLUSIVE
        report.notes.extend(graph.conflicts)

    try:
        report.green = find_green_sequence(graph, group)
        statuses["green"] = CheckStatus.PASS
    except (GreenSequenceNotFound, InfiniteParabolicBlock) as error:
        logger.warning(f"No green sequence: {error}")
        statuses["green"] = CheckStatus.INCONCLUSIVE
        report.notes.append(str(error))

    if kind == CartanType.AFFINE:
        report.boundary = boundary_support(space, graph.cones(), group)
        report.cones_at_boundary = (
            cones_meeting_boundary(space, graph.cones()),
            cones_meeting_boundary(space, larger.cones()),
        )
        statuses["boundary"] = CheckStatus.PASS if report.boundary.passed else CheckStatus.FAIL
        stable = report.cones_at_boundary[0] == report.cones_at_boundary[1]
        statuses["boundaryCount"] = CheckStatus.PASS if stable else CheckStatus.INCONCLUSIVE
        if not stable:
            report.notes.append(f"cones meeting delta-perp still growing: {report.cones_at_boundary}")
    else:
        statuses["boundary"] = CheckStatus.NOT_CLAIMED
        statuses["boundaryCount"] = CheckStatus.NOT_CLAIMED

    summary = ", ".join(f"{name}={status.value}" for name, status in statuses.items())
    logger.info(f"Suite for {kind.value} input at maxLen {max_len}, depth {depth}: {summary}")
    return report
