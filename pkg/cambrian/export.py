"""
Artifact builders: pydantic documents, graphviz DOT and chart CSV.

Output is canonical: vertices are numbered in sorted label order so the same
input and seed always give the same bytes.

    dot -Tpng -O dcamb.gv
"""

import csv
import io
import logging
from pathlib import Path

from pydantic import BaseModel

from cambrian.cluster.exchange import ExchangeGraphSlice, c_vectors
from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import RootSpace, phi0_split
from cambrian.core.sortable import SortableVertex
from cambrian.geometry.boundary import BoundarySupport
from cambrian.geometry.charts import ChartPoint
from cambrian.geometry.cones import Provenance
from cambrian.geometry.framework import FrameworkGraph, SlotKind, sort_key
from cambrian.schemas import (
    AffineExport,
    BoundaryExport,
    ClassificationExport,
    ConeExport,
    DeficitExport,
    ExchangeEdgeExport,
    ExchangeGraphExport,
    FanExport,
    FrameworkExport,
    GreenExport,
    SeedExport,
    SlotExport,
    SortableExport,
    SortablesExport,
    SuiteExport,
    VertexExport,
    WitnessExport,
    rational,
)
from cambrian.verify.green import GreenSequence
from cambrian.verify.suite import SuiteReport

logger = logging.getLogger(__name__)

PROVENANCE_COLORS = {
    Provenance.FROM_C: "blue",
    Provenance.FROM_ANTI_CINV: "red",
    Provenance.BOTH: "purple",
}


def _rows(vectors) -> list[list[int]]:
    return [list(v) for v in vectors]


def classification_export(space: RootSpace) -> ClassificationExport:
    result = space.classification
    document = ClassificationExport(
        kind=result.kind.value,
        n=space.n,
        symmetrizer=list(space.d),
        cartan=_rows(space.cartan),
        order=list(space.order) if space.B.acyclic else None,
    )
    if result.kind == CartanType.AFFINE:
        data = result.affine
        document.affine = AffineExport(
            delta=list(data.delta), s_aff=data.s_aff, S0=list(data.S0), theta=list(data.theta)
        )
    if result.kind == CartanType.AFFINE and space.B.acyclic:
        split = phi0_split(space)
        document.plus = _rows(sorted(split.plus))
        document.zero = _rows(sorted(split.zero))
        document.xc = list(split.xc_S0)
    return document


def sortables_export(c: tuple[int, ...], max_len: int, vertices: list[SortableVertex]) -> SortablesExport:
    return SortablesExport(
        c=list(c),
        max_len=max_len,
        sortables=[
            SortableExport(
                word=list(v.word),
                labels=[list(v.labels[s]) for s in sorted(v.labels)],
                covers=[list(v.covers[s]) for s in sorted(v.covers)],
            )
            for v in vertices
        ],
    )


def fan_export(graph: FrameworkGraph) -> FanExport:
    return FanExport(
        n=graph.space.n, max_len=graph.max_len, cones=[ConeExport.of(cone) for cone in graph.cones()]
    )


def framework_export(graph: FrameworkGraph) -> FrameworkExport:
    keys = sorted(graph.vertices, key=sort_key)
    index = {key: k for k, key in enumerate(keys)}
    document = FrameworkExport(c=list(graph.c.word), max_len=graph.max_len, conflicts=list(graph.conflicts))
    for k, key in enumerate(keys):
        vertex = graph.vertices[key]
        document.vertices.append(
            VertexExport(
                index=k,
                labels=_rows(vertex.labels),
                provenance=vertex.provenance,
                interior=vertex.interior,
                word=list(vertex.sortable.word) if vertex.sortable else None,
                anti_word=list(vertex.anti.word) if vertex.anti else None,
                slots=[
                    SlotExport(
                        label=list(label),
                        kind=slot.kind.value,
                        neighbor=index.get(slot.neighbor) if slot.neighbor is not None else None,
                    )
                    for label, slot in sorted(vertex.slots.items())
                ],
            )
        )
        (document.interior if vertex.interior else document.frontier).append(k)
    return document


def framework_dot(graph: FrameworkGraph) -> str:
    """DOT for DCamb_c: vertices coloured by provenance, half-edges dashed."""
    keys = sorted(graph.vertices, key=sort_key)
    index = {key: k for k, key in enumerate(keys)}
    lines = ["graph dcamb {", '\tgraph [overlap=false];', "\tnode [shape=circle, fontsize=10];"]
    for key in keys:
        vertex = graph.vertices[key]
        color = PROVENANCE_COLORS[vertex.provenance]
        style = "filled" if vertex.interior else "dashed"
        tooltip = " ".join(str(list(r)) for r in sort_key(key))
        lines.append(
            f'\t"{index[key]}" [color={color}, style={style}, fillcolor="{color}33", tooltip="{tooltip}"];'
        )
    for key, label, neighbor in graph.edges():
        lines.append(f'\t"{index[key]}" -- "{index[neighbor]}" [label="{list(label)}"];')
    for number, (key, label) in enumerate(graph.half_edges()):
        lines.append(f'\t"h{number}" [shape=point];')
        lines.append(f'\t"{index[key]}" -- "h{number}" [style=dashed, label="{list(label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def exchange_graph_export(graph: ExchangeGraphSlice) -> ExchangeGraphExport:
    return ExchangeGraphExport(
        depth=graph.depth,
        seeds=[
            SeedExport(
                index=k,
                depth=seed.depth,
                path=list(seed.path),
                cluster=[str(x) for x in seed.cluster],
                exchange=_rows(seed.matrix.top),
                c_vectors=_rows(c_vectors(seed)),
                g_vectors=_rows(seed.gvectors),
            )
            for k, seed in enumerate(graph.seeds)
        ],
        edges=[
            ExchangeEdgeExport(
                source=edge.source, column=edge.column, target=edge.target, target_column=edge.target_column
            )
            for edge in graph.iter_edges()
        ],
        frontier=sorted(graph.frontier),
    )


def exchange_graph_dot(graph: ExchangeGraphSlice) -> str:
    lines = ["graph exchange {", "\tnode [shape=circle, fontsize=10];"]
    for k, seed in enumerate(graph.seeds):
        shape = "doublecircle" if seed.depth == 0 else "circle"
        lines.append(f'\t"{k}" [shape={shape}, tooltip="{list(seed.path)}"];')
    for edge in graph.iter_edges():
        if edge.source <= edge.target:
            lines.append(f'\t"{edge.source}" -- "{edge.target}" [label="{edge.column}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def green_export(sequence: GreenSequence) -> GreenExport:
    return GreenExport(
        length=sequence.length,
        vertices=[_rows(sort_key(key)) for key in sequence.vertices],
        crossings=_rows(sequence.crossings),
    )


def boundary_export(support: BoundarySupport) -> BoundaryExport:
    point = support.complement_point
    return BoundaryExport(
        plus=_rows(sorted(support.plus)),
        complement_point=[rational(x) for x in point] if point is not None else None,
        xc_in_complement=support.xc_in_complement,
        chambers_in_complement=_rows(support.chambers_in_complement),
        chambers_at_xc=_rows(support.chambers_at_xc),
        covered_chambers=support.covered_chambers,
        face_violations=list(support.face_violations),
    )


def suite_export(report: SuiteReport) -> SuiteExport:
    return SuiteExport(
        success=report.passed,
        kind=report.kind.value,
        max_len=report.max_len,
        depth=report.depth,
        statuses={name: status.value for name, status in report.statuses.items()},
        axioms={axiom.value: status.value for axiom, status in report.axioms.statuses.items()},
        witnesses=[
            WitnessExport(
                axiom=w.axiom.value,
                vertex=_rows(w.vertex),
                labels=_rows(w.labels),
                neighbor=_rows(w.neighbor) if w.neighbor is not None else None,
                detail=w.detail,
            )
            for w in report.axioms.witnesses
        ],
        interior_vertices=report.axioms.interior,
        fan_pairs=report.fan.pairs,
        fan_violations=[f"{sorted(v.first)} / {sorted(v.second)}: {v.reason}" for v in report.fan.violations],
        matched_seeds=len(report.cross.matched),
        mismatches=list(report.cross.mismatches),
        interior_half_edges=len(report.completeness.interior_half_edges),
        persistent_deficits=[
            DeficitExport(vertex=_rows(vertex), label=list(label)) for vertex, label in report.persistent
        ],
        unmatched_seeds=[list(path) for path in report.cross.unmatched],
        persistent_notes=list(report.notes),
        property_violations=dict(report.properties.violations),
        rank_two=report.rank_two.counts,
        green=green_export(report.green) if report.green else None,
        boundary=boundary_export(report.boundary) if report.boundary else None,
        cones_at_boundary=list(report.cones_at_boundary) if report.cones_at_boundary else None,
    )


def suite_text(report: SuiteReport) -> str:
    lines = [f"{report.kind.value} input, maxLen {report.max_len}, depth {report.depth}"]
    for name, status in report.statuses.items():
        lines.append(f"  {name:<14} {status.value}")
    for witness in report.axioms.witnesses[:10]:
        lines.append(f"  witness {witness.axiom.value} at {list(witness.vertex)}: {witness.detail}")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n"


def chart_csv(points: list[ChartPoint]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    dimension = max((len(p.coordinates) for p in points), default=0)
    writer.writerow(["cone", "index", "kind"] + [f"x{k}" for k in range(dimension)])
    for point in points:
        writer.writerow([point.cone, point.index, point.kind] + [repr(x) for x in point.coordinates])
    return buffer.getvalue()


def to_json(document: BaseModel) -> str:
    return document.model_dump_json(indent=2) + "\n"


def write_artifact(directory: Path, name: str, text: str) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / name
    path.write_text(text)
    logger.info(f"Wrote {path}")
    return path
