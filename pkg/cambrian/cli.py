"""
Command-line front end.

    cambrian classify --B '[[0,1,1],[-3,0,0],[-1,0,0]]'
    cambrian verify --matrix g2.json --maxLen 8 --depth 7 --out reports/

Matrix convention: rows index i, columns j, entry b_ij. For B = [[0,2],[-2,0]]
index 0 is a source of the quiver and c = s_0 s_1.
"""

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from pydantic import ValidationError

from cambrian.cluster.exchange import ExchangeMatrix, exchange_graph, validate
from cambrian.config import Settings, get_settings
from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.rootsys import build
from cambrian.core.sortable import SortableEngine, coxeter_word, enumerate_sortables
from cambrian.errors import CambrianError, MatrixParseError
from cambrian.export import (
    chart_csv,
    classification_export,
    exchange_graph_dot,
    exchange_graph_export,
    fan_export,
    framework_dot,
    framework_export,
    green_export,
    sortables_export,
    suite_export,
    suite_text,
    to_json,
    write_artifact,
)
from cambrian.geometry.charts import Chart, project
from cambrian.geometry.framework import doubled_graph
from cambrian.schemas import ErrorResponse, MatrixInput
from cambrian.verify.green import find_green_sequence
from cambrian.verify.suite import run_suite

logger = logging.getLogger(__name__)

COMMANDS = ("classify", "sortables", "dcamb", "verify", "exchange-graph", "green", "project")
FORMATS = ("json", "dot", "csv", "text")


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    settings = get_settings()
    parser = argparse.ArgumentParser(prog="cambrian", description="Doubled Cambrian frameworks and cluster checks.")
    parser.add_argument("command", choices=COMMANDS)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--matrix", type=Path, help='JSON file {"n": ..., "B": [[...]]}')
    source.add_argument("--B", dest="inline", help="Inline JSON matrix, e.g. '[[0,1],[-1,0]]'")
    parser.add_argument("--maxLen", dest="max_len", type=int, default=settings.MAX_LEN)
    parser.add_argument("--depth", type=int, default=settings.DEPTH)
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--out", type=Path, default=settings.output_path, help="Directory for artifacts")
    parser.add_argument("--seed", type=int, default=None, help="Randomize initial-letter and mutation order")
    parser.add_argument("--corrupt", action="store_true", help="Negative control: negate one base label")
    parser.add_argument("--chart", choices=[chart.value for chart in Chart], default=Chart.V0.value)
    args = parser.parse_args(argv)
    if args.max_len < 0 or args.depth < 0:
        parser.error("--maxLen and --depth must be nonnegative")
    return args


def read_matrix(text: str) -> ExchangeMatrix:
    """Parse a matrix document (or a bare JSON array) into a validated exchange matrix."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as error:
        raise MatrixParseError(error.msg, error.lineno, error.colno) from error
    if isinstance(raw, list):
        raw = {"B": raw}
    try:
        document = MatrixInput.model_validate(raw)
    except ValidationError as error:
        raise MatrixParseError(f"invalid matrix document: {error.errors()[0]['msg']}") from error
    if document.n is not None and document.n != len(document.B):
        raise MatrixParseError(f"n = {document.n} but B has {len(document.B)} rows")
    return validate(document.B)


def _emit(args: argparse.Namespace, name: str, text: str) -> None:
    if args.out is not None:
        write_artifact(args.out, name, text)
    else:
        sys.stdout.write(text)


def cmd_classify(args: argparse.Namespace, B: ExchangeMatrix, settings: Settings) -> int:
    space = build(B)
    document = classification_export(space)
    if args.format == "text":
        lines = [f"{document.kind} (rank {document.n}, d = {document.symmetrizer}, c = {document.order})"]
        if document.affine:
            data = document.affine
            lines.append(f"delta = {data.delta}, S0 = {data.S0}, s_aff = {data.s_aff}, theta = {data.theta}")
        if document.xc is not None:
            lines.append(f"x_c = {document.xc}")
        _emit(args, "classify.txt", "\n".join(lines) + "\n")
    else:
        _emit(args, "classify.json", to_json(document))
    return 0


def cmd_sortables(args: argparse.Namespace, B: ExchangeMatrix, settings: Settings) -> int:
    space = build(B)
    rng = random.Random(args.seed) if args.seed is not None else None
    group = CoxeterGroup(space.cartan, space.d)
    engine = SortableEngine(space, group, coxeter_word(space), rng)
    vertices = enumerate_sortables(engine, args.max_len, settings.NODE_CAP)
    document = sortables_export(engine.c.word, args.max_len, vertices)
    if args.format == "text":
        text = "".join(f"{v.word} {[list(r) for r in v.labels]}\n" for v in document.sortables)
        _emit(args, "sortables.txt", text)
    else:
        _emit(args, "sortables.json", to_json(document))
    return 0


def cmd_dcamb(args: argparse.Namespace, B: ExchangeMatrix, settings: Settings) -> int:
    space = build(B)
    rng = random.Random(args.seed) if args.seed is not None else None
    graph = doubled_graph(space, args.max_len, settings.NODE_CAP, rng=rng)
    logger.info(f"{len(graph.interior_vertices())} interior vertices of {len(graph.vertices)}")
    if args.out is not None:
        write_artifact(args.out, "dcamb.gv", framework_dot(graph))
        write_artifact(args.out, "fan.json", to_json(fan_export(graph)))
        write_artifact(args.out, "framework.json", to_json(framework_export(graph)))
    elif args.format == "dot":
        sys.stdout.write(framework_dot(graph))
    else:
        sys.stdout.write(to_json(framework_export(graph)))
    return 0


def cmd_verify(args: argparse.Namespace, B: ExchangeMatrix, settings: Settings) -> int:
    space = build(B)
    rng = random.Random(args.seed) if args.seed is not None else None
    report = run_suite(space, settings, args.max_len, args.depth, rng=rng, corrupt=args.corrupt)
    if args.out is not None:
        write_artifact(args.out, "verify.json", to_json(suite_export(report)))
        write_artifact(args.out, "verify.txt", suite_text(report))
    elif args.format == "text":
        sys.stdout.write(suite_text(report))
    else:
        sys.stdout.write(to_json(suite_export(report)))
    if not report.passed:
        logger.error("Verification reported FAIL")
        return 1
    return 0


def cmd_exchange_graph(args: argparse.Namespace, B: ExchangeMatrix, settings: Settings) -> int:
    graph = exchange_graph(B, args.depth, settings.NODE_CAP)
    if args.format == "dot":
        _emit(args, "exchange.gv", exchange_graph_dot(graph))
    else:
        _emit(args, "exchange.json", to_json(exchange_graph_export(graph)))
    return 0


def cmd_green(args: argparse.Namespace, B: ExchangeMatrix, settings: Settings) -> int:
    space = build(B)
    graph = doubled_graph(space, args.max_len, settings.NODE_CAP)
    sequence = find_green_sequence(graph)
    if args.format == "text":
        text = "".join(f"{list(label)}\n" for label in sequence.crossings)
        _emit(args, "green.txt", text)
    else:
        _emit(args, "green.json", to_json(green_export(sequence)))
    return 0


def cmd_project(args: argparse.Namespace, B: ExchangeMatrix, settings: Settings) -> int:
    space = build(B)
    graph = doubled_graph(space, args.max_len, settings.NODE_CAP)
    points = project(space, graph.cones(), Chart(args.chart))
    _emit(args, f"chart-{args.chart}.csv", chart_csv(points))
    return 0


HANDLERS = {
    "classify": cmd_classify,
    "sortables": cmd_sortables,
    "dcamb": cmd_dcamb,
    "verify": cmd_verify,
    "exchange-graph": cmd_exchange_graph,
    "green": cmd_green,
    "project": cmd_project,
}


def main(argv: list[str] | None = None) -> int:
    settings = get_settings()
    logging.basicConfig(level=settings.LOG_LEVEL)
    args = parse_args(argv)
    try:
        text = args.matrix.read_text() if args.matrix is not None else args.inline
        B = read_matrix(text)
        return HANDLERS[args.command](args, B, settings)
    except CambrianError as error:
        logger.error(f"{args.command} failed: {error}", exc_info=True)
        sys.stdout.write(to_json(ErrorResponse(error=str(error), kind=type(error).__name__)))
        return 2


if __name__ == "__main__":
    sys.exit(main())
