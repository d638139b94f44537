"""Command-line surface for the toolkit.

Exit codes: 0 success or verification pass, 1 verification failure,
2 input error, 3 parameter search exhausted.
"""

from __future__ import annotations

import argparse
import sys

from .arrangement import validate_description
from .graphs import LabelledDigraph
from .realization import (
    NonSimpleArrangement,
    ParameterSearchExhausted,
    realize_sectors,
    realize_segments,
)
from .reductions import (
    InvalidDescription,
    NonSimpleDescription,
    reduce_sectors,
    reduce_segments,
)
from .rendering import RenderStyle, export_dot, render_svg
from .serialization import Document, SchemaError, load_document, save_document
from .transmission import transmission_graph
from .verification import (
    RandomSpec,
    SamplingExhausted,
    random_simple_arrangement,
    round_trip_sectors,
    round_trip_segments,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_SEARCH_EXHAUSTED = 3


class InputError(Exception):
    pass


def _load(path, kind) -> Document:
    try:
        doc = load_document(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except SchemaError as exc:
        raise InputError(f"{path}: {exc}") from None
    if doc.kind != kind:
        raise InputError(f"{path}: expected a {kind} document, found {doc.kind}")
    return doc


def _cmd_gen(args) -> int:
    try:
        arr = random_simple_arrangement(
            RandomSpec(n=args.n, seed=args.seed, coord_bound=args.bound)
        )
    except (ValueError, SamplingExhausted) as exc:
        raise InputError(str(exc)) from None
    save_document(Document("arrangement", arr), args.out)
    return EXIT_OK


def _cmd_describe(args) -> int:
    arr = _load(getattr(args, "in"), "arrangement").payload
    from .arrangement import extract_description

    save_document(Document("description", extract_description(arr)), args.out)
    return EXIT_OK


def _cmd_validate(args) -> int:
    desc = _load(getattr(args, "in"), "description").payload
    report = validate_description(desc)
    for violation in report.violations:
        print(violation)
    status = "ok" if report.ok else "invalid"
    print(f"{status} ({'simple' if report.simple else 'non-simple'})")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _reduce_fn(mode):
    return reduce_segments if mode == "segments" else reduce_sectors


def _cmd_reduce(args) -> int:
    desc = _load(getattr(args, "in"), "description").payload
    try:
        graph = _reduce_fn(args.mode)(desc)
    except (InvalidDescription, NonSimpleDescription) as exc:
        raise InputError(str(exc)) from None
    save_document(Document("graph", graph), args.out)
    return EXIT_OK


def _cmd_realize(args) -> int:
    arr = _load(getattr(args, "in"), "arrangement").payload
    try:
        if args.mode == "segments":
            realized = realize_segments(arr)
        else:
            realized = realize_sectors(arr)
    except NonSimpleArrangement as exc:
        raise InputError(str(exc)) from None
    except ParameterSearchExhausted as exc:
        print(f"parameter search exhausted: {exc.detail}", file=sys.stderr)
        return EXIT_SEARCH_EXHAUSTED
    save_document(Document("instance", realized.instance), args.out)
    return EXIT_OK


def _cmd_tgraph(args) -> int:
    inst = _load(getattr(args, "in"), "instance").payload
    save_document(Document("graph", transmission_graph(inst)), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    arr = _load(getattr(args, "in"), "arrangement").payload
    try:
        if args.mode == "segments":
            report = round_trip_segments(arr)
        else:
            report = round_trip_sectors(arr)
    except NonSimpleArrangement as exc:
        raise InputError(str(exc)) from None
    except ParameterSearchExhausted as exc:
        print(f"parameter search exhausted: {exc.detail}", file=sys.stderr)
        return EXIT_SEARCH_EXHAUSTED
    if args.report:
        save_document(Document("report", report), args.report)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_render(args) -> int:
    path = getattr(args, "in")
    try:
        doc = load_document(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except SchemaError as exc:
        raise InputError(f"{path}: {exc}") from None
    if doc.kind not in ("instance", "arrangement"):
        raise InputError(f"{path}: cannot render a {doc.kind} document")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(doc.payload, RenderStyle()))
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    graph: LabelledDigraph = _load(getattr(args, "in"), "graph").payload
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(export_dot(graph))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transgraph",
        description="Exact toolkit for generalized transmission graph reductions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="random simple line arrangement")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("describe", help="arrangement -> crossing description")
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_describe)

    p = sub.add_parser("validate", help="check description well-formedness")
    p.add_argument("--in", required=True)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("reduce", help="description -> candidate graph")
    p.add_argument("--mode", choices=("segments", "sectors"), required=True)
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("realize", help="arrangement -> object instance")
    p.add_argument("--mode", choices=("segments", "sectors"), required=True)
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_realize)

    p = sub.add_parser("tgraph", help="instance -> transmission graph")
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_tgraph)

    p = sub.add_parser("verify", help="full round trip on an arrangement")
    p.add_argument("--mode", choices=("segments", "sectors"), required=True)
    p.add_argument("--in", required=True)
    p.add_argument("--report", default=None)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("render", help="instance or arrangement -> SVG")
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("export-dot", help="graph -> DOT")
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
