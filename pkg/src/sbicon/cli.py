"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 input outside the domain of the requested analysis.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import oracle
from .connectivity import is_strongly_connected, strong_biconnectivity_failure
from .critical import strong_articulation_points, strong_bridges
from .errors import ParseError, PreconditionError
from .generate import generate
from .io import (
    arcs_doc,
    verts_doc,
    witness_doc,
    dumps,
    emit_dot,
    read_edge_list,
    render_text,
    report_document,
    sbcc_doc,
    serialize_edge_list,
    trace_doc,
)
from .resilience import b_articulation_points, b_bridges_fast, classify, require_strongly_biconnected
from .sbcc import strongly_biconnected_components

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, doc: dict) -> None:
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write(render_text(doc))


def _cmd_check(args, g) -> int:
    w = strong_biconnectivity_failure(g)
    doc = {
        "failure": witness_doc(g, w),
        "strongly_biconnected": w is None,
        "strongly_connected": is_strongly_connected(g),
    }
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    elif w is None:
        print("strongly biconnected")
    else:
        labels = " ".join(str(g.label(v)) for v in w.vertices)
        print(f"{w.kind.value.replace('_', ' ')} (witness: {labels})")
    return EXIT_OK


def _cmd_b_bridges(args, g) -> int:
    bb, trace = b_bridges_fast(g)
    doc = {"b_bridges": arcs_doc(g, bb)}
    if args.trace:
        doc["trace"] = trace_doc(g, trace)
    _emit(args, doc)
    return EXIT_OK


def _cmd_b_aps(args, g) -> int:
    _emit(args, {"b_articulation_points": verts_doc(g, b_articulation_points(g))})
    return EXIT_OK


def _cmd_strong_bridges(args, g) -> int:
    _emit(args, {"strong_bridges": arcs_doc(g, strong_bridges(g))})
    return EXIT_OK


def _cmd_saps(args, g) -> int:
    _emit(args, {"strong_articulation_points": verts_doc(g, strong_articulation_points(g))})
    return EXIT_OK


def _cmd_sbcc(args, g) -> int:
    _emit(args, {"sbcc": sbcc_doc(g, strongly_biconnected_components(g))})
    return EXIT_OK


def _cmd_analyze(args, g) -> int:
    report = classify(g)
    cover = strongly_biconnected_components(g) if report.strongly_connected else None
    _emit(args, report_document(g, report, cover, include_trace=args.trace))
    return EXIT_OK


def _cmd_oracle(args, g) -> int:
    what = args.analysis
    if what == "b-bridges":
        doc = {"b_bridges": arcs_doc(g, oracle.naive_b_bridges(g))}
    elif what == "b-articulation-points":
        doc = {"b_articulation_points": verts_doc(g, oracle.naive_b_articulation_points(g))}
    elif what == "critical":
        cs = oracle.naive_critical_sets(g)
        doc = {
            "strong_articulation_points": verts_doc(g, cs.strong_articulation_points),
            "strong_bridges": arcs_doc(g, cs.strong_bridges),
        }
    else:
        doc = {"sbcc": sbcc_doc(g, oracle.naive_sbcc(g))}
    _emit(args, doc)
    return EXIT_OK


def _cmd_dot(args, g) -> int:
    report = None
    if args.highlight:
        require_strongly_biconnected(g)
        report = classify(g, witnesses=False)
    sys.stdout.write(emit_dot(g, report))
    return EXIT_OK


def _cmd_gen(args) -> int:
    g = generate(args.n, args.m, args.seed)
    if args.format == "json":
        sys.stdout.write(dumps({"arcs": [list(a) for a in g.arcs], "n": g.n}))
    else:
        sys.stdout.write(serialize_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--trace", action="store_true", help="include the augmentation trace")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="sbicon", description="Resilience analysis of strongly biconnected digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    graph_cmds = {
        "check": (_cmd_check, "test strong biconnectivity and name the failing clause"),
        "b-bridges": (_cmd_b_bridges, "arcs whose removal breaks strong biconnectivity"),
        "b-articulation-points": (_cmd_b_aps, "vertices whose removal breaks strong biconnectivity"),
        "strong-bridges": (_cmd_strong_bridges, "arcs whose removal breaks strong connectivity"),
        "strong-articulation-points": (_cmd_saps, "vertices whose removal breaks strong connectivity"),
        "sbcc": (_cmd_sbcc, "strongly biconnected components"),
        "analyze": (_cmd_analyze, "full resilience report"),
    }
    for name, (fn, help_) in graph_cmds.items():
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("file", help="edge-list file, '-' for stdin")
        p.set_defaults(func=fn)

    p = sub.add_parser("oracle", help="brute-force reference versions", parents=[common])
    p.add_argument("analysis", choices=("b-bridges", "b-articulation-points", "critical", "sbcc"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("dot", help="Graphviz output", parents=[common])
    p.add_argument("file")
    p.add_argument("--highlight", action="store_true", help="style b-bridges and b-articulation points")
    p.set_defaults(func=_cmd_dot)

    p = sub.add_parser("gen", help="random strongly biconnected digraph", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="sbicon: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        try:
            g = read_edge_list(args.file)
        except OSError as exc:
            print(f"sbicon: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
            return EXIT_PARSE
        return args.func(args, g)
    except ParseError as exc:
        print(f"sbicon: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        payload = {"error": "precondition", "message": str(exc), "reason": exc.reason}
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
        if args.format == "json":
            sys.stdout.write(dumps(payload))
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
