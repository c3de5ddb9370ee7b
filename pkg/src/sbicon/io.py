"""Edge-list files, report documents and DOT output.

Edge-list format::

    # comment
    nodes 4        (optional; declares labels 0..3 up front)
    0 1
    1 2

Labels are nonnegative integers, mapped to dense vertex ids in order of
first appearance (declared nodes first).
"""

from __future__ import annotations

import json
import logging
from importlib import resources

from .connectivity import Witness
from .errors import ConstructionError, ParseError
from .graph import Digraph, build
from .resilience import BResilienceReport
from .sbcc import SbccCover

log = logging.getLogger(__name__)

FIXTURES = ("fig1", "fig2", "fig3")


def _label(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise ParseError(f"expected a nonnegative integer label, got {tok!r}", lineno)
    return int(tok)


def parse_edge_list(text: str) -> Digraph:
    ids: dict[int, int] = {}
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "nodes":
            if len(parts) != 2:
                raise ParseError("expected 'nodes <k>'", lineno)
            if arcs:
                raise ParseError("'nodes' header must precede all arcs", lineno)
            for lab in range(_label(parts[1], lineno)):
                ids.setdefault(lab, len(ids))
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'tail head', got {line!r}", lineno)
        t, h = (_label(p, lineno) for p in parts)
        if t == h:
            raise ParseError(f"self-loop at {t}", lineno)
        arcs.append((ids.setdefault(t, len(ids)), ids.setdefault(h, len(ids))))
    labels = list(ids)
    try:
        g = build(len(labels), arcs, labels)
    except ConstructionError as exc:  # pragma: no cover - parse checks come first
        raise ParseError(str(exc)) from exc
    if g.dropped_duplicates:
        log.warning("dropped %d duplicate arc(s)", g.dropped_duplicates)
    return g


def read_edge_list(path) -> Digraph:
    if str(path) == "-":
        import sys

        return parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8", newline=None) as fh:
        return parse_edge_list(fh.read())


def load_fixture(name: str) -> Digraph:
    """One of the bundled example graphs: ``fig1``, ``fig2`` or ``fig3``."""
    text = resources.files("sbicon").joinpath("data", f"{name}.edges").read_text("utf-8")
    return parse_edge_list(text)


def serialize_edge_list(g: Digraph) -> str:
    labels = [g.label(v) for v in range(g.n)]
    lines = []
    if labels == list(range(g.n)):
        lines.append(f"nodes {g.n}")
    else:
        touched = set()
        for t, h in g.arcs:
            touched.update((t, h))
        if len(touched) < g.n:
            raise ValueError("isolated vertices with non-dense labels cannot be written")
    lines.extend(f"{g.label(t)} {g.label(h)}" for t, h in g.arcs)
    return "\n".join(lines) + "\n"


# -- report documents ---------------------------------------------------------


def arcs_doc(g: Digraph, arcs) -> list[list[int]] | None:
    if arcs is None:
        return None
    return sorted([g.label(t), g.label(h)] for t, h in arcs)


def verts_doc(g: Digraph, vs) -> list[int] | None:
    if vs is None:
        return None
    return sorted(g.label(v) for v in vs)


def witness_doc(g: Digraph, w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {"kind": w.kind.value, "vertices": [g.label(v) for v in w.vertices]}


def sbcc_doc(g: Digraph, cover: SbccCover | None) -> list[list[int]] | None:
    if cover is None:
        return None
    return sorted(sorted(g.label(v) for v in c) for c in cover.components)


def trace_doc(g: Digraph, trace) -> dict | None:
    if trace is None:
        return None
    return {
        "added_arcs": [[g.label(t), g.label(h)] for t, h in trace.added_arcs],
        "component_counts": list(trace.component_counts),
        "initial_arcs": arcs_doc(g, trace.initial_arcs),
        "root": g.label(trace.root),
    }


def report_document(
    g: Digraph,
    report: BResilienceReport,
    cover: SbccCover | None = None,
    include_trace: bool = False,
) -> dict:
    doc = {
        "b_articulation_points": verts_doc(g, report.b_articulation_points),
        "b_bridges": arcs_doc(g, report.b_bridges),
        "failure": witness_doc(g, report.failure),
        "is_2edge_sb": report.is_2edge_sb,
        "is_2vertex_sb": report.is_2vertex_sb,
        "m": report.m,
        "n": report.n,
        "sbcc": sbcc_doc(g, cover),
        "strong_articulation_points": verts_doc(g, report.strong_articulation_points),
        "strong_bridges": arcs_doc(g, report.strong_bridges),
        "strongly_biconnected": report.strongly_biconnected,
        "strongly_connected": report.strongly_connected,
        "witnesses": {
            "b_articulation_points": sorted(
                ({"vertex": g.label(v), **witness_doc(g, w)} for v, w in report.articulation_witnesses.items()),
                key=lambda d: d["vertex"],
            ),
            "b_bridges": sorted(
                ({"arc": [g.label(e[0]), g.label(e[1])], **witness_doc(g, w)} for e, w in report.bridge_witnesses.items()),
                key=lambda d: d["arc"],
            ),
        },
    }
    if include_trace:
        doc["trace"] = trace_doc(g, report.trace)
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str):
    return json.loads(text)


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        if not value:
            return "(none)"
        return ", ".join(_fmt(v) if not isinstance(v, list) else "(" + " ".join(map(str, v)) + ")" for v in value)
    return str(value)


def render_text(doc: dict) -> str:
    """Human-readable ``key: value`` lines, keys in document order."""
    lines = []
    for key, value in doc.items():
        if key == "witnesses":
            for w in value["b_bridges"]:
                lines.append(f"witness b-bridge {w['arc'][0]}->{w['arc'][1]}: {w['kind']} {w['vertices']}")
            for w in value["b_articulation_points"]:
                lines.append(f"witness b-articulation-point {w['vertex']}: {w['kind']} {w['vertices']}")
        elif key == "sbcc" and value is not None:
            lines.append(f"sbcc: {len(value)} component(s)")
            lines.extend("  {" + ", ".join(map(str, c)) + "}" for c in value)
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_fmt(v)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines) + "\n"


# -- DOT ----------------------------------------------------------------------


def _q(label) -> str:
    return '"' + str(label).replace('"', '\\"') + '"'


def emit_dot(g: Digraph, report: BResilienceReport | None = None, name: str = "G") -> str:
    """Graphviz digraph; b-bridges red/bold (dashed when also a strong
    bridge), b-articulation points drawn as double circles."""
    bb = (report.b_bridges if report else None) or frozenset()
    sb = (report.strong_bridges if report else None) or frozenset()
    bap = (report.b_articulation_points if report else None) or frozenset()
    out = [f"digraph {name} {{", "  node [shape=circle];"]
    for v in sorted(range(g.n), key=g.label):
        attrs = " [shape=doublecircle]" if v in bap else ""
        out.append(f"  {_q(g.label(v))}{attrs};")
    for t, h in sorted(g.arcs, key=lambda a: (g.label(a[0]), g.label(a[1]))):
        attrs = ""
        if (t, h) in bb:
            style = "bold,dashed" if (t, h) in sb else "bold"
            attrs = f' [color=red, style="{style}"]'
        out.append(f"  {_q(g.label(t))} -> {_q(g.label(h))}{attrs};")
    out.append("}")
    return "\n".join(out) + "\n"
