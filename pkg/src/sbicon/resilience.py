"""b-bridges and b-articulation points of strongly biconnected digraphs.

A b-bridge is an arc whose removal leaves a graph that is not strongly
biconnected; a b-articulation point is the vertex analogue.

:func:`b_bridges_fast` avoids testing every arc. Strong bridges are
b-bridges outright. The remaining candidates are confined to a sparse
strongly biconnected spanning subgraph ``E_y``: an arc outside ``E_y``
cannot be a b-bridge because ``E_y`` survives its removal. ``E_y`` starts
as the union of a DFS out-tree and a DFS in-tree from one root and is
grown one arc at a time, each arc joining two vertices that share no
block, until its underlying graph is a single block. Every such arc merges
at least two blocks, so there are at most ``n - 1`` rounds and
``|E_y| <= 3(n - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .connectivity import (
    ScssCertificate,
    Witness,
    is_strongly_connected,
    scss_certificate,
    strong_biconnectivity_failure,
)
from .critical import strong_articulation_points, strong_bridges
from .errors import InternalContradiction, PreconditionError
from .graph import Arc, Digraph, delete_arc, delete_vertex

ROOT = 0


@dataclass(frozen=True)
class AugmentationTrace:
    root: int
    initial_arcs: tuple[Arc, ...]
    added_arcs: tuple[Arc, ...]
    component_counts: tuple[int, ...]

    @property
    def final_arcs(self) -> tuple[Arc, ...]:
        return self.initial_arcs + self.added_arcs

    def as_dict(self) -> dict:
        return {
            "added_arcs": [list(a) for a in self.added_arcs],
            "component_counts": list(self.component_counts),
            "initial_arcs": [list(a) for a in self.initial_arcs],
            "root": self.root,
        }


def require_strongly_biconnected(g: Digraph) -> None:
    w = strong_biconnectivity_failure(g)
    if w is not None:
        raise PreconditionError(w.kind.value, detail=w)


def _require_min_vertices(g: Digraph, k: int) -> None:
    if g.n < k:
        raise PreconditionError("too_few_vertices", f"need at least {k} vertices, got {g.n}")


def augment_to_strongly_biconnected(g: Digraph, certificate: ScssCertificate) -> AugmentationTrace:
    require_strongly_biconnected(g)
    ids = np.asarray(certificate.certificate_arcs, dtype=np.int64)
    if len(ids) and (ids.min() < 0 or ids.max() >= g.m):
        raise PreconditionError("foreign_certificate", "certificate arcs are not arcs of g")
    in_y = np.zeros(g.m, dtype=np.bool_)
    in_y[ids] = True
    eu, _, _, arc_edge, uptr, unbr, ueid = g._undirected
    added, counts, status = K.augment(
        uptr, unbr, ueid, len(eu), arc_edge, g.tails, g.heads, in_y
    )
    if status != 0:
        raise InternalContradiction(
            "no arc joins two blocks of the spanning subgraph although g is strongly biconnected"
            if status == 1
            else "augmentation exceeded n rounds"
        )
    arcs = g.arcs
    return AugmentationTrace(
        root=certificate.root,
        initial_arcs=tuple(arcs[i] for i in certificate.certificate_arcs),
        added_arcs=tuple(arcs[i] for i in added.tolist()),
        component_counts=tuple(counts.tolist()),
    )


def _kernel_graph_args(g: Digraph):
    return (g.out_ptr, g.out_nbr, g.out_arc, g.in_ptr, g.in_nbr, g.in_arc)


def b_bridges_fast(g: Digraph) -> tuple[frozenset[Arc], AugmentationTrace]:
    """All b-bridges of a strongly biconnected digraph, in O(nm) time."""
    require_strongly_biconnected(g)
    _require_min_vertices(g, 3)
    found = set(strong_bridges(g))
    trace = augment_to_strongly_biconnected(g, scss_certificate(g, ROOT))

    cand = sorted(g.arc_id(a) for a in trace.final_arcs if a not in found)
    _, _, _, arc_edge, uptr, unbr, ueid = g._undirected
    flags = K.b_bridge_flags(
        uptr, unbr, ueid, arc_edge, g.has_antiparallel,
        np.asarray(cand, dtype=np.int64),
    )
    arcs = g.arcs
    found.update(arcs[i] for i, hit in zip(cand, flags.tolist()) if hit)
    return frozenset(found), trace


def b_bridges(g: Digraph) -> frozenset[Arc]:
    return b_bridges_fast(g)[0]


def _b_articulation_points(g: Digraph) -> frozenset[int]:
    saps = strong_articulation_points(g)
    cand = np.array([v for v in range(g.n) if v not in saps], dtype=np.int64)
    _, _, _, _, uptr, unbr, ueid = g._undirected
    flags = K.b_articulation_flags(*_kernel_graph_args(g), uptr, unbr, ueid, cand)
    return frozenset(saps | {int(v) for v, hit in zip(cand, flags) if hit})


def b_articulation_points(g: Digraph) -> frozenset[int]:
    """Strong articulation points plus the non-strong vertices whose
    removal breaks the underlying biconnectivity."""
    require_strongly_biconnected(g)
    _require_min_vertices(g, 4)
    return _b_articulation_points(g)


@dataclass(frozen=True)
class BResilienceReport:
    """Everything :func:`classify` learns about a digraph.

    The b-sets are ``None`` when the graph is not strongly biconnected (or
    too small for the notion); ``failure`` then names the broken clause.
    For ``n == 3`` the b-articulation points are computed with the
    convention that a two-vertex residual is strongly biconnected iff both
    arcs between its vertices are present.
    """

    n: int
    m: int
    strongly_connected: bool
    strongly_biconnected: bool
    failure: Witness | None
    strong_bridges: frozenset[Arc] | None
    strong_articulation_points: frozenset[int] | None
    b_bridges: frozenset[Arc] | None
    b_articulation_points: frozenset[int] | None
    is_2edge_sb: bool
    is_2vertex_sb: bool
    trace: AugmentationTrace | None = None
    bridge_witnesses: dict[Arc, Witness] = field(default_factory=dict)
    articulation_witnesses: dict[int, Witness] = field(default_factory=dict)


def _arc_witness(g: Digraph, e: Arc) -> Witness:
    w = strong_biconnectivity_failure(delete_arc(g, e))
    if w is None:
        raise InternalContradiction(f"{e} reported as b-bridge but residual is strongly biconnected")
    return w


def _vertex_witness(g: Digraph, v: int) -> Witness:
    sub, kept = delete_vertex(g, v)
    w = strong_biconnectivity_failure(sub)
    if w is None:
        raise InternalContradiction(f"{v} reported as b-articulation point but residual is strongly biconnected")
    return Witness(w.kind, tuple(kept[x] for x in w.vertices))


def classify(g: Digraph, witnesses: bool = True) -> BResilienceReport:
    sc = is_strongly_connected(g)
    failure = strong_biconnectivity_failure(g)
    sb = failure is None
    sbr = strong_bridges(g) if sc else None
    saps = strong_articulation_points(g) if sc and g.n >= 3 else None
    bb = bap = trace = None
    if sb and g.n >= 3:
        bb, trace = b_bridges_fast(g)
        bap = _b_articulation_points(g)
    report = BResilienceReport(
        n=g.n,
        m=g.m,
        strongly_connected=sc,
        strongly_biconnected=sb,
        failure=failure,
        strong_bridges=sbr,
        strong_articulation_points=saps,
        b_bridges=bb,
        b_articulation_points=bap,
        is_2edge_sb=bb is not None and not bb,
        is_2vertex_sb=bap is not None and not bap,
        trace=trace,
    )
    if witnesses and bb is not None:
        report.bridge_witnesses.update((e, _arc_witness(g, e)) for e in sorted(bb))
        report.articulation_witnesses.update((v, _vertex_witness(g, v)) for v in sorted(bap))
    return report
