"""Strong bridges and strong articulation points via two dominator trees."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels as K
from .connectivity import is_strongly_connected
from .dominators import dominator_tree, flowgraph_bridges
from .errors import PreconditionError
from .graph import Arc, Digraph, reverse

ROOT = 0


@dataclass(frozen=True)
class CriticalSets:
    strong_bridges: frozenset[Arc]
    strong_articulation_points: frozenset[int]

    @property
    def sap_count(self) -> int:
        return len(self.strong_articulation_points)


def _require_sc(g: Digraph) -> None:
    if not is_strongly_connected(g):
        raise PreconditionError("not_strongly_connected")


def strong_bridges(g: Digraph) -> frozenset[Arc]:
    """Arcs whose removal destroys strong connectivity.

    An arc is a strong bridge iff it is a bridge of the flowgraph rooted at
    ``ROOT`` in g or (reversed) in the reverse graph.
    """
    _require_sc(g)
    if g.n <= 1:
        return frozenset()
    fwd = flowgraph_bridges(g, ROOT)
    bwd = {(w, v) for v, w in flowgraph_bridges(reverse(g), ROOT)}
    return frozenset(fwd | bwd)


def _nontrivial_dominators(g: Digraph) -> set[int]:
    t = dominator_tree(g, ROOT)
    return {d for d in t.idom if d is not None and d != ROOT}


def strong_articulation_points(g: Digraph) -> frozenset[int]:
    _require_sc(g)
    if g.n < 3:
        raise PreconditionError("too_few_vertices", "strong articulation points need n >= 3")
    saps = _nontrivial_dominators(g) | _nontrivial_dominators(reverse(g))
    if not K.strongly_connected_without(
        g.out_ptr, g.out_nbr, g.out_arc, g.in_ptr, g.in_nbr, g.in_arc, -1, ROOT
    ):
        saps.add(ROOT)
    return frozenset(saps)


def critical_sets(g: Digraph) -> CriticalSets:
    return CriticalSets(strong_bridges(g), strong_articulation_points(g))
