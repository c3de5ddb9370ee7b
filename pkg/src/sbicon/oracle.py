"""Brute-force reference answers, straight from the definitions.

Nothing here touches dominators, blocks or the sparsified candidate set;
each answer is a loop of "delete one thing, re-test the predicate".
"""

from __future__ import annotations

from itertools import combinations

from .connectivity import is_strongly_biconnected, is_strongly_connected
from .critical import CriticalSets
from .errors import PreconditionError
from .graph import Arc, Digraph, delete_arc, delete_vertex, induced_subgraph
from .sbcc import SbccCover, cover_from_components

MAX_SBCC_VERTICES = 12


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise PreconditionError(reason)


def naive_b_bridges(g: Digraph) -> frozenset[Arc]:
    _require(is_strongly_biconnected(g), "not_strongly_biconnected")
    return frozenset(e for e in g.arcs if not is_strongly_biconnected(delete_arc(g, e)))


def naive_b_articulation_points(g: Digraph) -> frozenset[int]:
    _require(is_strongly_biconnected(g), "not_strongly_biconnected")
    _require(g.n >= 4, "too_few_vertices")
    return frozenset(
        v for v in range(g.n) if not is_strongly_biconnected(delete_vertex(g, v)[0])
    )


def naive_critical_sets(g: Digraph) -> CriticalSets:
    _require(is_strongly_connected(g), "not_strongly_connected")
    bridges = frozenset(e for e in g.arcs if not is_strongly_connected(delete_arc(g, e)))
    if g.n < 3:
        saps: frozenset[int] = frozenset()
    else:
        saps = frozenset(
            v for v in range(g.n) if not is_strongly_connected(delete_vertex(g, v)[0])
        )
    return CriticalSets(bridges, saps)


def naive_sbcc(g: Digraph) -> SbccCover:
    """Maximal vertex sets inducing strongly biconnected subgraphs.

    Enumerates subsets from largest to smallest, so a set is maximal
    exactly when no previously accepted set contains it.
    """
    _require(is_strongly_connected(g), "not_strongly_connected")
    if g.n > MAX_SBCC_VERTICES:
        raise PreconditionError(
            "size_guard", f"naive_sbcc enumerates subsets; n={g.n} > {MAX_SBCC_VERTICES}"
        )
    n = g.n
    out_mask = [0] * n
    in_mask = [0] * n
    for t, h in g.arcs:
        out_mask[t] |= 1 << h
        in_mask[h] |= 1 << t
    found: list[int] = []
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(mask & f == mask for f in found):
                continue
            # cheap necessary condition for strong connectivity
            if size > 1 and not all(out_mask[v] & mask and in_mask[v] & mask for v in combo):
                continue
            if is_strongly_biconnected(induced_subgraph(g, combo)[0]):
                found.append(mask)
    comps = [frozenset(v for v in range(n) if f >> v & 1) for f in found]
    return cover_from_components(n, comps)
