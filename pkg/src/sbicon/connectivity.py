"""Strong connectivity, blocks of the underlying graph, and the
two-spanning-trees certificate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import PreconditionError
from .graph import Arc, Digraph, UndirectedView, underlying


def is_strongly_connected(g: Digraph) -> bool:
    return bool(
        K.strongly_connected_without(
            g.out_ptr, g.out_nbr, g.out_arc, g.in_ptr, g.in_nbr, g.in_arc, -1, -1
        )
    )


def strongly_connected_components(g: Digraph) -> list[frozenset[int]]:
    """Tarjan's algorithm without recursion.

    Components come out in reverse topological order of the condensation
    (sink components first).
    """
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    ptr = g.out_ptr.tolist()
    nbr = g.out_nbr.tolist()
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, ptr[root])]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, k = work[-1]
            if k < ptr[v + 1]:
                work[-1] = (v, k + 1)
                w = nbr[k]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, ptr[w]))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                p = work[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    return comps


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    undirected_bridges: frozenset[frozenset[int]]
    block_edges: tuple[tuple[tuple[int, int], ...], ...] = ()

    def __len__(self) -> int:
        return len(self.blocks)


def block_decomposition(u: UndirectedView) -> BlockDecomposition:
    """Blocks, cut vertices and bridges of every connected component.

    Blocks are listed in the order the DFS completes them; an isolated
    vertex forms its own single-vertex block.
    """
    k = u.edge_count
    block, nb = K.block_labels(u.ptr, u.nbr, u.eid, np.ones(k, dtype=np.bool_))
    verts: list[set[int]] = [set() for _ in range(nb)]
    edges: list[list[tuple[int, int]]] = [[] for _ in range(nb)]
    for e, b in enumerate(block.tolist()):
        a, c = u.edges[e]
        verts[b].update((a, c))
        edges[b].append((a, c))
    touched = np.zeros(u.vertex_count, dtype=np.int64)
    for vs in verts:
        for v in vs:
            touched[v] += 1
    blocks = [frozenset(vs) for vs in verts]
    block_edges = [tuple(es) for es in edges]
    for v in np.flatnonzero(touched == 0).tolist():
        blocks.append(frozenset((v,)))
        block_edges.append(())
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(np.flatnonzero(touched >= 2).tolist()),
        undirected_bridges=frozenset(frozenset(es[0]) for es in block_edges if len(es) == 1),
        block_edges=tuple(block_edges),
    )


def is_biconnected(u: UndirectedView) -> bool:
    """Connected with no cut vertex. K1 and K2 count as biconnected."""
    status, _ = K.biconnectivity_without(u.ptr, u.nbr, u.eid, -1, -1)
    return status == K.OK


def is_strongly_biconnected(g: Digraph) -> bool:
    return is_strongly_connected(g) and is_biconnected(underlying(g))


class FailureKind(enum.Enum):
    NOT_STRONGLY_CONNECTED = "not_strongly_connected"
    UNDERLYING_NOT_BICONNECTED = "underlying_not_biconnected"


@dataclass(frozen=True)
class Witness:
    """Why a graph is not strongly biconnected.

    For NOT_STRONGLY_CONNECTED, ``vertices == (source, target)`` with
    target unreachable from source. For UNDERLYING_NOT_BICONNECTED,
    ``vertices == (cut,)`` for an articulation point of the underlying
    graph, or ``(a, b)`` for two vertices in different components.
    """

    kind: FailureKind
    vertices: tuple[int, ...]


def strong_biconnectivity_failure(g: Digraph) -> Witness | None:
    """First failing clause of strong biconnectivity, or None if it holds."""
    if g.n >= 2:
        root = 0
        for ptr, nbr, forward in ((g.out_ptr, g.out_nbr, True), (g.in_ptr, g.in_nbr, False)):
            seen = np.zeros(g.n, dtype=np.bool_)
            aid = np.zeros(len(nbr), dtype=np.int64)
            K.mark_reachable(ptr, nbr, aid, root, -1, -1, seen)
            missing = np.flatnonzero(~seen)
            if len(missing):
                v = int(missing[0])
                pair = (root, v) if forward else (v, root)
                return Witness(FailureKind.NOT_STRONGLY_CONNECTED, pair)
    u = underlying(g)
    status, w = K.biconnectivity_without(u.ptr, u.nbr, u.eid, -1, -1)
    if status == K.CUT_VERTEX:
        return Witness(FailureKind.UNDERLYING_NOT_BICONNECTED, (int(w),))
    if status == K.DISCONNECTED:
        return Witness(FailureKind.UNDERLYING_NOT_BICONNECTED, (0, int(w)))
    return None


def verify_witness(g: Digraph, witness: Witness) -> bool:
    """Independently confirm that ``witness`` demonstrates a failure in ``g``."""
    if witness.kind is FailureKind.NOT_STRONGLY_CONNECTED:
        s, t = witness.vertices
        return t not in reachable_from(g, s)
    if len(witness.vertices) == 2:
        a, b = witness.vertices
        return b not in _undirected_reach(underlying(g), a, skip=-1)
    (c,) = witness.vertices
    u = underlying(g)
    rest = [v for v in range(g.n) if v != c]
    if not rest:
        return False
    return len(_undirected_reach(u, rest[0], skip=c)) < len(rest)


def reachable_from(g: Digraph, s: int) -> set[int]:
    seen = {s}
    todo = [s]
    while todo:
        v = todo.pop()
        for w in g.successors(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def _undirected_reach(u: UndirectedView, s: int, skip: int) -> set[int]:
    seen = {s}
    todo = [s]
    while todo:
        v = todo.pop()
        for w in u.neighbours(v):
            if w != skip and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@dataclass(frozen=True)
class ScssCertificate:
    """Strongly connected spanning subgraph from two DFS trees rooted at ``root``.

    ``forward_tree_arcs`` form an out-tree of g; ``backward_tree_arcs`` are
    g-arcs forming an in-tree (a DFS tree of the reverse graph, flipped
    back). Arc sets are tuples of arc ids in ascending order.
    """

    root: int
    forward_tree_arcs: tuple[int, ...]
    backward_tree_arcs: tuple[int, ...]
    certificate_arcs: tuple[int, ...]

    def arcs(self, g: Digraph) -> list[Arc]:
        return [g.arcs[i] for i in self.certificate_arcs]


def dfs_tree_arcs(ptr: np.ndarray, nbr: np.ndarray, aid: np.ndarray, root: int) -> list[int]:
    """Arc ids of the depth-first tree from ``root``, children in adjacency order."""
    n = len(ptr) - 1
    ptr_l, nbr_l, aid_l = ptr.tolist(), nbr.tolist(), aid.tolist()
    seen = [False] * n
    seen[root] = True
    it = ptr_l[:-1]
    stack = [root]
    tree = []
    while stack:
        v = stack[-1]
        if it[v] < ptr_l[v + 1]:
            k = it[v]
            it[v] += 1
            w = nbr_l[k]
            if not seen[w]:
                seen[w] = True
                tree.append(aid_l[k])
                stack.append(w)
        else:
            stack.pop()
    return tree


def scss_certificate(g: Digraph, y: int = 0) -> ScssCertificate:
    if not 0 <= y < g.n:
        raise PreconditionError("invalid_vertex", f"root {y} out of range")
    if not is_strongly_connected(g):
        raise PreconditionError("not_strongly_connected")
    fwd = dfs_tree_arcs(g.out_ptr, g.out_nbr, g.out_arc, y)
    # DFS over in-arcs is DFS in the reverse graph; the ids are already g's.
    bwd = dfs_tree_arcs(g.in_ptr, g.in_nbr, g.in_arc, y)
    return ScssCertificate(
        root=y,
        forward_tree_arcs=tuple(sorted(fwd)),
        backward_tree_arcs=tuple(sorted(bwd)),
        certificate_arcs=tuple(sorted(set(fwd) | set(bwd))),
    )
