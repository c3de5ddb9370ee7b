"""Dominator trees of flowgraphs (semi-NCA) and flowgraph bridges."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Arc, Digraph


@dataclass(frozen=True)
class DominatorTree:
    root: int
    idom: tuple[int | None, ...]
    pre: tuple[int, ...]
    post: tuple[int, ...]

    def reachable(self, v: int) -> bool:
        return self.pre[v] >= 0

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in self.idom]
        for v, d in enumerate(self.idom):
            if d is not None:
                kids[d].append(v)
        return kids


def dominator_tree(g: Digraph, root: int) -> DominatorTree:
    """Immediate dominators w.r.t. paths from ``root``.

    Vertices unreachable from ``root`` get ``idom None`` and pre/post -1.
    """
    n = g.n
    if not 0 <= root < n:
        raise PreconditionError("invalid_vertex", f"root {root} out of range")
    out_ptr, out_nbr = g.out_ptr.tolist(), g.out_nbr.tolist()
    in_ptr, in_nbr = g.in_ptr.tolist(), g.in_nbr.tolist()

    # Preorder DFS numbering; vertex[i] is the vertex numbered i.
    num = [-1] * n
    vertex = [root]
    parent = [0]
    num[root] = 0
    it = out_ptr[:-1]
    stack = [root]
    while stack:
        v = stack[-1]
        if it[v] < out_ptr[v + 1]:
            w = out_nbr[it[v]]
            it[v] += 1
            if num[w] < 0:
                num[w] = len(vertex)
                vertex.append(w)
                parent.append(num[v])
                stack.append(w)
        else:
            stack.pop()

    k = len(vertex)
    semi = list(range(k))
    label = list(range(k))
    anc = [-1] * k

    def evaluate(i: int) -> int:
        if anc[i] < 0:
            return i
        path = []
        j = i
        while anc[anc[j]] >= 0:
            path.append(j)
            j = anc[j]
        for x in reversed(path):
            a = anc[x]
            if semi[label[a]] < semi[label[x]]:
                label[x] = label[a]
            anc[x] = anc[a]
        return label[i]

    for i in range(k - 1, 0, -1):
        w = vertex[i]
        s = semi[i]
        for p in range(in_ptr[w], in_ptr[w + 1]):
            j = num[in_nbr[p]]
            if j < 0:
                continue
            sj = semi[evaluate(j)]
            if sj < s:
                s = sj
        semi[i] = s
        anc[i] = parent[i]

    dom = parent[:]
    for i in range(1, k):
        d = dom[i]
        while d > semi[i]:
            d = dom[d]
        dom[i] = d

    idom: list[int | None] = [None] * n
    for i in range(1, k):
        idom[vertex[i]] = vertex[dom[i]]

    pre = [-1] * n
    post = [-1] * n
    kids: list[list[int]] = [[] for _ in range(n)]
    for i in range(1, k):
        kids[idom[vertex[i]]].append(vertex[i])
    clock = 0
    work = [(root, 0)]
    pre[root] = clock
    clock += 1
    while work:
        v, c = work[-1]
        if c < len(kids[v]):
            work[-1] = (v, c + 1)
            w = kids[v][c]
            pre[w] = clock
            clock += 1
            work.append((w, 0))
        else:
            work.pop()
            post[v] = clock
            clock += 1
    return DominatorTree(root, tuple(idom), tuple(pre), tuple(post))


def dominates(t: DominatorTree, u: int, v: int) -> bool:
    """Whether ``u`` dominates ``v`` (reflexive)."""
    if not (t.reachable(u) and t.reachable(v)):
        raise PreconditionError("unreachable_vertex", f"{u} or {v} unreachable from {t.root}")
    return t.pre[u] <= t.pre[v] and t.post[v] <= t.post[u]


def flowgraph_bridges(g: Digraph, root: int, tree: DominatorTree | None = None) -> set[Arc]:
    """Arcs that lie on every path from ``root`` to their head.

    ``(u, v)`` qualifies iff ``u = idom(v)`` and ``v`` dominates every
    other predecessor of ``v``.
    """
    t = tree if tree is not None else dominator_tree(g, root)
    if not all(p >= 0 for p in t.pre):
        raise PreconditionError("unreachable_vertex", f"not every vertex is reachable from {root}")
    out: set[Arc] = set()
    for v in range(g.n):
        u = t.idom[v]
        if u is None or not g.has_arc(u, v):
            continue
        if all(w == u or dominates(t, v, w) for w in g.predecessors(v)):
            out.add((u, v))
    return out
