"""Immutable simple digraphs over dense integer vertices.

Arcs keep construction order; every traversal in the package visits
neighbours in that order, which is what makes results reproducible.
Adjacency is stored as CSR arrays so the numba kernels can consume it
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import ConstructionError, PreconditionError

Arc = tuple[int, int]


def _csr(keys: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(keys, kind="stable").astype(np.int64)
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(keys, minlength=n), out=ptr[1:])
    return ptr, order


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Digraph:
    """A simple directed graph ``G = (V, E)`` with ``V = {0, ..., n-1}``.

    Use :func:`build` rather than calling the constructor directly; the
    constructor trusts its input.
    """

    def __init__(
        self,
        n: int,
        tails: np.ndarray,
        heads: np.ndarray,
        labels: Sequence[Hashable] | None = None,
        dropped_duplicates: int = 0,
    ):
        self._n = int(n)
        self.tails = _frozen(np.ascontiguousarray(tails, dtype=np.int64))
        self.heads = _frozen(np.ascontiguousarray(heads, dtype=np.int64))
        self.labels = tuple(labels) if labels is not None else None
        self.dropped_duplicates = dropped_duplicates

        ptr, order = _csr(self.tails, self._n)
        self.out_ptr = _frozen(ptr)
        self.out_arc = _frozen(order)
        self.out_nbr = _frozen(self.heads[order])
        ptr, order = _csr(self.heads, self._n)
        self.in_ptr = _frozen(ptr)
        self.in_arc = _frozen(order)
        self.in_nbr = _frozen(self.tails[order])

    # -- basic accessors -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def arc_count(self) -> int:
        return len(self.tails)

    n = vertex_count
    m = arc_count

    @cached_property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(zip(self.tails.tolist(), self.heads.tolist()))

    @cached_property
    def _arc_ids(self) -> dict[Arc, int]:
        return {a: i for i, a in enumerate(self.arcs)}

    def arc_id(self, arc: Arc) -> int:
        try:
            return self._arc_ids[(int(arc[0]), int(arc[1]))]
        except KeyError:
            raise PreconditionError("arc_absent", f"arc {tuple(arc)} not in graph") from None

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._arc_ids

    def successors(self, v: int) -> list[int]:
        return self.out_nbr[self.out_ptr[v] : self.out_ptr[v + 1]].tolist()

    def predecessors(self, v: int) -> list[int]:
        return self.in_nbr[self.in_ptr[v] : self.in_ptr[v + 1]].tolist()

    def label(self, v: int) -> Hashable:
        return v if self.labels is None else self.labels[v]

    def vertex(self, label: Hashable) -> int:
        """Inverse of :meth:`label`."""
        if self.labels is None:
            if isinstance(label, (int, np.integer)) and 0 <= label < self._n:
                return int(label)
            raise KeyError(label)
        return self._label_ids[label]

    @cached_property
    def _label_ids(self) -> dict[Hashable, int]:
        return {lab: i for i, lab in enumerate(self.labels or ())}

    def arc_labels(self, arc: Arc) -> tuple[Hashable, Hashable]:
        return self.label(arc[0]), self.label(arc[1])

    # -- underlying undirected structure ---------------------------------

    @cached_property
    def _undirected(self):
        # Undirected edge ids in order of first appearance among the arcs.
        lo = np.minimum(self.tails, self.heads)
        hi = np.maximum(self.tails, self.heads)
        key = lo * max(self._n, 1) + hi
        uniq, first, inverse, mult = np.unique(
            key, return_index=True, return_inverse=True, return_counts=True
        )
        rank = np.empty(len(uniq), dtype=np.int64)
        rank[np.argsort(first, kind="stable")] = np.arange(len(uniq))
        arc_edge = rank[inverse.reshape(-1)]
        k = len(uniq)
        eu = np.empty(k, dtype=np.int64)
        ev = np.empty(k, dtype=np.int64)
        eu[arc_edge] = lo
        ev[arc_edge] = hi
        emult = np.empty(k, dtype=np.int64)
        emult[rank] = mult
        ends = np.concatenate([eu, ev])
        others = np.concatenate([ev, eu])
        eids = np.concatenate([np.arange(k), np.arange(k)]).astype(np.int64)
        ptr, order = _csr(ends, self._n)
        return (
            _frozen(eu),
            _frozen(ev),
            _frozen(emult),
            _frozen(arc_edge.astype(np.int64)),
            _frozen(ptr),
            _frozen(others[order]),
            _frozen(eids[order]),
        )

    @property
    def arc_edge(self) -> np.ndarray:
        """Undirected edge id of each arc."""
        return self._undirected[3]

    @property
    def has_antiparallel(self) -> np.ndarray:
        """``True`` where the reverse of the arc is also an arc."""
        emult = self._undirected[2]
        return emult[self._undirected[3]] == 2

    # -- dunder ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, m={self.arc_count})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (
            self._n == other._n
            and self.arcs == other.arcs
            and (self.labels or tuple(range(self._n))) == (other.labels or tuple(range(other._n)))
        )

    def __hash__(self) -> int:
        return hash((self._n, self.arcs))


@dataclass(frozen=True, eq=False)
class UndirectedView:
    """The underlying graph: one edge ``{u, v}`` per adjacent pair."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    ptr: np.ndarray
    nbr: np.ndarray
    eid: np.ndarray

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbours(self, v: int) -> list[int]:
        return self.nbr[self.ptr[v] : self.ptr[v + 1]].tolist()

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "UndirectedView":
        """Plain undirected graph; repeated pairs collapse, loops are rejected."""
        seen: dict[tuple[int, int], None] = {}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v or not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ConstructionError(f"bad undirected edge ({u}, {v})")
            seen.setdefault((min(u, v), max(u, v)), None)
        pairs = list(seen)
        k = len(pairs)
        eu = np.array([p[0] for p in pairs], dtype=np.int64)
        ev = np.array([p[1] for p in pairs], dtype=np.int64)
        ends = np.concatenate([eu, ev])
        others = np.concatenate([ev, eu])
        eids = np.concatenate([np.arange(k), np.arange(k)]).astype(np.int64)
        ptr, order = _csr(ends, vertex_count)
        return cls(vertex_count, tuple(pairs), ptr, others[order], eids[order])


def build(
    vertex_count: int,
    arcs: Iterable[Arc],
    labels: Sequence[Hashable] | None = None,
) -> Digraph:
    """Build a simple digraph, dropping repeated arcs (first one wins).

    The number of dropped duplicates is kept on ``g.dropped_duplicates``.
    Self-loops and out-of-range endpoints raise :class:`ConstructionError`.
    """
    n = int(vertex_count)
    if n < 0:
        raise ConstructionError("vertex_count must be nonnegative")
    if labels is not None and len(labels) != n:
        raise ConstructionError(f"expected {n} labels, got {len(labels)}")
    seen: dict[Arc, None] = {}
    dropped = 0
    for arc in arcs:
        t, h = int(arc[0]), int(arc[1])
        if not (0 <= t < n and 0 <= h < n):
            raise ConstructionError(f"arc ({t}, {h}) has an endpoint outside 0..{n - 1}")
        if t == h:
            raise ConstructionError(f"self-loop at vertex {t}")
        if (t, h) in seen:
            dropped += 1
            continue
        seen[(t, h)] = None
    tails = np.fromiter((a[0] for a in seen), dtype=np.int64, count=len(seen))
    heads = np.fromiter((a[1] for a in seen), dtype=np.int64, count=len(seen))
    return Digraph(n, tails, heads, labels, dropped)


def from_arrays(n: int, tails: np.ndarray, heads: np.ndarray, labels=None) -> Digraph:
    """Fast path for arcs already known to be simple and in range."""
    return Digraph(n, tails, heads, labels)


def reverse(g: Digraph) -> Digraph:
    return Digraph(g.n, g.heads.copy(), g.tails.copy(), g.labels)


def delete_arc(g: Digraph, e: Arc) -> Digraph:
    """``G \\ {e}``: same vertices, one arc fewer."""
    i = g.arc_id(e)
    keep = np.ones(g.m, dtype=bool)
    keep[i] = False
    return Digraph(g.n, g.tails[keep], g.heads[keep], g.labels)


def induced_subgraph(g: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``, renumbered densely.

    Returns the subgraph and ``kept`` with ``kept[new_id] == old_id``;
    new ids follow ascending old ids.
    """
    mask = np.zeros(g.n, dtype=bool)
    for v in vertices:
        v = int(v)
        if not 0 <= v < g.n:
            raise PreconditionError("invalid_vertex", f"vertex {v} out of range")
        mask[v] = True
    kept = np.flatnonzero(mask)
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[kept] = np.arange(len(kept))
    sel = mask[g.tails] & mask[g.heads]
    labels = None if g.labels is None else [g.labels[v] for v in kept.tolist()]
    if labels is None and len(kept) != g.n:
        labels = kept.tolist()
    sub = Digraph(len(kept), new_id[g.tails[sel]], new_id[g.heads[sel]], labels)
    return sub, tuple(kept.tolist())


def delete_vertex(g: Digraph, w: int) -> tuple[Digraph, tuple[int, ...]]:
    """``G \\ {w}`` with ids re-densified; see :func:`induced_subgraph`."""
    if not 0 <= w < g.n:
        raise PreconditionError("invalid_vertex", f"vertex {w} out of range")
    if g.n < 2:
        raise PreconditionError("too_few_vertices", "cannot delete from a graph with fewer than 2 vertices")
    return induced_subgraph(g, (v for v in range(g.n) if v != w))


def underlying(g: Digraph) -> UndirectedView:
    eu, ev, _, _, ptr, nbr, eid = g._undirected
    edges = tuple(zip(eu.tolist(), ev.tolist()))
    return UndirectedView(g.n, edges, ptr, nbr, eid)
