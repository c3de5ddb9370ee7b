"""Strongly biconnected components of a strongly connected digraph.

In a strongly connected digraph each block of the underlying graph
induces a strongly connected subgraph: a directed path between two block
vertices that leaves the block must come back through the same cut
vertex, so it can be shortcut there. Blocks are therefore exactly the
maximal vertex sets inducing strongly biconnected subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import block_decomposition, is_strongly_connected
from .errors import PreconditionError
from .graph import Digraph, underlying


@dataclass(frozen=True)
class SbccCover:
    components: tuple[frozenset[int], ...]
    membership: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.components)

    def as_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.components)


def cover_from_components(n: int, comps) -> SbccCover:
    comps = tuple(frozenset(c) for c in comps)
    membership: list[list[int]] = [[] for _ in range(n)]
    for i, c in enumerate(comps):
        for v in c:
            membership[v].append(i)
    return SbccCover(comps, tuple(tuple(sorted(ms)) for ms in membership))


def strongly_biconnected_components(g: Digraph) -> SbccCover:
    if not is_strongly_connected(g):
        raise PreconditionError("not_strongly_connected")
    return cover_from_components(g.n, block_decomposition(underlying(g)).blocks)


def count(cover: SbccCover) -> int:
    return len(cover.components)
