import itertools

import pytest
from hypothesis import strategies as st

from sbicon import build, load_fixture
from sbicon.graph import Digraph


@pytest.fixture(scope="session")
def fig1() -> Digraph:
    return load_fixture("fig1")


@pytest.fixture(scope="session")
def fig2() -> Digraph:
    return load_fixture("fig2")


@pytest.fixture(scope="session")
def fig3() -> Digraph:
    return load_fixture("fig3")


def arc(g, t, h):
    """Internal arc for labelled endpoints."""
    return g.vertex(t), g.vertex(h)


def labelled_arcs(g, arcs):
    return {g.arc_labels(a) for a in arcs}


def labelled_verts(g, vs):
    return {g.label(v) for v in vs}


def cycle(n):
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def bidirected(n, edges):
    return build(n, [a for u, v in edges for a in ((u, v), (v, u))])


def bidirected_path(n):
    return bidirected(n, [(i, i + 1) for i in range(n - 1)])


def bidirected_cycle(n):
    return bidirected(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bidirected(n):
    return bidirected(n, list(itertools.combinations(range(n), 2)))


def bowtie():
    """Two bidirected triangles sharing vertex 2."""
    return bidirected(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


@st.composite
def digraphs(draw, min_n=1, max_n=8, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if not pairs:
        return build(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return build(n, chosen)
