import pytest

from sbicon import build, induced_subgraph
from sbicon.connectivity import is_strongly_biconnected
from sbicon.errors import PreconditionError
from sbicon.generate import generate_strongly_connected
from sbicon.oracle import naive_sbcc
from sbicon.sbcc import count, strongly_biconnected_components

from conftest import bidirected_path, bowtie


def test_fig1_single_component(fig1):
    cover = strongly_biconnected_components(fig1)
    assert cover.components == (frozenset(range(9)),)
    assert count(cover) == 1


def test_bowtie():
    cover = strongly_biconnected_components(bowtie())
    assert cover.as_set() == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}
    assert count(cover) == 2
    assert len(cover.membership[2]) == 2
    assert all(len(cover.membership[v]) == 1 for v in (0, 1, 3, 4))


@pytest.mark.parametrize("k", [1, 2, 3, 6])
def test_bidirected_path(k):
    cover = strongly_biconnected_components(bidirected_path(k + 1))
    assert count(cover) == k
    assert cover.as_set() == {frozenset({i, i + 1}) for i in range(k)}


def test_requires_strong_connectivity():
    with pytest.raises(PreconditionError):
        strongly_biconnected_components(build(3, [(0, 1), (1, 2)]))


@pytest.mark.parametrize("seed", range(60))
def test_cover_invariants(seed):
    g = generate_strongly_connected(2 + seed % 14, 18, seed)
    cover = strongly_biconnected_components(g)
    comps = cover.components
    for c in comps:
        sub, _ = induced_subgraph(g, c)
        assert is_strongly_biconnected(sub)
        assert len(c) >= 2
    for i, a in enumerate(comps):
        for b in comps[i + 1 :]:
            assert len(a & b) <= 1
    assert all(cover.membership[v] for v in range(g.n))
    assert (count(cover) == 1) == is_strongly_biconnected(g)
    # an underlying bridge of a strongly connected digraph is a two-way arc
    for c in comps:
        if len(c) == 2:
            u, v = c
            assert g.has_arc(u, v) and g.has_arc(v, u)


@pytest.mark.parametrize("seed", range(40))
def test_matches_subset_enumeration(seed):
    g = generate_strongly_connected(2 + seed % 9, 14, seed)
    assert strongly_biconnected_components(g).as_set() == naive_sbcc(g).as_set()
