import pytest
from hypothesis import given

from sbicon import build
from sbicon.dominators import dominates, dominator_tree, flowgraph_bridges
from sbicon.errors import PreconditionError

from _dom_oracle import deletion_flowgraph_bridges, fixed_point_dominators, fixed_point_idom, reachable
from conftest import digraphs


CHAIN = build(3, [(0, 1), (1, 2)])
DIAMOND = build(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_chain():
    t = dominator_tree(CHAIN, 0)
    assert t.idom == (None, 0, 1)
    assert dominates(t, 1, 2) and not dominates(t, 2, 1)


def test_diamond():
    t = dominator_tree(DIAMOND, 0)
    assert t.idom[3] == 0
    assert not dominates(t, 1, 3)
    assert all(dominates(t, 0, v) for v in range(4))


def test_fig3_idom_of_seven(fig3):
    t = dominator_tree(fig3, fig3.vertex(5))
    assert t.idom[fig3.vertex(7)] == fig3.vertex(2)


def test_unreachable_vertices():
    g = build(3, [(0, 1), (2, 1)])
    t = dominator_tree(g, 0)
    assert t.idom[2] is None and not t.reachable(2)
    with pytest.raises(PreconditionError):
        dominates(t, 0, 2)
    with pytest.raises(PreconditionError):
        flowgraph_bridges(g, 0)


def test_flowgraph_bridges_examples(fig3):
    assert flowgraph_bridges(CHAIN, 0) == {(0, 1), (1, 2)}
    assert flowgraph_bridges(DIAMOND, 0) == {(0, 1), (0, 2)}
    assert (fig3.vertex(2), fig3.vertex(7)) in flowgraph_bridges(fig3, fig3.vertex(5))


@given(digraphs(max_n=9))
def test_matches_fixed_point(g):
    if g.n == 0:
        return
    for root in range(min(g.n, 3)):
        reach, dom = fixed_point_dominators(g, root)
        t = dominator_tree(g, root)
        expected = fixed_point_idom(g, root)
        got = {v: d for v, d in enumerate(t.idom) if d is not None}
        assert got == expected
        for u in reach:
            for v in reach:
                assert dominates(t, u, v) == (u in dom[v])


@given(digraphs(max_n=9))
def test_flowgraph_bridges_match_deletion(g):
    if g.n == 0 or len(reachable(g, 0)) < g.n:
        return
    assert flowgraph_bridges(g, 0) == deletion_flowgraph_bridges(g, 0)
