import pytest
from hypothesis import given

from sbicon import build
from sbicon.connectivity import is_strongly_biconnected, is_strongly_connected
from sbicon.critical import critical_sets, strong_articulation_points, strong_bridges
from sbicon.errors import PreconditionError
from sbicon.generate import generate, generate_strongly_connected
from sbicon.oracle import naive_critical_sets
from sbicon.resilience import b_articulation_points, b_bridges

from conftest import arc, bidirected, bidirected_path, cycle, digraphs, labelled_arcs


def test_strong_bridges_examples(fig1, fig3):
    assert strong_bridges(fig1) == frozenset()
    assert arc(fig3, 2, 7) in strong_bridges(fig3)
    assert strong_bridges(cycle(3)) == set(cycle(3).arcs)


def test_fig3_strong_bridges_exact(fig3):
    # frozen from the deletion oracle
    assert labelled_arcs(fig3, strong_bridges(fig3)) == {(2, 7), (7, 1), (4, 10), (10, 6)}


def test_strong_articulation_points_examples(fig2, fig3):
    assert strong_articulation_points(fig2) == frozenset()
    assert strong_articulation_points(bidirected_path(3)) == {1}
    assert fig3.vertex(2) in strong_articulation_points(fig3)


def test_preconditions():
    with pytest.raises(PreconditionError) as exc:
        strong_bridges(build(3, [(0, 1), (1, 2)]))
    assert exc.value.reason == "not_strongly_connected"
    with pytest.raises(PreconditionError) as exc:
        strong_articulation_points(bidirected(2, [(0, 1)]))
    assert exc.value.reason == "too_few_vertices"


@given(digraphs(min_n=3, max_n=8))
def test_match_deletion_oracle(g):
    if not is_strongly_connected(g):
        return
    assert critical_sets(g) == naive_critical_sets(g)


@pytest.mark.parametrize("seed", range(40))
def test_match_deletion_oracle_multiblock(seed):
    g = generate_strongly_connected(3 + seed % 12, 20, seed)
    if g.n < 3:
        return
    assert critical_sets(g) == naive_critical_sets(g)


@pytest.mark.parametrize("seed", range(30))
def test_included_in_b_sets(seed):
    n = 4 + seed % 10
    g = generate(n, 2 * n, seed)
    assert is_strongly_biconnected(g)
    assert strong_bridges(g) <= b_bridges(g)
    assert strong_articulation_points(g) <= b_articulation_points(g)


def test_sap_count(fig3):
    cs = critical_sets(fig3)
    assert cs.sap_count == len(cs.strong_articulation_points) == 5
