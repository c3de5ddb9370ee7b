import pytest

from sbicon import build
from sbicon.errors import PreconditionError
from sbicon.oracle import (
    naive_b_articulation_points,
    naive_b_bridges,
    naive_critical_sets,
    naive_sbcc,
)

from conftest import (
    arc,
    bidirected_cycle,
    bidirected_path,
    bowtie,
    complete_bidirected,
    cycle,
    labelled_arcs,
    labelled_verts,
)


def test_naive_b_bridges(fig1):
    assert labelled_arcs(fig1, naive_b_bridges(fig1)) == {(5, 6)}
    assert naive_b_bridges(cycle(3)) == set(cycle(3).arcs)
    assert naive_b_bridges(complete_bidirected(4)) == frozenset()


def test_naive_b_articulation_points(fig2):
    assert labelled_verts(fig2, naive_b_articulation_points(fig2)) == {3, 6}
    assert naive_b_articulation_points(bidirected_cycle(4)) == {0, 1, 2, 3}
    assert naive_b_articulation_points(complete_bidirected(4)) == frozenset()


def test_naive_critical_sets(fig1, fig3):
    assert naive_critical_sets(fig1).strong_bridges == frozenset()
    assert arc(fig3, 2, 7) in naive_critical_sets(fig3).strong_bridges
    cs = naive_critical_sets(cycle(3))
    assert cs.strong_bridges == set(cycle(3).arcs)
    assert cs.strong_articulation_points == {0, 1, 2}


def test_naive_sbcc(fig2):
    assert naive_sbcc(bowtie()).as_set() == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}
    assert naive_sbcc(bidirected_path(3)).as_set() == {frozenset({0, 1}), frozenset({1, 2})}
    assert naive_sbcc(fig2).components == (frozenset(range(6)),)


def test_guards():
    with pytest.raises(PreconditionError) as exc:
        naive_sbcc(cycle(13))
    assert exc.value.reason == "size_guard"
    with pytest.raises(PreconditionError):
        naive_b_bridges(build(3, [(0, 1), (1, 2)]))
    with pytest.raises(PreconditionError):
        naive_b_articulation_points(cycle(3))
    with pytest.raises(PreconditionError):
        naive_critical_sets(build(2, [(0, 1)]))


def test_oracle_does_not_use_fast_paths():
    import sbicon.oracle as o

    imports = [ln for ln in open(o.__file__).read().splitlines() if "import" in ln]
    joined = "\n".join(imports)
    for name in ("block_decomposition", "dominators", "resilience", "_kernels", "critical_sets"):
        assert name not in joined
