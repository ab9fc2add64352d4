import pytest
from hypothesis import given
from hypothesis import strategies as st

from og4kit.families import gamma_graph
from og4kit.graphcore import (OrientedGraph, bipartition, components, cycle_graph, distances,
                              induced, is_bipartite, is_connected, same_edges,
                              standard_double_cover, to_dot, validate_quartic)


def test_constructor_rejects_bad_arcs():
    with pytest.raises(ValueError):
        OrientedGraph(3, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        OrientedGraph(3, frozenset({(0, 1), (1, 0)}))
    with pytest.raises(ValueError):
        OrientedGraph(3, frozenset({(0, 3)}))


def test_quartic_report():
    rep = validate_quartic(gamma_graph(3, 3))
    assert rep.ok
    assert rep.in_out_profile == {(2, 2): 9}
    bad = validate_quartic(cycle_graph(5))
    assert not bad.ok and bad.degrees == (2,) * 5


def test_components_gamma_even_even():
    g = gamma_graph(4, 4)
    comps = components(g)
    assert len(comps) == 2 and not is_connected(g)
    assert sorted(len(c) for c in comps) == [8, 8]
    assert is_connected(gamma_graph(3, 4))


def test_bipartition():
    assert is_bipartite(cycle_graph(6))
    assert not is_bipartite(cycle_graph(5))
    sides = bipartition(cycle_graph(4))
    assert sides is not None


def test_distances():
    assert distances(cycle_graph(6), 0) == [0, 1, 2, 3, 2, 1]


def test_induced_renumbers():
    sub, index_map = induced(cycle_graph(6), [5, 0, 1])
    assert index_map == (0, 1, 5)
    assert sub.arcs == {(0, 1), (2, 0)}
    with pytest.raises(ValueError):
        induced(cycle_graph(3), [])


def test_double_cover_of_triangle_is_hexagon():
    cover = standard_double_cover(cycle_graph(3))
    assert cover.n == 6 and is_connected(cover)
    assert all(cover.degree(v) == 2 for v in range(6))


def test_double_cover_of_bipartite_splits():
    k2 = OrientedGraph(2, frozenset({(0, 1)}))
    assert len(components(standard_double_cover(k2))) == 2
    assert len(components(standard_double_cover(cycle_graph(4)))) == 2


def test_cycle_graph_orientations():
    assert cycle_graph(4).arcs == {(0, 1), (1, 2), (2, 3), (3, 0)}
    und = cycle_graph(4, oriented=False)
    assert same_edges(und, cycle_graph(4))
    assert {len(und.out_adj[v]) for v in range(4)} == {0, 2}


def test_dot_is_deterministic():
    g = gamma_graph(3, 4)
    text = to_dot(g)
    assert text == to_dot(OrientedGraph(g.n, frozenset(sorted(g.arcs, reverse=True))))
    assert text.startswith("graph G {") and text.count("dir=forward") == len(g.arcs)
    labelled = to_dot(cycle_graph(3), ["a", "b", "c"], "C3")
    assert 'label="b"' in labelled and labelled.startswith("graph C3")


@given(st.integers(3, 12), st.booleans())
def test_reverse_keeps_edges(m, oriented):
    g = cycle_graph(m, oriented)
    assert same_edges(g, g.reversed())
    assert g.reversed().reversed() == g
