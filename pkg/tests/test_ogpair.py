import pytest

from og4kit.errors import ArcTransitive, DegreeMismatch, NotHalfTransitive
from og4kit.families import gamma_graph
from og4kit.ogpair import (OrientedPair, canonical_delta, check_og4, digraph_isomorphisms,
                           in_out_neighbours, pair_isomorphic)
from og4kit.permgroup import PermGroup, compose, inverse

from conftest import double, gamma, gamma_plus, lex


@pytest.mark.parametrize("pair", [gamma(3, 3), gamma(3, 4), gamma(5, 3), gamma(3, 4, "H", "con2c"),
                                  gamma_plus(4, 4), double(3, 3), lex(3), lex(5)],
                         ids=["G33", "G34", "G53", "H34", "plus44", "double33", "lex3", "lex5"])
def test_family_members(pair):
    rep = check_og4(pair)
    assert rep.member, rep
    assert len(rep.arc_orbit_sizes) == 2


def test_stabilizer_order(g33):
    assert check_og4(g33).stabilizer_order == 2
    assert check_og4(g33, materialize_limit=5).stabilizer_order is None


def test_translations_alone_are_not_edge_transitive(g33, sym33):
    rep = check_og4(OrientedPair(g33.graph, PermGroup([sym33.mu, sym33.nu], 9)))
    assert rep.vertex_transitive and rep.orientation_preserved
    assert not rep.edge_transitive and not rep.member


def test_tau_makes_it_arc_transitive(g33, sym33):
    bigger = PermGroup(list(g33.group.gens) + [sym33.tau], 9)
    rep = check_og4(OrientedPair(g33.graph, bigger))
    assert rep.arc_transitive and not rep.orientation_preserved and not rep.member
    with pytest.raises(ArcTransitive):
        canonical_delta(g33.graph, bigger)


def test_canonical_delta(g33, sym33):
    assert canonical_delta(g33.graph, g33.group) == g33.delta
    assert canonical_delta(g33.graph.reversed(), g33.group) == g33.delta
    with pytest.raises(NotHalfTransitive):
        canonical_delta(g33.graph, PermGroup([sym33.mu, sym33.nu], 9))


def test_degree_mismatch(g33):
    with pytest.raises(DegreeMismatch):
        OrientedPair(g33.graph, PermGroup.trivial(4))


def test_neighbours(g33, sym33):
    out, into = in_out_neighbours(g33, 0)
    assert len(out) == len(into) == 2
    assert set(out) == {sym33.v(1, 1), sym33.v(-1, 1)}
    assert set(into) == {sym33.v(1, -1), sym33.v(-1, -1)}


def test_isomorphic_to_relabelled_copy(g33):
    f = (3, 8, 1, 0, 6, 5, 7, 2, 4)
    finv = inverse(f)
    arcs = frozenset((f[u], f[v]) for u, v in g33.delta)
    gens = [compose(compose(finv, g), f) for g in g33.group.gens]
    copy = OrientedPair(type(g33.graph)(9, arcs), PermGroup(gens, 9))
    assert pair_isomorphic(g33, copy) is not None
    assert pair_isomorphic(g33, copy, strict=True) is not None


def test_reversed_delta_is_isomorphic(g33):
    rev = g33.with_reversed_delta()
    assert pair_isomorphic(g33, rev) is not None
    assert check_og4(rev).member


def test_different_families_not_isomorphic():
    assert pair_isomorphic(gamma(3, 3), double(3, 3)) is None
    # same graph, different groups
    assert pair_isomorphic(gamma(3, 4), gamma(3, 4, "H", "con1")) is None


def test_digraph_isomorphisms_count():
    g = gamma_graph(3, 3)
    autos = list(digraph_isomorphisms(g, g))
    assert len(autos) % 18 == 0
