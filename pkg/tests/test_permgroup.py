import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from og4kit.errors import BoundExceeded, CapExceeded, NotInvariant
from og4kit.oracle import matches_oracle
from og4kit.permgroup import (Partition, PermGroup, check_perm, close, compose, conjugacy_classes,
                              conjugate, cycles, identity, intersection, inverse, is_normal,
                              is_regular, is_semiregular, is_transitive, join, kernel_on_partition,
                              normal_closure, normal_subgroups, orbits, perm_order, power,
                              stabilizer, subgroup)

from conftest import gamma, lex


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


@given(perms(6), perms(6), perms(6))
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms(7))
def test_inverse_and_order(p):
    assert compose(p, inverse(p)) == identity(7)
    assert power(p, perm_order(p)) == identity(7)
    assert power(p, -1) == inverse(p)
    assert sorted(x for c in cycles(p) for x in c) == list(range(7))


def test_compose_applies_left_first():
    p, q = (1, 0, 2), (0, 2, 1)
    # 0 -p-> 1 -q-> 2
    assert compose(p, q)[0] == 2
    assert conjugate(p, q) == compose(compose(inverse(q), p), q)


def test_check_perm_rejects():
    with pytest.raises(ValueError):
        check_perm([0, 0, 1])
    with pytest.raises(ValueError):
        check_perm([0, 1], 3)


def test_close_empty_is_identity():
    assert close([], 4) == [identity(4)]
    assert PermGroup([], 4).order == 1


def test_close_cap():
    with pytest.raises(CapExceeded):
        close([(1, 2, 3, 4, 5, 0), (1, 0, 2, 3, 4, 5)], 6, cap=100)


def test_listing_is_deterministic():
    a = PermGroup([(1, 2, 0, 3), (1, 0, 2, 3)], 4)
    b = PermGroup([(1, 0, 2, 3), (1, 2, 0, 3), (1, 0, 2, 3)], 4)
    assert a.elements == b.elements
    assert a.elements[0] == identity(4)


def test_family_orders():
    assert gamma(3, 3).group.order == 18
    assert lex(3).group.order == 24
    assert lex(5).group.order == 160


def test_orbits_and_stabilizer(g33, sym33):
    G = g33.group
    assert len(orbits(G)) == 1 and is_transitive(G)
    assert orbits(PermGroup([sym33.nu], 9)).cells == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    # vertex (0, 0) is fixed by sigma
    assert stabilizer(G, 0) == subgroup(G, [sym33.sigma])


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(3, 3), (3, 4), (4, 5), (5, 3)]), st.integers(0, 100))
def test_orbit_stabilizer(rs, x):
    G = gamma(*rs).group
    x %= G.degree
    assert len(G.orbit(x)) * stabilizer(G, x).order == G.order


def test_normality(g33, sym33):
    G = g33.group
    assert not is_normal(subgroup(G, [sym33.word("mu", "nu")]), G)
    assert is_normal(subgroup(G, [sym33.nu]), G)
    assert is_normal(subgroup(G, [sym33.mu]), G)


def test_normal_closure(g33, sym33):
    G = g33.group
    assert normal_closure(G, sym33.nu).order == 3
    assert normal_closure(G, sym33.word("mu", "nu")).order == 9
    # sigma's conjugates are sigma * mu^k, giving the dihedral <mu, sigma>
    assert normal_closure(G, sym33.sigma) == subgroup(G, [sym33.mu, sym33.sigma])


def test_regularity(g33, sym33):
    K = subgroup(g33.group, [sym33.mu, sym33.nu])
    assert is_semiregular(K) and is_regular(K)
    assert not is_semiregular(g33.group)
    assert is_semiregular(subgroup(g33.group, [sym33.nu])) and not is_regular(
        subgroup(g33.group, [sym33.nu]))


def test_join_and_intersection(g33, sym33):
    G = g33.group
    A, B = subgroup(G, [sym33.mu]), subgroup(G, [sym33.nu])
    assert join(A, B).order == 9
    assert intersection(A, B).is_trivial


def test_kernel_on_partition(g33, sym33):
    G = g33.group
    P = orbits(subgroup(G, [sym33.nu]))
    K = kernel_on_partition(G, P)
    # sigma moves the rows i -> -i, so only <nu> fixes every row
    assert K == subgroup(G, [sym33.nu])
    assert kernel_on_partition(G, orbits(subgroup(G, [sym33.mu]))).order == 6
    with pytest.raises(NotInvariant):
        kernel_on_partition(G, Partition.from_cells([[0, 1], [2, 3, 4, 5, 6, 7, 8]]))


def test_conjugacy_classes_partition_group(g33):
    classes = conjugacy_classes(g33.group)
    flat = [g for c in classes for g in c]
    assert len(flat) == len(set(flat)) == 18


def test_normal_subgroups_gamma33(g33):
    found = normal_subgroups(g33.group)
    assert matches_oracle(g33.group, found)
    assert [H.order for H in found] == sorted(H.order for H in found)


@pytest.mark.parametrize("pair", [gamma(3, 4), gamma(3, 4, "H", "con2c"), lex(4)],
                         ids=["G(3,4)", "H(3,4)", "lex4"])
def test_normal_subgroups_match_oracle(pair):
    assert matches_oracle(pair.group, normal_subgroups(pair.group))


def test_normal_subgroups_bound(g33):
    with pytest.raises(BoundExceeded):
        normal_subgroups(g33.group, bound=10)


def test_partition_from_labels():
    P = Partition.from_labels("abab")
    assert P.cells == ((0, 2), (1, 3))
    assert len(P) == 2 and P.degree == 4
    assert P.is_invariant([(1, 0, 3, 2)])
    assert not P.is_invariant([(1, 2, 0, 3)])
