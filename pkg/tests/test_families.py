import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from og4kit.errors import BadParam, Disconnected
from og4kit.families import (FAMILIES, FamilySpec, GammaSymbols, cayley_pair, double_cover_pair,
                             gamma_pair, gamma_plus_pair, lex_cycle_pair, lex_n_of)
from og4kit.graphcore import is_connected
from og4kit.ogpair import check_og4, pair_isomorphic
from og4kit.permgroup import PermGroup, identity, is_regular

from conftest import gamma


def test_parameter_errors():
    with pytest.raises(BadParam):
        gamma_pair(2, 3)
    with pytest.raises(BadParam):
        gamma_pair(3, 3, "H")
    with pytest.raises(BadParam):
        gamma_pair(3, 3, "G", "con2c")
    with pytest.raises(Disconnected):
        gamma_pair(4, 6)
    with pytest.raises(BadParam):
        gamma_plus_pair(3, 4)
    with pytest.raises(BadParam):
        double_cover_pair(3, 4)
    with pytest.raises(Disconnected):
        double_cover_pair(3, 4, force=True)
    with pytest.raises(BadParam):
        lex_cycle_pair(2)
    with pytest.raises(BadParam):
        FamilySpec("nope", 3, 3)


@settings(max_examples=15, deadline=None)
@given(st.integers(3, 7), st.integers(3, 7))
def test_group_orders(r, s):
    if r % 2 == 0 and s % 2 == 0:
        pair = gamma_plus_pair(r, s)
        assert pair.n == r * s // 2 and pair.group.order == r * s
    else:
        pair = gamma_pair(r, s)
        assert pair.n == r * s and pair.group.order == 2 * r * s
    assert is_connected(pair.graph)


@pytest.mark.parametrize("r,s", [(3, 3), (3, 5), (5, 3)])
def test_double_cover_order(r, s):
    pair = double_cover_pair(r, s)
    assert pair.n == 2 * r * s and pair.group.order == 4 * r * s
    assert check_og4(pair).member


def test_h_variant_order():
    assert gamma_pair(3, 4, "H", "con2c").group.order == 24


def test_lex_subgroups():
    pair = lex_cycle_pair(6)
    assert lex_n_of(pair, 6, 6).order == 2 ** 6
    assert lex_n_of(pair, 6, 2).order == 2 ** 6 * 3
    with pytest.raises(BadParam):
        lex_n_of(pair, 6, 4)


def test_symbol_words():
    sym = GammaSymbols(4, 5)
    assert sym.word("mu^4") == identity(20)
    assert sym.word("mu", "mu^-1") == identity(20)
    assert sym.word("mu", "nu")[sym.v(0, 0)] == sym.v(1, 1)


@pytest.mark.parametrize("spec", [FamilySpec("gamma", 3, 4), FamilySpec("gamma", 3, 4, "H", "con2c"),
                                  FamilySpec("gamma-plus", 4, 6), FamilySpec("double", 3, 5),
                                  FamilySpec("lex", 4)])
def test_spec_roundtrip(spec):
    again = FamilySpec.from_dict(spec.to_dict())
    assert again == spec
    assert check_og4(again.build()).member
    assert spec.family in FAMILIES


def test_double_spec_forces_orientation():
    assert FamilySpec("double", 3, 3).orientation == "con2a"
    with pytest.raises(BadParam):
        FamilySpec("gamma", 3, 3, "G", "con2a")


def test_cayley_translation_subgroup():
    sym = GammaSymbols(3, 3)
    K = PermGroup([sym.mu, sym.nu], 9)
    mn, m_n = sym.word("mu", "nu"), sym.word("mu^-1", "nu")
    S = [mn, m_n, sym.word("mu^-1", "nu^-1"), sym.word("mu", "nu^-1")]
    pair = cayley_pair(K, S, out_set=[mn, m_n], normalizer=[sym.sigma])
    assert is_regular(K)
    assert check_og4(pair).member and pair.group.order == 18
    assert pair_isomorphic(pair, gamma(3, 3)) is not None
