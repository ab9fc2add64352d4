import pytest

from og4kit.errors import BadParam
from og4kit.families import GammaSymbols
from og4kit.metacirc import (RhoStatus, class_one_converse, class_one_shape, conjugation_exponent,
                             check_weak_metacirculant, construction_trichotomy, corollary_instance,
                             replacement_search, rho_cycle_shape, rho_partition,
                             rho_quotient_status, verify_corollary_wm, weak_pairs)
from og4kit.permgroup import identity

from conftest import gamma


def test_rho_partition(sym33):
    assert rho_partition(sym33.nu).cells == ((0, 1, 2), (3, 4, 5), (6, 7, 8))


def test_conjugation_exponent(sym33):
    assert conjugation_exponent(sym33.mu, sym33.nu) == 1
    assert conjugation_exponent(sym33.mu, sym33.sigma) == 2
    assert conjugation_exponent(sym33.mu, sym33.word("mu", "nu")) == 1
    assert conjugation_exponent(sym33.word("mu", "nu"), sym33.sigma) is None


def test_weak_metacirculant_gamma33(g33, sym33):
    rep = check_weak_metacirculant(g33, sym33.mu, sym33.nu)
    assert rep.is_weak and rep.is_metacirculant and (rep.m, rep.n) == (3, 3)
    assert rep.r_exp == 1 and rep.H_regular
    assert rep.rho_quotient is RhoStatus.ORIENTED_CYCLE


def test_failures_are_listed(g33, sym33):
    rep = check_weak_metacirculant(g33, sym33.mu, identity(9))
    assert not rep.is_weak and any("transitive" in f for f in rep.failures)
    rep = check_weak_metacirculant(g33, sym33.mu, sym33.tau)
    assert any("automorphism" in f for f in rep.failures)


@pytest.mark.parametrize("r", [3, 5])
def test_trichotomy(r):
    out = construction_trichotomy(r)
    assert out["a"].rho_quotient is RhoStatus.NOT_NORMAL
    assert out["b"].rho_quotient is RhoStatus.UNORIENTED_CYCLE
    assert out["c"].rho_quotient is RhoStatus.ORIENTED_CYCLE
    assert all(rep.is_metacirculant for rep in out.values())
    with pytest.raises(BadParam):
        construction_trichotomy(4)


def test_diagonal_cycles_hold_edges():
    sym = GammaSymbols(5, 5)
    shape = rho_cycle_shape(gamma(5, 5), sym.word("mu", "nu"))
    assert shape.is_cycle and shape.oriented and shape.length == 5
    assert shape.internal_edges == 25


def test_rho_status_requires_full_orbits(g33, sym33):
    st = rho_quotient_status(g33, sym33.word("mu", "nu"))
    assert st.status is RhoStatus.NOT_NORMAL
    st = rho_quotient_status(g33, sym33.mu)
    assert st.result is not None and st.length == 3


@pytest.mark.parametrize("r,s,line,name", [
    (3, 3, 1, "X_o(3,3;1)"), (3, 4, 1, "X_o(4,3;1)"), (4, 4, 2, "X_e(4,2;1,0)"),
])
def test_corollary(r, s, line, name):
    rep = verify_corollary_wm(r, s, line)
    assert rep.name == name and rep.status is RhoStatus.ORIENTED_CYCLE


def test_corollary_parity_errors():
    with pytest.raises(BadParam):
        corollary_instance(4, 4, 1)
    with pytest.raises(BadParam):
        corollary_instance(3, 4, 2)
    with pytest.raises(BadParam):
        corollary_instance(3, 3, 5)


def test_six_four_line_two_is_weak_only():
    rep = verify_corollary_wm(6, 4, 2)
    assert rep.meta.is_weak and not rep.meta.is_metacirculant


def test_replacement_search_finds_generating_pair(g33, sym33):
    hit = replacement_search(g33, sym33.mu, sym33.nu)
    assert hit is not None
    rho, lam = hit
    assert check_weak_metacirculant(g33, rho, lam).rho_quotient is RhoStatus.ORIENTED_CYCLE


def test_class_one(g33, sym33):
    assert class_one_shape(g33, sym33.mu)
    assert not class_one_shape(g33, sym33.word("mu", "nu"))
    # <mu, nu> is regular, so the converse does not apply
    assert not class_one_converse(g33, sym33.mu, sym33.nu).applies
    found = [class_one_converse(g33, rho, lam) for rho, lam, _ in weak_pairs(g33)]
    assert found and all(chk.holds for chk in found)
