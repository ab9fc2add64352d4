import pytest

from og4kit.errors import BoundExceeded
from og4kit.oracle import CayleyTable, all_subgroups, matches_oracle, oracle_normal_subgroups
from og4kit.permgroup import PermGroup, normal_subgroups

S4 = PermGroup([(1, 2, 3, 0), (1, 0, 2, 3)], 4)


def test_symmetric_group_lattice():
    _, subs = all_subgroups(S4)
    assert len(subs) == 30
    assert sorted(len(N) for N in oracle_normal_subgroups(S4)) == [1, 4, 12, 24]
    assert matches_oracle(S4, normal_subgroups(S4))


def test_cayley_table():
    table = CayleyTable(S4)
    e = table.e
    assert all(table.mul[e][i] == i for i in range(24))
    assert all(table.mul[i][table.inv[i]] == e for i in range(24))
    assert len(table.members(table.generate([1]))) in (2, 3, 4)


def test_mismatch_detected():
    found = normal_subgroups(S4)
    assert not matches_oracle(S4, found[:-1])
    assert not matches_oracle(S4, found + [found[0]])


def test_limit():
    with pytest.raises(BoundExceeded):
        all_subgroups(S4, limit=10)
