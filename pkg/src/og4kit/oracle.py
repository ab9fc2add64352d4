"""Brute-force subgroup lattice for small groups, used to cross-check
:func:`og4kit.permgroup.normal_subgroups`.

Elements are indexed and multiplied through a Cayley table; subgroups are
bitmasks.  Every subgroup is reached from the trivial group by adjoining
cyclic subgroups one at a time, so the lattice is complete.  Normality is
then tested against every element of the group, not just generators.
"""

from __future__ import annotations

from collections import deque

from .errors import BoundExceeded
from .permgroup import PermGroup, compose, inverse

ORACLE_LIMIT = 200


class CayleyTable:
    def __init__(self, group: PermGroup):
        self.elements = list(group.elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        n = len(self.elements)
        self.mul = [[self.index[compose(a, b)] for b in self.elements] for a in self.elements]
        self.inv = [self.index[inverse(a)] for a in self.elements]
        self.e = self.index[group.identity]
        assert len(self.mul) == n

    def generate(self, gens) -> int:
        """Bitmask of the subgroup generated by the element indices ``gens``."""
        mask = 1 << self.e
        queue = deque([self.e])
        while queue:
            x = queue.popleft()
            row = self.mul[x]
            for g in gens:
                y = row[g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    queue.append(y)
        return mask

    def members(self, mask: int) -> list[int]:
        return [i for i in range(len(self.elements)) if mask >> i & 1]


def all_subgroups(group: PermGroup, limit: int = ORACLE_LIMIT) -> tuple[CayleyTable, dict]:
    """Every subgroup, as ``{mask: generating indices}``."""
    if group.order > limit:
        raise BoundExceeded(f"oracle limited to order {limit}, got {group.order}")
    table = CayleyTable(group)
    cyclic = {}
    for i in range(len(table.elements)):
        cyclic.setdefault(table.generate([i]), i)
    gens_of = {1 << table.e: []}
    queue = deque(gens_of)
    while queue:
        mask = queue.popleft()
        gens = gens_of[mask]
        for cmask, c in cyclic.items():
            if cmask & ~mask == 0:
                continue
            new = table.generate(gens + [c])
            if new not in gens_of:
                gens_of[new] = gens + [c]
                queue.append(new)
    return table, gens_of


def oracle_normal_subgroups(group: PermGroup, limit: int = ORACLE_LIMIT) -> list[frozenset]:
    """Element sets of all normal subgroups, by exhaustive search."""
    table, gens_of = all_subgroups(group, limit)
    out = []
    for mask, gens in gens_of.items():
        normal = all(
            mask >> table.mul[table.mul[table.inv[g]][x]][g] & 1
            for g in range(len(table.elements)) for x in gens
        )
        if normal:
            out.append(frozenset(table.elements[i] for i in table.members(mask)))
    return out


def matches_oracle(group: PermGroup, found, limit: int = ORACLE_LIMIT) -> bool:
    """Whether ``found`` (a list of subgroups) equals the oracle's normal subgroups."""
    mine = {H.element_set for H in found}
    return len(mine) == len(found) and mine == set(oracle_normal_subgroups(group, limit))
