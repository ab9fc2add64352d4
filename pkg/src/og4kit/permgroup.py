"""Finite permutation groups by full element closure.

Permutations are plain tuples of images on ``{0..n-1}``.  Products act on
the right: ``compose(g, h)`` sends ``x`` to ``h[g[x]]``, i.e. apply ``g``
first.  Every group here is small enough to list its elements, so nothing
fancier than breadth-first closure is used.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BoundExceeded, CapExceeded, NotInvariant

Perm = tuple  # tuple[int, ...]

DEFAULT_CAP = 2_000_000
DEFAULT_BOUND = 10_000


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p!r}")
    if n is not None and len(p) != n:
        raise ValueError(f"expected degree {n}, got {len(p)}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """The product ``pq``: apply ``p`` then ``q``."""
    return tuple(map(q.__getitem__, p))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(p: Perm, g: Perm) -> Perm:
    """``p^g = g^-1 p g``."""
    return compose(compose(inverse(g), p), g)


def perm_order(p: Perm) -> int:
    from math import lcm

    seen = [False] * len(p)
    result = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        result = lcm(result, length)
    return result


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """All cycles of ``p`` (fixed points included), each starting at its minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def close(generators: Iterable[Perm], degree: int, cap: int = DEFAULT_CAP) -> list[Perm]:
    """Breadth-first closure of ``generators``.

    Elements come back in discovery order starting from the identity and
    multiplying by the sorted generators on the right, so the listing is
    reproducible.
    """
    gens = sorted(set(tuple(g) for g in generators))
    for g in gens:
        if len(g) != degree:
            raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
    ident = identity(degree)
    elements = [ident]
    seen = {ident}
    queue = deque(elements)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise CapExceeded(f"closure exceeded {cap} elements")
                queue.append(y)
    return elements


def _extend(elements: list, seen: set, gens: Sequence[Perm], new: Perm, cap: int) -> None:
    """Grow a closed element list in place to the closure with ``new`` added.

    ``elements``/``seen`` must already be closed under ``gens``; ``new`` is
    appended to ``gens`` by the caller.
    """
    queue = deque()
    for x in list(elements):
        y = compose(x, new)
        if y not in seen:
            seen.add(y)
            elements.append(y)
            queue.append(y)
    all_gens = list(gens) + [new]
    while queue:
        x = queue.popleft()
        for g in all_gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise CapExceeded(f"closure exceeded {cap} elements")
                queue.append(y)


@dataclass(frozen=True)
class Partition:
    """Disjoint cells covering ``{0..n-1}``, ordered by their least point."""

    cells: tuple
    cell_of: tuple

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]], n: int | None = None) -> "Partition":
        cells = sorted((tuple(sorted(c)) for c in cells), key=lambda c: c[0])
        if n is None:
            n = sum(len(c) for c in cells)
        cell_of = [-1] * n
        for idx, cell in enumerate(cells):
            for x in cell:
                if cell_of[x] != -1:
                    raise ValueError(f"point {x} lies in two cells")
                cell_of[x] = idx
        if -1 in cell_of:
            raise ValueError("cells do not cover every point")
        return cls(tuple(cells), tuple(cell_of))

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        groups: dict = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        return cls.from_cells(groups.values(), len(labels))

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def degree(self) -> int:
        return len(self.cell_of)

    def image(self, g: Perm) -> tuple:
        """Induced action of ``g`` on cell indices; raises if cells are split."""
        out = []
        for cell in self.cells:
            target = self.cell_of[g[cell[0]]]
            for x in cell[1:]:
                if self.cell_of[g[x]] != target:
                    raise NotInvariant(f"cell {cell} is split by the permutation")
            out.append(target)
        return tuple(out)

    def is_invariant(self, gens: Iterable[Perm]) -> bool:
        try:
            for g in gens:
                img = self.image(g)
                if len(set(img)) != len(img):
                    return False
        except NotInvariant:
            return False
        return True


class PermGroup:
    """A permutation group given by generators, with lazily listed elements."""

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None, *,
                 elements: Sequence[Perm] | None = None, cap: int = DEFAULT_CAP):
        gens = tuple(tuple(g) for g in generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
        self.degree = degree
        self.gens = gens
        self.cap = cap
        self._elements = list(elements) if elements is not None else None

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls((), degree, elements=[identity(degree)])

    @classmethod
    def from_elements(cls, elements: Iterable[Perm], degree: int) -> "PermGroup":
        """Wrap a known closed element set, picking a small generating set greedily."""
        elems = sorted(elements)
        ident = identity(degree)
        listing = [ident]
        seen = {ident}
        gens: list = []
        for e in elems:
            if e not in seen:
                _extend(listing, seen, gens, e, DEFAULT_CAP)
                gens.append(e)
        if len(listing) != len(elems):
            raise ValueError("element set is not closed under composition")
        return cls(gens, degree, elements=listing)

    @property
    def elements(self) -> list:
        if self._elements is None:
            self._elements = close(self.gens, self.degree, self.cap)
        return self._elements

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def key(self) -> tuple:
        """Canonical identity: the sorted element list."""
        return tuple(sorted(self.elements))

    def __contains__(self, g) -> bool:
        return tuple(g) in self.element_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash(self.element_set)

    def __le__(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.gens)

    def __repr__(self) -> str:
        size = f"order={len(self._elements)}" if self._elements is not None else "order=?"
        return f"PermGroup(degree={self.degree}, gens={len(self.gens)}, {size})"

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    def is_trivial(self) -> bool:
        return all(is_identity(g) for g in self.gens)

    def orbit(self, point: int) -> list:
        seen = {point}
        out = [point]
        queue = deque(out)
        while queue:
            x = queue.popleft()
            for g in self.gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    queue.append(y)
        return out


def orbits(group: PermGroup) -> Partition:
    """Orbits on all points, from the generators alone."""
    n = group.degree
    label = [-1] * n
    for start in range(n):
        if label[start] != -1:
            continue
        label[start] = start
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in group.gens:
                y = g[x]
                if label[y] == -1:
                    label[y] = start
                    queue.append(y)
    return Partition.from_labels(label)


def is_transitive(group: PermGroup) -> bool:
    return len(group.orbit(0)) == group.degree if group.degree else True


def stabilizer(group: PermGroup, point: int) -> PermGroup:
    return PermGroup.from_elements((g for g in group.elements if g[point] == point), group.degree)


def is_semiregular(group: PermGroup) -> bool:
    for g in group.elements:
        if not is_identity(g) and any(x == i for i, x in enumerate(g)):
            return False
    return True


def is_regular(group: PermGroup) -> bool:
    return is_transitive(group) and is_semiregular(group)


def is_normal(sub: PermGroup, group: PermGroup) -> bool:
    """Whether ``sub`` is normalised by every generator of ``group``."""
    for h in sub.gens:
        for g in group.gens:
            if conjugate(h, g) not in sub:
                return False
    return True


def subgroup(group: PermGroup, gens: Iterable[Perm]) -> PermGroup:
    return PermGroup(list(gens), group.degree, cap=group.cap)


def intersection(a: PermGroup, b: PermGroup) -> PermGroup:
    if a.order > b.order:
        a, b = b, a
    other = b.element_set
    return PermGroup.from_elements((g for g in a.elements if g in other), a.degree)


def join(a: PermGroup, b: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """The subgroup generated by ``a`` and ``b``."""
    listing = list(a.elements)
    seen = set(a.element_set)
    gens = list(a.gens)
    for g in b.gens:
        if g not in seen:
            _extend(listing, seen, gens, g, cap)
            gens.append(g)
    return PermGroup(gens, a.degree, elements=listing)


def normal_closure(group: PermGroup, seed: Perm) -> PermGroup:
    """Smallest normal subgroup of ``group`` containing ``seed``."""
    n = group.degree
    seed = tuple(seed)
    ident = identity(n)
    listing = [ident]
    seen = {ident}
    gens: list = []
    pending = deque([seed])
    while pending:
        h = pending.popleft()
        if h in seen:
            continue
        _extend(listing, seen, gens, h, group.cap)
        gens.append(h)
        # every generator's conjugates are queued, so when the queue drains
        # the subgroup is closed under conjugation by group.gens
        for g in group.gens:
            c = conjugate(h, g)
            if c not in seen:
                pending.append(c)
    return PermGroup(gens, n, elements=listing)


def conjugacy_classes(group: PermGroup) -> list[list]:
    """Conjugacy classes in order of first appearance in ``group.elements``."""
    elems = group.elements
    seen: set = set()
    classes = []
    inv_gens = [(inverse(g), g) for g in group.gens]
    for e in elems:
        if e in seen:
            continue
        cls = [e]
        seen.add(e)
        queue = deque(cls)
        while queue:
            x = queue.popleft()
            for gi, g in inv_gens:
                y = compose(compose(gi, x), g)
                if y not in seen:
                    seen.add(y)
                    cls.append(y)
                    queue.append(y)
        classes.append(cls)
    return classes


def normal_subgroups(group: PermGroup, bound: int = DEFAULT_BOUND) -> list[PermGroup]:
    """Every normal subgroup of ``group``.

    Normal closures of class representatives are the atoms; the rest is the
    closure of that set under joins (any normal subgroup is the join of the
    normal closures of its elements).  Sorted by order, then element list.
    """
    if group.order > bound:
        raise BoundExceeded(f"group order {group.order} exceeds bound {bound}")
    n = group.degree
    found: dict = {}
    trivial = PermGroup.trivial(n)
    found[trivial.element_set] = trivial
    atoms = []
    for cls in conjugacy_classes(group):
        rep = cls[0]
        if is_identity(rep):
            continue
        closure = normal_closure(group, rep)
        if closure.element_set not in found:
            found[closure.element_set] = closure
            atoms.append(closure)
    frontier = list(atoms)
    while frontier:
        fresh = []
        for a in frontier:
            aset = a.element_set
            for b in atoms:
                if all(g in aset for g in b.gens):
                    continue
                j = join(a, b, group.cap)
                if j.element_set not in found:
                    found[j.element_set] = j
                    fresh.append(j)
        frontier = fresh
    return sorted(found.values(), key=lambda h: (h.order, h.key))


def kernel_on_partition(group: PermGroup, partition: Partition) -> PermGroup:
    """Elements fixing every cell of ``partition`` setwise."""
    if partition.degree != group.degree:
        raise ValueError("partition and group have different degrees")
    for g in group.gens:
        img = partition.image(g)
        if len(set(img)) != len(img):
            raise NotInvariant("generator merges cells")
    cell_of = partition.cell_of
    firsts = [c[0] for c in partition.cells]

    def fixes_cells(g):
        # cell-to-cell images are well defined, so one point per cell suffices
        return all(cell_of[g[x]] == i for i, x in enumerate(firsts))

    return PermGroup.from_elements((g for g in group.elements if fixes_cells(g)), group.degree)


def induced_group(group: PermGroup, partition: Partition) -> PermGroup:
    """The permutation group induced on the cells of an invariant partition."""
    return PermGroup([partition.image(g) for g in group.gens], len(partition), cap=group.cap)
