"""Normal quotients of OG(4) pairs and the questions asked of them.

A normal quotient collapses the orbits of a normal subgroup.  For pairs in
OG(4) it is either a cover (valency 4, multiplicity 1) or degenerate: one
vertex, one edge, or a cycle that may or may not inherit the orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import (InconsistentEll, NotAutomorphism, NotKernel, NotNormal, TheoremViolation)
from .graphcore import OrientedGraph
from .ogpair import OrientedPair
from .permgroup import (DEFAULT_BOUND, Partition, PermGroup, induced_group, intersection,
                        is_normal, is_semiregular, kernel_on_partition, normal_subgroups,
                        orbits, stabilizer)


class QuotientKind(str, Enum):
    COVER = "cover"
    K1 = "K1"
    K2 = "K2"
    CYCLE_ORIENTED = "cycle-oriented"
    CYCLE_UNORIENTED = "cycle-unoriented"


@dataclass
class QuotientResult:
    kind: QuotientKind
    partition: Partition
    ell: int | None
    kernel: PermGroup | None = None
    quotient: OrientedPair | None = None

    @property
    def is_cycle(self) -> bool:
        return self.kind in (QuotientKind.CYCLE_ORIENTED, QuotientKind.CYCLE_UNORIENTED)

    @property
    def oriented(self) -> bool | None:
        if not self.is_cycle:
            return None
        return self.kind is QuotientKind.CYCLE_ORIENTED

    @property
    def length(self) -> int:
        return len(self.partition)


def ell_constant(pair: OrientedPair, partition: Partition) -> int | None:
    """The number of neighbours each vertex has in each adjacent cell.

    ``None`` when no two distinct cells are adjacent.
    """
    cell_of = partition.cell_of
    seen = set()
    for x in range(pair.n):
        counts: dict = {}
        for y in pair.graph.adj[x]:
            c = cell_of[y]
            if c != cell_of[x]:
                counts[c] = counts.get(c, 0) + 1
        seen.update(counts.values())
    if len(seen) > 1:
        raise InconsistentEll(f"neighbour multiplicities {sorted(seen)} are not constant")
    return seen.pop() if seen else None


def _quotient_adjacency(pair: OrientedPair, partition: Partition) -> list[set]:
    cell_of = partition.cell_of
    nbrs = [set() for _ in partition.cells]
    for u, v in pair.graph.arcs:
        cu, cv = cell_of[u], cell_of[v]
        if cu == cv:
            if len(partition) > 1:
                raise TheoremViolation(f"edge {{{u}, {v}}} lies inside an orbit")
            continue
        nbrs[cu].add(cv)
        nbrs[cv].add(cu)
    return nbrs


def _cycle_is_oriented(pair: OrientedPair, partition: Partition) -> bool:
    cell_of = partition.cell_of
    return all(len({cell_of[y] for y in pair.graph.out_adj[x]}) == 1 for x in range(pair.n))


def _cover_pair(pair: OrientedPair, partition: Partition) -> OrientedPair:
    cell_of = partition.cell_of
    arcs = {(cell_of[u], cell_of[v]) for u, v in pair.graph.arcs}
    if any((b, a) in arcs for a, b in arcs):
        raise TheoremViolation("quotient edge receives both orientations")
    graph = OrientedGraph(len(partition), frozenset(arcs))
    return OrientedPair(graph, induced_group(pair.group, partition))


def normal_quotient(pair: OrientedPair, N: PermGroup, *, check_normal: bool = True,
                    compute_kernel: bool = True) -> QuotientResult:
    """Collapse the ``N``-orbits and classify the result.

    With ``compute_kernel`` the kernel of the action on the orbits is formed
    and checked against the orientedness decision (an unoriented cycle must
    have a semiregular kernel equal to ``N``; an oriented one a kernel
    holding every vertex stabiliser).  Both flags can be dropped for groups
    too large to list, in which case only the orbit partition is used.
    """
    if check_normal and not is_normal(N, pair.group):
        raise NotNormal("subgroup is not normal in the pair's group")
    partition = orbits(N)
    if compute_kernel:
        kernel = kernel_on_partition(pair.group, partition)
    else:
        if not partition.is_invariant(pair.group.gens):
            raise NotNormal("orbit partition is not invariant under the group")
        kernel = None
    nbrs = _quotient_adjacency(pair, partition)
    ell = ell_constant(pair, partition)
    k = len(partition)
    quotient = None
    if k == 1:
        kind = QuotientKind.K1
    elif k == 2:
        kind = QuotientKind.K2
    else:
        valencies = {len(s) for s in nbrs}
        if valencies == {2}:
            if _cycle_is_oriented(pair, partition):
                kind = QuotientKind.CYCLE_ORIENTED
            else:
                kind = QuotientKind.CYCLE_UNORIENTED
        elif valencies == {4} and ell == 1:
            kind = QuotientKind.COVER
            quotient = _cover_pair(pair, partition)
        else:
            raise TheoremViolation(
                f"quotient on {k} orbits has valencies {sorted(valencies)} and ell={ell}")
    result = QuotientResult(kind, partition, ell, kernel, quotient)
    if kernel is not None:
        _cross_check(pair, N, result)
    return result


def _cross_check(pair: OrientedPair, N: PermGroup, result: QuotientResult) -> None:
    kernel = result.kernel
    if result.kind is QuotientKind.CYCLE_UNORIENTED or result.kind is QuotientKind.COVER:
        if kernel.order != N.order or not is_semiregular(kernel):
            raise TheoremViolation(
                f"{result.kind.value} quotient but kernel (order {kernel.order}) is not "
                f"N (order {N.order}) acting semiregularly")
    elif result.kind is QuotientKind.CYCLE_ORIENTED:
        for x in range(pair.n):
            if not all(g in kernel for g in stabilizer(pair.group, x).gens):
                raise TheoremViolation(f"oriented cycle but kernel misses the stabiliser of {x}")


@dataclass
class CensusRow:
    subgroup: PermGroup
    kernel: PermGroup
    partition: Partition
    length: int
    oriented: bool
    maximal: bool = False
    index: int = -1  # position in the normal-subgroup list


def cyclic_quotient_census(pair: OrientedPair, bound: int = DEFAULT_BOUND) -> list[CensusRow]:
    """Every normal subgroup whose quotient is a cycle, longest first."""
    rows = []
    for idx, N in enumerate(normal_subgroups(pair.group, bound)):
        if N.order == 1:
            continue
        res = normal_quotient(pair, N, check_normal=False)
        if res.is_cycle:
            rows.append(CensusRow(N, res.kernel, res.partition, res.length, bool(res.oriented),
                                  index=idx))
    for row in rows:
        row.maximal = not any(
            other.length > row.length and other.subgroup.element_set <= row.subgroup.element_set
            for other in rows)
    rows.sort(key=lambda r: (-r.length, r.index))
    return rows


def distinct_quotients(rows: Iterable[CensusRow]) -> list[CensusRow]:
    """One row per distinct orbit partition (first occurrence kept)."""
    seen = {}
    for row in rows:
        seen.setdefault(row.partition, row)
    return list(seen.values())


def full_kernel(pair: OrientedPair, N: PermGroup) -> PermGroup:
    return kernel_on_partition(pair.group, orbits(N))


@dataclass
class Independence:
    independent: bool
    K: PermGroup
    result: QuotientResult


def independent(pair: OrientedPair, N: PermGroup, M: PermGroup) -> Independence:
    """Whether the cyclic quotients by ``N`` and ``M`` are independent.

    ``K`` is the intersection of the two orbit kernels; the pair is
    independent iff the quotient by ``K`` is not a cycle.
    """
    for H in (N, M):
        res = normal_quotient(pair, H, check_normal=False, compute_kernel=False)
        if not res.is_cycle:
            raise ValueError("independence is defined for cyclic quotients only")
    K = intersection(full_kernel(pair, N), full_kernel(pair, M))
    res = normal_quotient(pair, K, check_normal=False)
    return Independence(not res.is_cycle, K, res)


# -- symmetries of a quotient cycle ------------------------------------------

@dataclass(frozen=True)
class CycleSymmetry:
    """``rotation``: ``i -> i + k``; ``reflection``: ``i -> k - i`` on ``Z_m``."""

    kind: str
    k: int
    m: int

    def apply(self, i: int) -> int:
        if self.kind == "rotation":
            return (i + self.k) % self.m
        return (self.k - i) % self.m

    def then(self, other: "CycleSymmetry") -> "CycleSymmetry":
        """Apply ``self`` first, then ``other``."""
        return cycle_symmetry([other.apply(self.apply(i)) for i in range(self.m)])

    def __str__(self) -> str:
        return f"a^{self.k}" if self.kind == "rotation" else f"a^{self.k}c"


def cycle_symmetry(images) -> CycleSymmetry:
    """Decompose a permutation of the labels ``0..m-1`` of a cycle."""
    m = len(images)
    k = images[0] % m
    if all(images[i] % m == (k + i) % m for i in range(m)):
        return CycleSymmetry("rotation", k, m)
    if all(images[i] % m == (k - i) % m for i in range(m)):
        return CycleSymmetry("reflection", k, m)
    raise NotAutomorphism(f"{tuple(images)} is not a symmetry of C_{m}")


def cycle_labelling(pair: OrientedPair, partition: Partition) -> list[int]:
    """Cell indices listed around the quotient cycle.

    Starts at the cell of vertex 0 and steps towards the cell holding the
    least out-neighbour of vertex 0.
    """
    nbrs = _quotient_adjacency(pair, partition)
    if any(len(s) != 2 for s in nbrs) or len(nbrs) < 3:
        raise ValueError("partition does not give a cycle")
    start = partition.cell_of[0]
    nxt = partition.cell_of[min(pair.graph.out_adj[0])]
    order = [start, nxt]
    while len(order) < len(nbrs):
        a, b = order[-2], order[-1]
        (c,) = nbrs[b] - {a}
        order.append(c)
    if set(order) != set(range(len(nbrs))):
        raise ValueError("quotient is not a single cycle")
    return order


def induced_symmetry(g, partition: Partition, labelling: list[int]) -> CycleSymmetry:
    label_of = {cell: i for i, cell in enumerate(labelling)}
    img = partition.image(g)
    return cycle_symmetry([label_of[img[cell]] for cell in labelling])


@dataclass
class SignatureReport:
    mapping: dict = field(repr=False)
    injective: bool
    first_image_size: int
    second_image_size: int
    first_full: bool
    second_matches: bool
    second_kind: str  # "D" (dihedral, unoriented) or "Z" (cyclic, oriented)
    r: int
    s: int


def quotient_action_signature(pair: OrientedPair, N: PermGroup, M: PermGroup) -> SignatureReport:
    """The map ``g -> (g on the N-cycle, g on the M-cycle)``.

    ``N`` and ``M`` must be the full kernels of their cyclic quotients.
    Injectivity, and whether the projections fill ``D_2r`` and ``D_2s``
    (unoriented ``M``-cycle) or ``Z_s`` (oriented), are reported.
    """
    res_n = normal_quotient(pair, N, check_normal=False)
    res_m = normal_quotient(pair, M, check_normal=False)
    for H, res in ((N, res_n), (M, res_m)):
        if not res.is_cycle:
            raise NotKernel("quotient is not a cycle")
        if res.kernel.order != H.order:
            raise NotKernel("subgroup is not the full kernel of its quotient")
    lab_n = cycle_labelling(pair, res_n.partition)
    lab_m = cycle_labelling(pair, res_m.partition)
    mapping = {}
    for g in pair.group.elements:
        mapping[g] = (induced_symmetry(g, res_n.partition, lab_n),
                      induced_symmetry(g, res_m.partition, lab_m))
    first = {a for a, _ in mapping.values()}
    second = {b for _, b in mapping.values()}
    r, s = res_n.length, res_m.length
    oriented_m = bool(res_m.oriented)
    if oriented_m:
        second_ok = len(second) == s and all(b.kind == "rotation" for b in second)
    else:
        second_ok = len(second) == 2 * s
    return SignatureReport(
        mapping=mapping,
        injective=len(set(mapping.values())) == len(mapping),
        first_image_size=len(first),
        second_image_size=len(second),
        first_full=len(first) == 2 * r,
        second_matches=second_ok,
        second_kind="Z" if oriented_m else "D",
        r=r,
        s=s,
    )
