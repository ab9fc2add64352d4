"""Weak metacirculants and the quotient by the ``rho``-cycles.

A graph on ``mn`` vertices is a weak ``(m, n)``-metacirculant relative to
``(rho, lam)`` when ``rho`` has ``m`` cycles of length ``n``, ``<lam>``
permutes those cycles transitively and ``lam^-1 rho lam = rho^e`` with
``gcd(e, n) = 1``.  Here we check that definition, decide whether the
``rho``-cycles form a normal quotient, and verify the two families whose
reduced pairs are metacirculants in the obvious way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from math import gcd

from .errors import BadParam, NotInvariant, TheoremViolation
from .families import GammaSymbols, gamma_pair, gamma_plus_pair, restrict_to_plus
from .ogpair import OrientedPair, check_og4
from .permgroup import (PermGroup, Partition, compose, conjugate, cycles, is_regular,
                        is_transitive, kernel_on_partition, orbits, power)
from .quotient import QuotientKind, QuotientResult, _quotient_adjacency, normal_quotient


class ClauseFailed(TheoremViolation):
    """A clause of the metacirculant description of a reduced pair failed."""


class RhoStatus(str, Enum):
    NOT_NORMAL = "not_normal"
    UNORIENTED_CYCLE = "normal_unoriented_cycle"
    ORIENTED_CYCLE = "normal_oriented_cycle"
    NONCYCLE = "normal_noncycle"


@dataclass
class MetaReport:
    is_weak: bool
    m: int | None
    n: int | None
    r_exp: int | None
    is_metacirculant: bool
    rho_quotient: RhoStatus
    H_transitive: bool
    H_regular: bool
    failures: list = field(default_factory=list)


def rho_partition(rho) -> Partition:
    return Partition.from_cells(cycles(rho), len(rho))


def _is_automorphism(pair: OrientedPair, g) -> bool:
    arcs = pair.graph.arcs
    return all((g[u], g[v]) in arcs for u, v in arcs)


@dataclass
class RhoQuotient:
    status: RhoStatus
    partition: Partition
    kernel: PermGroup | None = None
    result: QuotientResult | None = None

    @property
    def length(self) -> int:
        return len(self.partition)


def rho_quotient_status(pair: OrientedPair, rho) -> RhoQuotient:
    """Whether the ``rho``-cycles are the orbits of a normal subgroup.

    They are exactly when the cycle partition is invariant and the kernel
    on it is transitive on every cycle: any normal subgroup with these
    orbits lies in that kernel.
    """
    part = rho_partition(rho)
    if not part.is_invariant(pair.group.gens):
        return RhoQuotient(RhoStatus.NOT_NORMAL, part)
    kernel = kernel_on_partition(pair.group, part)
    if orbits(kernel) != part:
        return RhoQuotient(RhoStatus.NOT_NORMAL, part, kernel)
    res = normal_quotient(pair, kernel, check_normal=False)
    if res.kind is QuotientKind.CYCLE_ORIENTED:
        status = RhoStatus.ORIENTED_CYCLE
    elif res.kind is QuotientKind.CYCLE_UNORIENTED:
        status = RhoStatus.UNORIENTED_CYCLE
    else:
        status = RhoStatus.NONCYCLE
    return RhoQuotient(status, part, kernel, res)


def conjugation_exponent(rho, lam) -> int | None:
    """The ``e`` in ``0..n-1`` with ``lam^-1 rho lam = rho^e``, if any."""
    target = conjugate(rho, lam)
    p = rho
    n = max((len(c) for c in cycles(rho)), default=1)
    for e in range(1, n + 1):
        if p == target:
            return e % n
        p = compose(p, rho)
    return None


def check_weak_metacirculant(pair: OrientedPair, rho, lam) -> MetaReport:
    """Test every clause of the (weak) metacirculant definition.

    Failed clauses are listed in ``failures``; nothing is raised.
    """
    rho, lam = tuple(rho), tuple(lam)
    failures = []
    if not (_is_automorphism(pair, rho) and _is_automorphism(pair, lam)):
        failures.append("rho or lambda is not an automorphism of the oriented graph")
    lengths = {len(c) for c in cycles(rho)}
    m = n = r_exp = None
    if len(lengths) != 1:
        failures.append(f"rho has cycles of lengths {sorted(lengths)}")
    else:
        n = lengths.pop()
        m = pair.n // n
    part = rho_partition(rho)
    try:
        img = part.image(lam)
    except NotInvariant:
        failures.append("lambda does not permute the rho-cycles")
        img = None
    if img is not None:
        c, seen = 0, set()
        while c not in seen:
            seen.add(c)
            c = img[c]
        if len(seen) != len(part):
            failures.append("<lambda> is not transitive on the rho-cycles")
    if n is not None:
        r_exp = conjugation_exponent(rho, lam)
        if r_exp is None:
            failures.append("lambda does not normalise <rho>")
        elif gcd(r_exp, n) != 1:
            failures.append(f"conjugation exponent {r_exp} is not a unit mod {n}")
    is_weak = not failures
    is_meta = False
    if is_weak:
        lm = power(lam, m)
        is_meta = any(lm[x] == x for x in range(pair.n))
    H = PermGroup([rho, lam], pair.n)
    transitive = is_transitive(H)
    return MetaReport(
        is_weak=is_weak,
        m=m,
        n=n,
        r_exp=r_exp,
        is_metacirculant=is_meta,
        rho_quotient=rho_quotient_status(pair, rho).status,
        H_transitive=transitive,
        H_regular=transitive and is_regular(H),
        failures=failures,
    )


@dataclass
class CycleShape:
    is_cycle: bool
    length: int
    oriented: bool
    internal_edges: int


def rho_cycle_shape(pair: OrientedPair, rho) -> CycleShape:
    """The simple graph on the ``rho``-cycles, whether or not they come from
    a normal subgroup.

    Edges inside a cycle are dropped from the quotient and counted in
    ``internal_edges``; ``oriented`` asks that every vertex send its
    out-edges leaving its own cycle into a single cycle.
    """
    part = rho_partition(rho)
    cell_of = part.cell_of
    nbrs = [set() for _ in part.cells]
    internal = 0
    for u, v in pair.graph.arcs:
        cu, cv = cell_of[u], cell_of[v]
        if cu == cv:
            internal += 1
            continue
        nbrs[cu].add(cv)
        nbrs[cv].add(cu)
    is_cycle = len(part) >= 3 and all(len(c) == 2 for c in nbrs)
    oriented = is_cycle and all(
        len({cell_of[y] for y in pair.graph.out_adj[x]} - {cell_of[x]}) == 1
        for x in range(pair.n))
    return CycleShape(is_cycle, len(part), oriented, internal)


# -- Class I shape ------------------------------------------------------------

def class_one_shape(pair: OrientedPair, rho) -> bool:
    """The ``rho``-cycle quotient is a cycle of length >= 3 with two edges per adjacent cycle.

    No edge may lie inside a ``rho``-cycle.
    """
    part = rho_partition(rho)
    if len(part) < 3:
        return False
    cell_of = part.cell_of
    if any(cell_of[u] == cell_of[v] for u, v in pair.graph.arcs):
        return False
    nbrs = _quotient_adjacency(pair, part)
    if any(len(s) != 2 for s in nbrs):
        return False
    for x in range(pair.n):
        counts: dict = {}
        for y in pair.graph.adj[x]:
            counts[cell_of[y]] = counts.get(cell_of[y], 0) + 1
        if sorted(counts.values()) != [2, 2]:
            return False
    return True


@dataclass
class ConverseCheck:
    applies: bool
    holds: bool
    H_regular: bool
    H_member: bool | None = None
    H_status: RhoStatus | None = None


def class_one_converse(pair: OrientedPair, rho, lam) -> ConverseCheck:
    """For a Class I shape with ``H = <rho, lam>`` not regular, ``(graph, H)``
    must lie in OG(4) with the ``rho``-cycles an ``H``-oriented normal quotient.
    """
    H = PermGroup([tuple(rho), tuple(lam)], pair.n)
    regular = is_transitive(H) and is_regular(H)
    if regular or not class_one_shape(pair, rho):
        return ConverseCheck(False, True, regular)
    hpair = OrientedPair(pair.graph, H)
    member = check_og4(hpair).member
    status = rho_quotient_status(hpair, rho).status
    return ConverseCheck(True, member and status is RhoStatus.ORIENTED_CYCLE, regular,
                         member, status)


def weak_pairs(pair: OrientedPair, min_m: int = 3):
    """All ``(rho, lam)`` in ``G x G`` giving a weak metacirculant with ``m >= min_m``."""
    for rho, lam in product(pair.group.elements, repeat=2):
        lengths = {len(c) for c in cycles(rho)}
        if len(lengths) != 1 or pair.n // lengths.pop() < min_m:
            continue
        rep = check_weak_metacirculant(pair, rho, lam)
        if rep.is_weak:
            yield rho, lam, rep


# -- replacement search -------------------------------------------------------

def independent_with(pair: OrientedPair, kernel: PermGroup, bound: int) -> bool:
    """Whether the cyclic quotient with full kernel ``kernel`` has an independent partner."""
    from .classify import find_independent_quotients

    for ip in find_independent_quotients(pair, bound):
        if ip.N == kernel or ip.M == kernel:
            return True
    return False


def replacement_search(pair: OrientedPair, rho, lam, bound: int = 10_000):
    """Find ``(rho', lam')`` in ``<rho, lam>`` whose cycle quotient is oriented,
    normal and one of an independent pair of cyclic normal quotients.

    The first hit in element order of ``H x H`` is returned, else ``None``.
    """
    H = PermGroup([tuple(rho), tuple(lam)], pair.n)
    for r2, l2 in product(H.elements, repeat=2):
        lengths = {len(c) for c in cycles(r2)}
        if len(lengths) != 1 or pair.n // lengths.pop() < 3:
            continue
        if PermGroup([r2, l2], pair.n) != H:
            continue
        if not check_weak_metacirculant(pair, r2, l2).is_weak:
            continue
        st = rho_quotient_status(pair, r2)
        if st.status is RhoStatus.ORIENTED_CYCLE and independent_with(pair, st.kernel, bound):
            return r2, l2
    return None


# -- reduced pairs of the two oriented lines ------------------------------------

TABLE3 = {
    1: ("Gamma(r,s) / G(r,s)", "mu", "nu", "X_o({s},{r};1)"),
    2: ("Gamma+(r,s) / G+(r,s)", "mu^2", "mu nu", "X_e({s},{r2};1,0)"),
}


@dataclass
class CorollaryReport:
    line: int
    r: int
    s: int
    m: int
    n: int
    name: str
    meta: MetaReport
    status: RhoStatus


def corollary_instance(r: int, s: int, line: int):
    """The pair and ``(rho, lam)`` for a line of the oriented table."""
    sym = GammaSymbols(r, s)
    if line == 1:
        if r % 2 == 0 and s % 2 == 0:
            raise BadParam("line 1 needs at least one of r, s odd")
        return gamma_pair(r, s, "G", "con1"), sym.mu, sym.nu
    if line == 2:
        if r % 2 or s % 2:
            raise BadParam("line 2 needs r and s both even")
        pair = gamma_plus_pair(r, s, "G", "con1")
        return (pair, restrict_to_plus(r, s, sym.word("mu^2")),
                restrict_to_plus(r, s, sym.word("mu", "nu")))
    raise BadParam(f"no oriented line {line}; expected 1 or 2")


def verify_corollary_wm(r: int, s: int, line: int) -> CorollaryReport:
    """Check the reduced pair of ``line`` is a weak ``(s, r)`` or ``(s, r/2)``
    metacirculant whose ``rho``-cycles give an oriented cyclic normal quotient.

    Raises :class:`ClauseFailed` naming the first clause that fails.
    """
    pair, rho, lam = corollary_instance(r, s, line)
    meta = check_weak_metacirculant(pair, rho, lam)
    if not meta.is_weak:
        raise ClauseFailed(f"not a weak metacirculant: {'; '.join(meta.failures)}")
    want = (s, r) if line == 1 else (s, r // 2)
    if (meta.m, meta.n) != want:
        raise ClauseFailed(f"(m, n) = ({meta.m}, {meta.n}), expected {want}")
    st = rho_quotient_status(pair, rho)
    if st.status is not RhoStatus.ORIENTED_CYCLE or st.length != s:
        raise ClauseFailed(f"rho-cycle quotient is {st.status.value} of length {st.length}, "
                           f"expected an oriented C_{s}")
    name = TABLE3[line][3].format(s=s, r=r, r2=r // 2)
    return CorollaryReport(line, r, s, meta.m, meta.n, name, meta, st.status)


def construction_trichotomy(r: int) -> dict:
    """Status of the three ``(rho, lam)`` choices on ``Gamma(r, r) / G(r, r)``."""
    if r % 2 == 0 or r < 3:
        raise BadParam("r must be odd and at least 3")
    pair = gamma_pair(r, r, "G", "con1")
    sym = GammaSymbols(r, r)
    choices = {
        "a": (sym.word("mu", "nu"), sym.mu),
        "b": (sym.nu, sym.mu),
        "c": (sym.mu, sym.nu),
    }
    out = {}
    for key, (rho, lam) in choices.items():
        out[key] = check_weak_metacirculant(pair, rho, lam)
    return out
