"""Classification of pairs with independent cyclic normal quotients.

The pipeline: list the cyclic normal quotients, keep the independent
(unoriented, any) pairs of full kernels, collapse ``K = N ∩ M`` to get a
base pair whose two kernels meet trivially, and match the base against the
six reference families with an explicit pair isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoIndependentQuotients, NoMatch, NotACover, TheoremViolation
from .families import double_cover_pair, gamma_pair, gamma_plus_pair
from .ogpair import OrientedPair, check_og4, pair_isomorphic
from .permgroup import (DEFAULT_BOUND, PermGroup, induced_group, intersection, stabilizer)
from .quotient import QuotientKind, cyclic_quotient_census, independent, normal_quotient

# line -> (reference family label, M-quotient oriented?, parity condition)
TABLE = {
    1: ("Gamma(r,s) / G(r,s)", True, "at least one odd"),
    2: ("Gamma+(r,s) / G+(r,s)", True, "both even"),
    3: ("Gamma(r,s) / H(r,s)", False, "r odd, s even"),
    4: ("Gamma(s,r) / H(s,r)", False, "r even, s odd"),
    5: ("Gamma+(r,s) / H+(r,s)", False, "both even"),
    6: ("Gamma_2(r,s) / G_2(r,s)", False, "both odd"),
}

SWAP_TWIN = {3: 4, 4: 3}


@dataclass
class IndependentPair:
    N: PermGroup
    M: PermGroup
    r: int
    s: int
    n_oriented: bool
    m_oriented: bool

    @property
    def sort_key(self) -> tuple:
        return (self.r, self.s, self.N.key, self.M.key)


def table_line(r: int, s: int, m_oriented: bool) -> int:
    """The unique line compatible with the orientedness pattern and parities."""
    r_odd, s_odd = r % 2 == 1, s % 2 == 1
    if m_oriented:
        return 1 if (r_odd or s_odd) else 2
    if r_odd and s_odd:
        return 6
    if r_odd:
        return 3
    if s_odd:
        return 4
    return 5


def reference_pair(line: int, r: int, s: int) -> OrientedPair:
    if line == 1:
        return gamma_pair(r, s, "G", "con1")
    if line == 2:
        return gamma_plus_pair(r, s, "G", "con1")
    if line == 3:
        return gamma_pair(r, s, "H", "con2c")
    if line == 4:
        return gamma_pair(s, r, "H", "con2c")
    if line == 5:
        return gamma_plus_pair(r, s, "H", "con2c")
    if line == 6:
        return double_cover_pair(r, s)
    raise ValueError(f"no table line {line}")


def find_independent_quotients(pair: OrientedPair, bound: int = DEFAULT_BOUND) -> list[IndependentPair]:
    """All ordered independent pairs ``(N, M)`` of full kernels, first one unoriented.

    When both quotients are unoriented, both orders are listed.
    """
    rows = cyclic_quotient_census(pair, bound)
    kernels = {}
    for row in rows:
        kernels.setdefault(row.kernel.element_set, row)
    uniq = sorted(kernels.values(), key=lambda r: (r.length, r.kernel.key))
    found = []
    for i, a in enumerate(uniq):
        for b in uniq[i + 1:]:
            if a.oriented and b.oriented:
                # never independent; checked exhaustively elsewhere
                continue
            if not independent(pair, a.kernel, b.kernel).independent:
                continue
            for first, second in ((a, b), (b, a)):
                if first.oriented:
                    continue
                found.append(IndependentPair(first.kernel, second.kernel, first.length,
                                             second.length, first.oriented, second.oriented))
    found.sort(key=lambda p: p.sort_key)
    return found


@dataclass
class Reduction:
    K: PermGroup
    base: OrientedPair
    N_bar: PermGroup
    M_bar: PermGroup


def reduce_to_base(pair: OrientedPair, N: PermGroup, M: PermGroup) -> Reduction:
    """Collapse ``K = N ∩ M``; the pair must be a normal cover of the result."""
    K = intersection(N, M)
    if K.order == 1:
        return Reduction(K, pair, N, M)
    res = normal_quotient(pair, K, check_normal=False)
    if res.kind is not QuotientKind.COVER:
        raise NotACover(f"quotient by N ∩ M is {res.kind.value}, not a cover")
    part = res.partition
    N_bar = induced_group(N, part)
    M_bar = induced_group(M, part)
    if intersection(N_bar, M_bar).order != 1:
        raise TheoremViolation("reduced kernels still intersect")
    return Reduction(K, res.quotient, N_bar, M_bar)


@dataclass
class LineMatch:
    line: int
    r: int
    s: int
    witness: tuple | None


@dataclass
class ClassificationReport:
    found: list
    reduction: Reduction
    table_line: int
    parameters: tuple
    witness: tuple
    stabilizer_order: int
    swapped: bool = False
    matches: list = field(default_factory=list)

    @property
    def equivalent_lines(self) -> set:
        return {m.line for m in self.matches if m.witness is not None}

    @property
    def n_oriented(self) -> bool:
        return self.found[0].n_oriented

    @property
    def m_oriented(self) -> bool:
        return self.found[0].m_oriented


def match_line(pair: OrientedPair, ip: IndependentPair, strict: bool = False) -> LineMatch:
    red = reduce_to_base(pair, ip.N, ip.M)
    line = table_line(ip.r, ip.s, ip.m_oriented)
    try:
        ref = reference_pair(line, ip.r, ip.s)
    except Exception as exc:
        raise NoMatch(f"line {line} reference at (r, s) = ({ip.r}, {ip.s}) unavailable: {exc}")
    return LineMatch(line, ip.r, ip.s, pair_isomorphic(red.base, ref, strict))


def classify_independent(pair: OrientedPair, bound: int = DEFAULT_BOUND,
                         all_matches: bool = True, strict: bool = False) -> ClassificationReport:
    """Match ``pair`` against the table via its canonical independent pair.

    The canonical pair is the least by ``(r, s, N, M)``.  With
    ``all_matches`` every other independent pair is matched too and listed
    in ``matches``; a pair with no line, or with no isomorphism witness, is
    a :class:`NoMatch`.  ``strict`` forbids matching Δ onto the reversed
    orientation of the reference.
    """
    found = find_independent_quotients(pair, bound)
    if not found:
        raise NoIndependentQuotients("no independent cyclic normal quotients")
    canon = found[0]
    swapped = False
    if table_line(canon.r, canon.s, canon.m_oriented) == 4:
        # lines 3 and 4 are one family; report it with the odd parameter first
        canon = next(ip for ip in found if ip.N == canon.M and ip.M == canon.N)
        swapped = True
    red = reduce_to_base(pair, canon.N, canon.M)
    if not check_og4(red.base).member:
        raise TheoremViolation("base pair is not in OG(4)")
    line = table_line(canon.r, canon.s, canon.m_oriented)
    ref = reference_pair(line, canon.r, canon.s)
    witness = pair_isomorphic(red.base, ref, strict)
    if witness is None:
        raise NoMatch(f"base pair is not isomorphic to the line {line} reference "
                      f"at (r, s) = ({canon.r}, {canon.s})")
    stabs = {stabilizer(pair.group, x).order for x in range(pair.n)}
    if stabs != {2}:
        raise TheoremViolation(f"vertex stabiliser orders {sorted(stabs)}, expected 2")
    matches = [LineMatch(line, canon.r, canon.s, witness)]
    if all_matches:
        for ip in found:
            if ip is canon:
                continue
            m = match_line(pair, ip, strict)
            if m.witness is None:
                raise NoMatch(f"independent pair ({ip.r}, {ip.s}) matches no line")
            matches.append(m)
    return ClassificationReport(
        found=found,
        reduction=red,
        table_line=line,
        parameters=(canon.r, canon.s),
        witness=witness,
        stabilizer_order=2,
        swapped=swapped,
        matches=matches,
    )
