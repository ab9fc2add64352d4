"""Constructors for the graph-group families.

Vertex encodings:

* ``C_r[2.K1]``: ``(i, j) -> 2*i + j``
* ``Gamma(r, s)``: ``(i, j) -> i*s + j``
* ``Gamma+(r, s)``: the induced subgraph on same-parity ``(i, j)``,
  renumbered in ascending ``i*s + j`` order
* ``Gamma_2(r, s)``: ``(i, j)_d -> 2*(i*s + j) + d``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import BadParam, Disconnected, NotGenerating, NotInverseClosed
from .graphcore import OrientedGraph, induced, is_connected
from .ogpair import OrientedPair
from .permgroup import Perm, PermGroup, compose, inverse, is_identity

FAMILIES = ("lex", "gamma", "gamma-plus", "double")
VARIANTS = ("G", "H")
ORIENTATIONS = ("con1", "con2c", "con2a")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    r: int
    s: int | None = None
    variant: str = "G"
    orientation: str = "con1"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParam(f"unknown family {self.family!r}")
        if self.variant not in VARIANTS:
            raise BadParam(f"unknown group variant {self.variant!r}")
        if self.orientation not in ORIENTATIONS:
            raise BadParam(f"unknown orientation {self.orientation!r}")
        if self.family == "double" and self.orientation != "con2a":
            object.__setattr__(self, "orientation", "con2a")
        if self.family != "double" and self.orientation == "con2a":
            raise BadParam("orientation con2a belongs to the double cover family only")

    def build(self) -> OrientedPair:
        if self.family == "lex":
            return lex_cycle_pair(self.r)
        if self.family == "gamma":
            return gamma_pair(self.r, self.s, self.variant, self.orientation)
        if self.family == "gamma-plus":
            return gamma_plus_pair(self.r, self.s, self.variant, self.orientation)
        return double_cover_pair(self.r, self.s)

    def to_dict(self) -> dict:
        return {"family": self.family, "r": self.r, "s": self.s,
                "variant": self.variant, "orientation": self.orientation}

    @classmethod
    def from_dict(cls, d: dict) -> "FamilySpec":
        return cls(d["family"], int(d["r"]), None if d.get("s") is None else int(d["s"]),
                   d.get("variant", "G"), d.get("orientation", "con1"))


def _perm_from(n: int, fn: Callable[[int], int]) -> Perm:
    p = tuple(fn(x) for x in range(n))
    if sorted(p) != list(range(n)):
        raise ValueError("map is not a bijection")
    return p


# -- C_r[2.K1] with Z2 wr Z_r -------------------------------------------------

def lex_cycle_pair(r: int) -> OrientedPair:
    if r < 3:
        raise BadParam(f"C_r[2.K1] needs r >= 3, got r={r}")
    n = 2 * r

    def v(i, j):
        return 2 * (i % r) + j

    arcs = {(v(i, j), v(i + 1, k)) for i in range(r) for j in range(2) for k in range(2)}
    gens = []
    for i in range(r):
        # flip the two points over i
        gens.append(_perm_from(n, lambda x, i=i: x ^ 1 if x // 2 == i else x))
    gens.append(_perm_from(n, lambda x: v(x // 2 + 1, x % 2)))
    return OrientedPair(OrientedGraph(n, frozenset(arcs)), PermGroup(gens, n))


def lex_base_group(pair: OrientedPair, r: int) -> PermGroup:
    """The base group ``Z_2^r`` of ``lex_cycle_pair(r)``."""
    return PermGroup(pair.group.gens[:r], pair.n)


def lex_shift(r: int) -> Perm:
    n = 2 * r
    return _perm_from(n, lambda x: 2 * ((x // 2 + 1) % r) + x % 2)


def lex_n_of(pair: OrientedPair, r: int, c: int) -> PermGroup:
    """``N(c)``: the base group extended by the ``c``-th power of the shift."""
    if r % c:
        raise BadParam(f"{c} does not divide {r}")
    shift = pair.group.gens[r]
    power = tuple(range(pair.n))
    for _ in range(c):
        power = compose(power, shift)
    gens = list(pair.group.gens[:r])
    if not is_identity(power):
        gens.append(power)
    return PermGroup(gens, pair.n)


# -- Gamma(r, s) --------------------------------------------------------------

class GammaSymbols:
    """The permutations ``mu, nu, sigma, tau`` of ``Z_r x Z_s``."""

    def __init__(self, r: int, s: int):
        self.r, self.s = r, s
        n = r * s
        self.n = n
        self.mu = _perm_from(n, lambda x: self.v(x // s + 1, x % s))
        self.nu = _perm_from(n, lambda x: self.v(x // s, x % s + 1))
        self.sigma = _perm_from(n, lambda x: self.v(-(x // s), x % s))
        self.tau = _perm_from(n, lambda x: self.v(-(x // s), -(x % s)))

    def v(self, i: int, j: int) -> int:
        return (i % self.r) * self.s + (j % self.s)

    def ij(self, x: int) -> tuple[int, int]:
        return divmod(x, self.s)

    def word(self, *letters) -> Perm:
        """Product of named symbols, left to right; ``'mu^2'`` style powers allowed."""
        p = tuple(range(self.n))
        for letter in letters:
            name, _, exp = letter.partition("^")
            base = getattr(self, name)
            k = int(exp) if exp else 1
            if k < 0:
                base, k = inverse(base), -k
            for _ in range(k):
                p = compose(p, base)
        return p


def gamma_arcs(r: int, s: int, orientation: str) -> frozenset:
    sym = GammaSymbols(r, s)
    arcs = set()
    for i in range(r):
        for j in range(s):
            x = sym.v(i, j)
            if orientation == "con1":
                arcs.add((x, sym.v(i + 1, j + 1)))
                arcs.add((x, sym.v(i - 1, j + 1)))
            elif orientation == "con2c":
                if s % 2:
                    raise BadParam("orientation con2c needs s even")
                e = 1 if j % 2 == 0 else -1
                arcs.add((x, sym.v(i + 1, j + e)))
                arcs.add((x, sym.v(i - 1, j - e)))
            else:
                raise BadParam(f"orientation {orientation!r} does not apply to Gamma(r, s)")
    return frozenset(arcs)


def gamma_graph(r: int, s: int, orientation: str = "con1") -> OrientedGraph:
    if r < 3 or s < 3:
        raise BadParam(f"Gamma(r, s) needs r, s >= 3, got ({r}, {s})")
    return OrientedGraph(r * s, gamma_arcs(r, s, orientation))


def gamma_generators(r: int, s: int, variant: str) -> list[Perm]:
    sym = GammaSymbols(r, s)
    if variant == "G":
        return [sym.mu, sym.nu, sym.sigma]
    if variant == "H":
        if s % 2:
            raise BadParam(f"H(r, s) needs s even, got s={s}")
        return [sym.mu, sym.word("sigma", "nu"), sym.tau]
    raise BadParam(f"unknown group variant {variant!r}")


def _check_gamma_params(r: int, s: int, variant: str, orientation: str) -> None:
    if r < 3 or s < 3:
        raise BadParam(f"need r, s >= 3, got ({r}, {s})")
    if variant not in VARIANTS:
        raise BadParam(f"unknown group variant {variant!r}")
    if (variant == "H" or orientation == "con2c") and s % 2:
        raise BadParam(f"group H and orientation con2c need s even, got s={s}")
    if orientation == "con2c" and s < 4:
        raise BadParam("orientation con2c needs s >= 4")


def gamma_pair(r: int, s: int, variant: str = "G", orientation: str = "con1") -> OrientedPair:
    """``Gamma(r, s)`` with ``G(r, s) = <mu, nu, sigma>`` or ``H(r, s) = <mu, sigma nu, tau>``."""
    _check_gamma_params(r, s, variant, orientation)
    if r % 2 == 0 and s % 2 == 0:
        raise Disconnected(
            f"Gamma({r}, {s}) is disconnected for r, s both even; use gamma_plus_pair")
    graph = gamma_graph(r, s, orientation)
    return OrientedPair(graph, PermGroup(gamma_generators(r, s, variant), r * s))


def plus_vertices(r: int, s: int) -> list[int]:
    return [i * s + j for i in range(r) for j in range(s) if (i - j) % 2 == 0]


def _restrict(p: Perm, index_map: Sequence[int]) -> Perm:
    new_of = {old: new for new, old in enumerate(index_map)}
    return tuple(new_of[p[old]] for old in index_map)


def gamma_plus_generators(r: int, s: int, variant: str) -> list[Perm]:
    """Table generators restricted to ``X+`` (``mu^2, mu nu, sigma`` or ``mu^2, sigma mu nu, tau``)."""
    sym = GammaSymbols(r, s)
    if variant == "G":
        words = [sym.word("mu^2"), sym.word("mu", "nu"), sym.sigma]
    elif variant == "H":
        words = [sym.word("mu^2"), sym.word("sigma", "mu", "nu"), sym.tau]
    else:
        raise BadParam(f"unknown group variant {variant!r}")
    index_map = plus_vertices(r, s)
    return [_restrict(p, index_map) for p in words]


def gamma_plus_pair(r: int, s: int, variant: str = "G", orientation: str = "con1") -> OrientedPair:
    """``Gamma+(r, s)``: the same-parity half of ``Gamma(r, s)`` for ``r, s`` even."""
    if r % 2 or s % 2 or r < 4 or s < 4:
        raise BadParam(f"Gamma+(r, s) needs r, s even and >= 4, got ({r}, {s})")
    _check_gamma_params(r, s, variant, orientation)
    full = gamma_graph(r, s, orientation)
    graph, index_map = induced(full, plus_vertices(r, s))
    return OrientedPair(graph, PermGroup(gamma_plus_generators(r, s, variant), graph.n))


def restrict_to_plus(r: int, s: int, p: Perm) -> Perm:
    """Restrict a permutation of ``Z_r x Z_s`` that preserves ``X+``."""
    return _restrict(p, plus_vertices(r, s))


# -- Gamma_2(r, s) -----------------------------------------------------------

class DoubleSymbols:
    """``mu, nu, sigma, tau`` extended to ``X_2 = {(i, j)_d}``."""

    def __init__(self, r: int, s: int):
        self.r, self.s = r, s
        n = 2 * r * s
        self.n = n
        self.mu = _perm_from(n, lambda x: self.v(*self._shift(x, 1, 0, 0)))
        self.nu = _perm_from(n, lambda x: self.v(*self._shift(x, 0, 1, 0)))
        self.sigma = _perm_from(n, lambda x: self._sigma(x))
        self.tau = _perm_from(n, lambda x: self._tau(x))

    def v(self, i: int, j: int, d: int) -> int:
        return 2 * ((i % self.r) * self.s + (j % self.s)) + (d % 2)

    def ijd(self, x: int) -> tuple[int, int, int]:
        i, j = divmod(x // 2, self.s)
        return i, j, x % 2

    def _shift(self, x, di, dj, dd):
        i, j, d = self.ijd(x)
        return i + di, j + dj, d + dd

    def _sigma(self, x):
        i, j, d = self.ijd(x)
        return self.v(i, -j, d + 1)

    def _tau(self, x):
        i, j, d = self.ijd(x)
        return self.v(-i, -j, d)

    def word(self, *letters) -> Perm:
        p = tuple(range(self.n))
        for letter in letters:
            name, _, exp = letter.partition("^")
            base = getattr(self, name)
            k = int(exp) if exp else 1
            if k < 0:
                base, k = inverse(base), -k
            for _ in range(k):
                p = compose(p, base)
        return p


def double_cover_graph(r: int, s: int) -> OrientedGraph:
    """``Gamma_2(r, s)`` with ``(i,j)_d -> (i+1, j+(-1)^d)_{d+1}``, ``(i-1, j-(-1)^d)_{d+1}``."""
    if r < 3 or s < 3:
        raise BadParam(f"need r, s >= 3, got ({r}, {s})")
    sym = DoubleSymbols(r, s)
    arcs = set()
    for i in range(r):
        for j in range(s):
            for d in range(2):
                e = 1 if d == 0 else -1
                x = sym.v(i, j, d)
                arcs.add((x, sym.v(i + 1, j + e, d + 1)))
                arcs.add((x, sym.v(i - 1, j - e, d + 1)))
    return OrientedGraph(2 * r * s, frozenset(arcs))


def double_cover_pair(r: int, s: int, force: bool = False) -> OrientedPair:
    """``Gamma_2(r, s)`` with ``G_2(r, s) = <mu, nu, sigma, tau>``.

    ``force`` skips the parity check and reports disconnection as
    :class:`Disconnected` instead of :class:`BadParam`.
    """
    if r < 3 or s < 3:
        raise BadParam(f"need r, s >= 3, got ({r}, {s})")
    if (r % 2 == 0 or s % 2 == 0) and not force:
        raise BadParam(f"Gamma_2(r, s) is connected only for r, s both odd, got ({r}, {s})")
    graph = double_cover_graph(r, s)
    if not is_connected(graph):
        raise Disconnected(f"Gamma_2({r}, {s}) is disconnected")
    sym = DoubleSymbols(r, s)
    return OrientedPair(graph, PermGroup([sym.mu, sym.nu, sym.sigma, sym.tau], graph.n))


# -- Cayley graphs ------------------------------------------------------------

def cayley_pair(group: PermGroup, connection: Iterable[Perm], out_set: Iterable[Perm] | None = None,
                normalizer: Iterable[Perm] = ()) -> OrientedPair:
    """``Cay(K, S)`` on the elements of ``K`` with edges ``{k, sk}``.

    ``K`` acts by right multiplication.  ``out_set`` picks the orientation
    ``k -> sk``; by default one element from each inverse pair is taken.
    Each permutation ``c`` in ``normalizer`` must normalise ``K`` and fix the
    out-set; it acts on vertices by conjugation ``k -> c^-1 k c``.
    """
    elements = sorted(group.elements)
    index = {k: i for i, k in enumerate(elements)}
    S = set(tuple(s) for s in connection)
    ident = group.identity
    if ident in S:
        raise NotInverseClosed("connection set contains the identity")
    if any(inverse(s) not in S for s in S):
        raise NotInverseClosed("connection set is not closed under inverses")
    if any(s not in group for s in S):
        raise NotGenerating("connection set leaves the group")
    if PermGroup(sorted(S), group.degree).order != group.order:
        raise NotGenerating("connection set does not generate the group")
    if out_set is None:
        out = []
        for s in sorted(S):
            if inverse(s) not in out:
                out.append(s)
    else:
        out = [tuple(s) for s in out_set]
    out_s = set(out)
    if any(inverse(s) in out_s for s in out) or out_s | {inverse(s) for s in out} != S:
        raise NotInverseClosed("out-set must contain exactly one of each inverse pair")
    arcs = frozenset((index[k], index[compose(s, k)]) for k in elements for s in out)
    graph = OrientedGraph(len(elements), arcs)
    gens = [tuple(index[compose(k, g)] for k in elements) for g in group.gens]
    for c in normalizer:
        c = tuple(c)
        ci = inverse(c)
        img = {compose(compose(ci, s), c) for s in out}
        if img != out_s:
            raise ValueError("normalizer element does not fix the out-set")
        gens.append(tuple(index[compose(compose(ci, k), c)] for k in elements))
    return OrientedPair(graph, PermGroup(gens, len(elements)))
