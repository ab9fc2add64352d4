"""Graph-group pairs ``(graph, group, arc orbit)`` and their OG(4) test."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import ArcTransitive, CapExceeded, DegreeMismatch, NotHalfTransitive
from .graphcore import OrientedGraph, distances, is_connected, validate_quartic
from .permgroup import PermGroup, compose, inverse, is_transitive, stabilizer

MATERIALIZE_LIMIT = 200_000


@dataclass(frozen=True)
class OrientedPair:
    """A graph with a group of automorphisms; ``graph.arcs`` is the orbit Δ."""

    graph: OrientedGraph
    group: PermGroup

    def __post_init__(self):
        if self.group.degree != self.graph.n:
            raise DegreeMismatch(
                f"group degree {self.group.degree} != vertex count {self.graph.n}")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def delta(self) -> frozenset:
        return self.graph.arcs

    def with_reversed_delta(self) -> "OrientedPair":
        return OrientedPair(self.graph.reversed(), self.group)


@dataclass
class OG4Report:
    connected: bool
    quartic: bool
    vertex_transitive: bool
    edge_transitive: bool
    delta_is_single_orbit: bool
    orientation_preserved: bool
    arc_transitive: bool
    stabilizer_order: int | None
    arc_orbit_sizes: tuple = ()

    @property
    def member(self) -> bool:
        return (self.connected and self.quartic and self.vertex_transitive
                and self.edge_transitive and self.delta_is_single_orbit
                and self.orientation_preserved and not self.arc_transitive)


def _orbits_on(items: list, act) -> list[list]:
    index = {x: i for i, x in enumerate(items)}
    seen = [False] * len(items)
    out = []
    for i, start in enumerate(items):
        if seen[i]:
            continue
        seen[i] = True
        orb = [start]
        queue = deque(orb)
        while queue:
            x = queue.popleft()
            for y in act(x):
                j = index.get(y)
                if j is None:
                    raise ValueError(f"{y!r} is not an image inside the set")
                if not seen[j]:
                    seen[j] = True
                    orb.append(y)
                    queue.append(y)
        out.append(orb)
    return out


def arc_orbits(graph: OrientedGraph, group: PermGroup) -> list[frozenset]:
    """Orbits of ``group`` on all ordered pairs ``(x, y)`` with ``{x, y}`` an edge."""
    arcs = sorted(graph.arcs | {(v, u) for u, v in graph.arcs})
    try:
        orbs = _orbits_on(arcs, lambda a: [(g[a[0]], g[a[1]]) for g in group.gens])
    except ValueError as exc:
        raise NotHalfTransitive("group does not act by graph automorphisms") from exc
    return [frozenset(o) for o in orbs]


def check_og4(pair: OrientedPair, materialize_limit: int = MATERIALIZE_LIMIT) -> OG4Report:
    """Decide membership of ``pair`` in OG(4) from generator actions.

    Only the stabiliser order needs the element list; it is left as ``None``
    when the group is larger than ``materialize_limit``.
    """
    graph, group = pair.graph, pair.group
    if group.degree != graph.n:
        raise DegreeMismatch("group degree differs from vertex count")
    arcs = graph.arcs
    preserved = all((g[u], g[v]) in arcs for g in group.gens for u, v in arcs)
    edges = sorted(tuple(sorted(e)) for e in graph.edges)
    edge_set = graph.edges
    automorphic = preserved or all(
        frozenset((g[u], g[v])) in edge_set for g in group.gens for u, v in arcs)
    if automorphic:
        edge_orbs = _orbits_on(edges, lambda e: [tuple(sorted((g[e[0]], g[e[1]]))) for g in group.gens])
        all_arcs = arc_orbits(graph, group)
        edge_transitive = len(edge_orbs) == 1
        single = preserved and any(o == arcs for o in all_arcs)
        arc_transitive = len(all_arcs) == 1
        sizes = tuple(sorted(len(o) for o in all_arcs))
    else:
        # not a group of graph automorphisms; orbit bookkeeping would be meaningless
        edge_transitive = single = arc_transitive = False
        sizes = ()
    vt = is_transitive(group)
    stab = None
    if vt:
        try:
            bounded = PermGroup(group.gens, group.degree, cap=materialize_limit)
            stab = stabilizer(bounded, 0).order
        except CapExceeded:
            stab = None
    return OG4Report(
        connected=is_connected(graph),
        quartic=validate_quartic(graph).quartic,
        vertex_transitive=vt,
        edge_transitive=edge_transitive,
        delta_is_single_orbit=single,
        orientation_preserved=preserved,
        arc_transitive=arc_transitive,
        stabilizer_order=stab,
        arc_orbit_sizes=sizes,
    )


def canonical_delta(graph: OrientedGraph, group: PermGroup) -> frozenset:
    """Of the two mutually reverse arc orbits, the one holding the least arc."""
    orbs = arc_orbits(graph, group)
    if len(orbs) == 1:
        raise ArcTransitive("group is transitive on arcs")
    if len(orbs) != 2:
        raise NotHalfTransitive(f"{len(orbs)} arc orbits, expected 2")
    a, b = orbs
    if frozenset((v, u) for u, v in a) != b:
        raise NotHalfTransitive("arc orbits are not reverses of each other")
    return a if min(a) < min(b) else b


def in_out_neighbours(pair: OrientedPair, vertex: int) -> tuple[tuple, tuple]:
    return pair.graph.out_adj[vertex], pair.graph.in_adj[vertex]


def _bfs_order(g: OrientedGraph) -> list[tuple[int, int | None]]:
    """Vertices with a previously listed neighbour ("parent"), component by component."""
    seen = [False] * g.n
    order = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        order.append((start, None))
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    order.append((y, x))
                    queue.append(y)
    return order


def _profile(g: OrientedGraph, v: int) -> tuple:
    dist = distances(g, v)
    counts: dict = {}
    for d in dist:
        counts[d] = counts.get(d, 0) + 1
    return (len(g.in_adj[v]), len(g.out_adj[v])) + tuple(sorted(counts.items()))


def digraph_isomorphisms(g1: OrientedGraph, g2: OrientedGraph) -> Iterator[tuple]:
    """Arc-preserving bijections ``f`` (as tuples, ``f[v1] = v2``) by backtracking.

    Vertices of ``g1`` are placed in breadth-first order so each new vertex
    has a placed neighbour; candidates are scanned in ascending order.
    """
    if g1.n != g2.n or len(g1.arcs) != len(g2.arcs):
        return
    prof1 = [_profile(g1, v) for v in range(g1.n)]
    prof2 = [_profile(g2, v) for v in range(g2.n)]
    if sorted(prof1) != sorted(prof2):
        return
    order = _bfs_order(g1)
    n = g1.n
    f = [-1] * n
    used = [False] * n

    def consistent(v, w):
        if prof1[v] != prof2[w]:
            return False
        for y in g1.out_adj[v]:
            if f[y] != -1 and (w, f[y]) not in g2.arcs:
                return False
        for y in g1.in_adj[v]:
            if f[y] != -1 and (f[y], w) not in g2.arcs:
                return False
        return True

    def candidates(v, parent):
        if parent is None:
            return range(n)
        fp = f[parent]
        if v in g1.out_adj[parent]:
            return g2.out_adj[fp]
        return g2.in_adj[fp]

    def search(k):
        if k == n:
            yield tuple(f)
            return
        v, parent = order[k]
        for w in candidates(v, parent):
            if used[w] or not consistent(v, w):
                continue
            f[v] = w
            used[w] = True
            yield from search(k + 1)
            f[v] = -1
            used[w] = False

    yield from search(0)


def conjugates_group(f: tuple, g1: PermGroup, g2: PermGroup) -> bool:
    """Whether ``f^-1 G1 f == G2`` for the vertex bijection ``f``."""
    if g1.order != g2.order:
        return False
    finv = inverse(f)
    for g in g1.gens:
        # y -> f(g(f^-1(y)))
        c = compose(compose(finv, g), f)
        if c not in g2:
            return False
    return True


def pair_isomorphic(p1: OrientedPair, p2: OrientedPair, strict: bool = False) -> tuple | None:
    """A vertex bijection realising an isomorphism of pairs, or ``None``.

    Accepts ``Δ1`` mapping onto ``Δ2`` or onto its reverse unless ``strict``.
    The group isomorphism is conjugation by the returned bijection.
    """
    if p1.n != p2.n or len(p1.delta) != len(p2.delta):
        return None
    if p1.group.order != p2.group.order:
        return None
    targets = [p2.graph] if strict else [p2.graph, p2.graph.reversed()]
    for target in targets:
        for f in digraph_isomorphisms(p1.graph, target):
            if conjugates_group(f, p1.group, p2.group):
                return f
    return None
