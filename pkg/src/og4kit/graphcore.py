"""Simple undirected graphs carrying one orientation per edge."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


@dataclass(frozen=True)
class OrientedGraph:
    """A loop-free simple graph on ``range(n)`` stored as its arc set.

    Each edge ``{x, y}`` appears exactly once, as ``(x, y)`` when it is
    oriented from ``x`` to ``y``.
    """

    n: int
    arcs: frozenset

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc {(u, v)} out of range")
            if (v, u) in arcs:
                raise ValueError(f"edge {{{u}, {v}}} carries both orientations")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "OrientedGraph":
        return cls(n, frozenset(arcs))

    @cached_property
    def sorted_arcs(self) -> tuple:
        return tuple(sorted(self.arcs))

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(frozenset(a) for a in self.arcs)

    @cached_property
    def out_adj(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            out[u].append(v)
        return tuple(tuple(sorted(a)) for a in out)

    @cached_property
    def in_adj(self) -> tuple:
        inn = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(a)) for a in inn)

    @cached_property
    def adj(self) -> tuple:
        return tuple(tuple(sorted(o + i)) for o, i in zip(self.out_adj, self.in_adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def reversed(self) -> "OrientedGraph":
        return OrientedGraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs


@dataclass
class QuarticReport:
    simple: bool
    quartic: bool
    degrees: tuple
    in_out_profile: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.simple and self.quartic


def validate_quartic(g: OrientedGraph) -> QuarticReport:
    """Valency report; (in, out) degree pairs are tallied into ``in_out_profile``."""
    # the constructor already rejects loops and doubled edges
    degrees = tuple(g.degree(v) for v in range(g.n))
    profile: dict = {}
    for v in range(g.n):
        key = (len(g.in_adj[v]), len(g.out_adj[v]))
        profile[key] = profile.get(key, 0) + 1
    return QuarticReport(
        simple=True,
        quartic=g.n > 0 and all(d == 4 for d in degrees),
        degrees=degrees,
        in_out_profile=profile,
    )


def components(g: OrientedGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque(comp)
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: OrientedGraph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def bipartition(g: OrientedGraph):
    """Two-colouring as ``(part0, part1)``, or ``None`` when an odd cycle exists."""
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if colour[y] == -1:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    part0 = tuple(v for v in range(g.n) if colour[v] == 0)
    part1 = tuple(v for v in range(g.n) if colour[v] == 1)
    return part0, part1


def is_bipartite(g: OrientedGraph) -> bool:
    return bipartition(g) is not None


def distances(g: OrientedGraph, source: int) -> list:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == -1:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def induced(g: OrientedGraph, vertices: Iterable[int]) -> tuple[OrientedGraph, tuple]:
    """Induced subgraph, renumbered by ascending original index.

    Returns the subgraph and ``index_map`` with ``index_map[new] = old``.
    """
    index_map = tuple(sorted(set(vertices)))
    if not index_map:
        raise ValueError("empty vertex set")
    new_of = {old: new for new, old in enumerate(index_map)}
    arcs = frozenset(
        (new_of[u], new_of[v]) for u, v in g.arcs if u in new_of and v in new_of
    )
    return OrientedGraph(len(index_map), arcs), index_map


def double_cover_vertex(x: int, delta: int) -> int:
    return 2 * x + delta


def standard_double_cover(g: OrientedGraph) -> OrientedGraph:
    """Bipartite double: ``x_d`` encoded as ``2x + d``, edges ``{x_0, y_1}``.

    Only the undirected structure is meaningful; every cover edge is oriented
    from its ``d = 0`` end.
    """
    arcs = set()
    for u, v in g.arcs:
        arcs.add((double_cover_vertex(u, 0), double_cover_vertex(v, 1)))
        arcs.add((double_cover_vertex(v, 0), double_cover_vertex(u, 1)))
    return OrientedGraph(2 * g.n, frozenset(arcs))


def same_edges(a: OrientedGraph, b: OrientedGraph) -> bool:
    return a.n == b.n and a.edges == b.edges


def cycle_graph(m: int, oriented: bool = True) -> OrientedGraph:
    """``C_m`` with arcs ``i -> i+1`` (``oriented``) or alternating directions."""
    if oriented:
        arcs = [(i, (i + 1) % m) for i in range(m)]
    else:
        arcs = [(i, (i + 1) % m) if i % 2 == 0 else ((i + 1) % m, i) for i in range(m)]
    return OrientedGraph(m, frozenset(arcs))


def to_dot(g: OrientedGraph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    """Deterministic DOT text: undirected ``--`` edges with ``dir=forward``."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = labels[v] if labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.sorted_arcs:
        lines.append(f"  {u} -- {v} [dir=forward];")
    lines.append("}")
    return "\n".join(lines) + "\n"
