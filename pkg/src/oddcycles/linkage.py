"""Vertex-disjoint path systems, separations and Menger duality.

Everything here reduces to unit vertex capacities: every vertex ``v`` becomes
an arc ``v_in -> v_out`` of capacity one, original edges get unbounded
capacity, so minimum cuts consist of vertex arcs only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Collection, Iterable

from .graph import Digraph, Walk, multiplicity

INF = 1 << 30


@dataclass(frozen=True)
class Linkage:
    """A family of (A, B)-paths in which every vertex lies on at most ``bound`` paths."""

    paths: tuple[Walk, ...]
    sources: frozenset[int]
    sinks: frozenset[int]
    bound: int = 1

    @property
    def order(self) -> int:
        return len(self.paths)

    def vertices(self) -> set[int]:
        return {v for p in self.paths for v in p.vertices}

    def edge_set(self) -> set[tuple[int, int]]:
        return {e for p in self.paths for e in p.edges()}


@dataclass(frozen=True)
class Separation:
    """``(source_side, sink_side)`` covering the live vertices, no edge from
    ``source_side - sink_side`` to ``sink_side - source_side``."""

    source_side: frozenset[int]
    sink_side: frozenset[int]

    @property
    def separator(self) -> frozenset[int]:
        return self.source_side & self.sink_side

    @property
    def order(self) -> int:
        return len(self.separator)


class _FlowNetwork:
    """Adjacency-list residual network with deterministic BFS augmentation."""

    def __init__(self, size: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(size)]

    def add(self, u: int, v: int, c: int) -> int:
        self.adj[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)
        return len(self.head) - 2

    def max_flow(self, s: int, t: int, limit: int = INF) -> int:
        flow = 0
        while flow < limit:
            prev = [-1] * len(self.adj)
            prev[s] = -2
            queue = deque([s])
            while queue and prev[t] == -1:
                u = queue.popleft()
                for e in self.adj[u]:
                    v = self.head[e]
                    if self.cap[e] > 0 and prev[v] == -1:
                        prev[v] = e
                        queue.append(v)
            if prev[t] == -1:
                break
            # unit vertex capacities: every augmenting path carries one unit
            v = t
            while v != s:
                e = prev[v]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                v = self.head[e ^ 1]
            flow += 1
        return flow

    def residual_reach(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.head[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def max_vertex_disjoint_paths(
    g: Digraph,
    sources: Iterable[int],
    sinks: Iterable[int],
    removed: Collection[int] = (),
    limit: int | None = None,
) -> tuple[Linkage, Separation]:
    """Maximum linkage from ``sources`` to ``sinks`` in ``g - removed``.

    Returns the linkage with a separation of equal order certifying
    optimality.  A vertex in both ``sources`` and ``sinks`` contributes a
    zero-length path.  With ``limit`` the search stops once that many paths
    are found; the separation is then only meaningful if the order is below
    the limit.
    """
    removed = set(removed)
    a = sorted(set(sources) - removed)
    b = sorted(set(sinks) - removed)
    a_set, b_set = set(a), set(b)
    n = g.n
    # node layout: v_in = 2v, v_out = 2v + 1, source = 2n, sink = 2n + 1
    s, t = 2 * n, 2 * n + 1
    net = _FlowNetwork(2 * n + 2)
    vertex_arc = {}
    for v in range(n):
        if v not in removed:
            vertex_arc[v] = net.add(2 * v, 2 * v + 1, 1)
    edge_arc = {}
    for u, v in g.edges:
        if u in removed or v in removed:
            continue
        # (A,B)-paths never enter A nor leave B
        if v in a_set or u in b_set:
            continue
        edge_arc[(u, v)] = net.add(2 * u + 1, 2 * v, INF)
    for v in a:
        net.add(s, 2 * v, INF)
    for v in b:
        net.add(2 * v + 1, t, INF)

    value = net.max_flow(s, t, INF if limit is None else limit)

    used = {uv for uv, e in edge_arc.items() if net.cap[e ^ 1] > 0}
    succ: dict[int, list[int]] = {}
    for u, v in sorted(used):
        succ.setdefault(u, []).append(v)
    paths = []
    for start in a:
        if net.cap[vertex_arc[start]] != 0:
            continue  # no unit through this source
        seq = [start]
        v = start
        while v not in b_set:
            # smallest head first; unit vertex capacity makes it unique
            nxt = succ[v].pop(0)
            seq.append(nxt)
            v = nxt
        paths.append(Walk(tuple(seq)))
    assert len(paths) == value
    linkage = Linkage(tuple(paths), frozenset(a), frozenset(b), bound=1)

    reach = net.residual_reach(s)
    live = set(range(n)) - removed
    passed = {v for v in live if 2 * v + 1 in reach}
    cut = {v for v in live if 2 * v in reach and 2 * v + 1 not in reach}
    separation = Separation(frozenset(passed | cut), frozenset(live - passed))
    return linkage, separation


def linkage_order(
    g: Digraph, sources: Iterable[int], sinks: Iterable[int], removed: Collection[int] = ()
) -> int:
    return max_vertex_disjoint_paths(g, sources, sinks, removed)[0].order


def is_ab_path(g: Digraph, walk: Walk, sources: Collection[int], sinks: Collection[int]) -> bool:
    ends = set(sources) | set(sinks)
    return (
        walk.is_path()
        and walk.is_walk_in(g)
        and walk.start in sources
        and walk.end in sinks
        and not any(v in ends for v in walk.interior())
        # a zero-length path is a vertex shared by A and B
        and (walk.length > 0 or walk.start in sinks)
    )


def verify_linkage(
    g: Digraph,
    linkage: Linkage,
    sources: Collection[int] | None = None,
    sinks: Collection[int] | None = None,
) -> bool:
    sources = set(linkage.sources if sources is None else sources)
    sinks = set(linkage.sinks if sinks is None else sinks)
    if not all(is_ab_path(g, p, sources, sinks) for p in linkage.paths):
        return False
    return all(c <= linkage.bound for c in multiplicity(linkage.paths).values())


def verify_separation(
    g: Digraph,
    separation: Separation,
    sources: Collection[int],
    sinks: Collection[int],
    removed: Collection[int] = (),
) -> bool:
    removed = set(removed)
    live = set(range(g.n)) - removed
    x, y = separation.source_side, separation.sink_side
    if (x | y) != live:
        return False
    if not (set(sources) - removed <= x and set(sinks) - removed <= y):
        return False
    only_x, only_y = x - y, y - x
    return not any(u in only_x and v in only_y for u, v in g.edges)


def fractional_to_integral_linkage(
    g: Digraph, linkage: Linkage, count: int
) -> Linkage:
    """Integral linkage of order ``count`` inside the union of a (1/t)-integral one.

    Requires ``linkage.order >= count * linkage.bound``.  Max-flow on the union
    subgraph of the input paths; by Menger the union has no separator smaller
    than ``count``.
    """
    if not verify_linkage(g, linkage):
        raise ValueError("input is not a valid linkage for its multiplicity bound")
    if linkage.order < count * linkage.bound:
        raise ValueError(
            f"need order >= {count * linkage.bound}, got {linkage.order}"
        )
    union = Digraph.from_edges(g.n, linkage.edge_set())
    inside = linkage.vertices()
    outside = set(range(g.n)) - inside
    result, _ = max_vertex_disjoint_paths(
        union, linkage.sources, linkage.sinks, removed=outside, limit=count
    )
    if result.order < count:  # pragma: no cover - excluded by the counting argument
        raise AssertionError("union subgraph admits fewer disjoint paths than promised")
    return Linkage(result.paths[:count], linkage.sources, linkage.sinks, bound=1)
