"""Parity gadgets and the min-max statements for directed odd X-walks.

The gadget splits every vertex outside X into four copies (two out-copies
``A``/``A'``, two in-copies ``B``/``B'``) and every vertex of X into an
out-copy and an in-copy.  Original edges between non-X vertices are doubled,
one copy per layer, and two matching edges ``v_B -> v_A'`` and
``v_B' -> v_A`` switch layers.  Any path from the out-copies of X to the
in-copies of X then alternates original edges with matching edges and has
length 1 mod 4, so it projects to a directed odd X-walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from .graph import (
    Digraph,
    Walk,
    enumerate_cycles,
    cycle_walk,
    find_directed_odd_cycle,
    has_directed_odd_cycle,
    is_odd_x_walk,
    multiplicity,
    odd_x_walk_exists,
)
from .linkage import max_vertex_disjoint_paths

ROLE_A, ROLE_A2, ROLE_B, ROLE_B2 = "A", "A'", "B", "B'"
_OUT_ROLES = (ROLE_A, ROLE_A2)


@dataclass(frozen=True)
class ParityGadget:
    digraph: Digraph
    origin: tuple[int, ...]  # gadget vertex -> vertex of D
    role: tuple[str, ...]  # gadget vertex -> one of A, A', B, B'
    image: dict[tuple[int, str], int]  # (vertex of D, role) -> gadget vertex
    x: frozenset[int]
    x_out: tuple[int, ...]  # X_A
    x_in: tuple[int, ...]  # X_B
    matching: frozenset[tuple[int, int]]

    def is_matching_edge(self, tail: int, head: int) -> bool:
        return (tail, head) in self.matching

    def project(self, path: Walk) -> Walk:
        """Walk of D traced by a gadget walk; matching edges collapse."""
        seq = [self.origin[path.start]]
        for tail, head in path.edges():
            if not self.is_matching_edge(tail, head):
                seq.append(self.origin[head])
        return Walk(tuple(seq))

    def lift(self, walk: Walk) -> Walk:
        """Gadget walk from X_A to X_B tracing a directed odd X-walk of D."""
        if walk.parity != 1 or walk.start not in self.x or walk.end not in self.x:
            raise ValueError("only odd X-walks lift into the gadget")
        vs = walk.vertices
        seq = [self.image[(vs[0], ROLE_A)]]
        for i, v in enumerate(vs[1:-1], start=1):
            if i % 2 == 1:
                seq += [self.image[(v, ROLE_B)], self.image[(v, ROLE_A2)]]
            else:
                seq += [self.image[(v, ROLE_B2)], self.image[(v, ROLE_A)]]
        seq.append(self.image[(vs[-1], ROLE_B)])
        return Walk(tuple(seq))


def build_parity_gadget(d: Digraph, xs: Iterable[int]) -> ParityGadget:
    x = frozenset(xs)
    origin: list[int] = []
    role: list[str] = []
    image: dict[tuple[int, str], int] = {}
    for v in range(d.n):
        roles = (ROLE_A, ROLE_B) if v in x else (ROLE_A, ROLE_A2, ROLE_B, ROLE_B2)
        for r in roles:
            image[(v, r)] = len(origin)
            origin.append(v)
            role.append(r)
    edges = []
    for v, u in d.edges:
        edges.append((image[(v, ROLE_A)], image[(u, ROLE_B)]))
        if v not in x and u not in x:
            edges.append((image[(v, ROLE_A2)], image[(u, ROLE_B2)]))
    matching = set()
    for v in range(d.n):
        if v not in x:
            matching.add((image[(v, ROLE_B)], image[(v, ROLE_A2)]))
            matching.add((image[(v, ROLE_B2)], image[(v, ROLE_A)]))
    edges.extend(matching)
    return ParityGadget(
        digraph=Digraph.from_edges(len(origin), edges),
        origin=tuple(origin),
        role=tuple(role),
        image=image,
        x=x,
        x_out=tuple(image[(v, ROLE_A)] for v in sorted(x)),
        x_in=tuple(image[(v, ROLE_B)] for v in sorted(x)),
        matching=frozenset(matching),
    )


# -- l odd X-walks used at most twice, or fewer than l vertices -------------


@dataclass(frozen=True)
class WalkPacking:
    walks: tuple[Walk, ...]


@dataclass(frozen=True)
class WalkCover:
    vertices: tuple[int, ...]


def odd_x_walk_dichotomy(d: Digraph, xs: Iterable[int], l: int) -> WalkPacking | WalkCover:
    """``l`` odd X-walks using every vertex at most twice, or a cover of size < l."""
    if l < 1:
        raise ValueError("l must be positive")
    gadget = build_parity_gadget(d, xs)
    linkage, separation = max_vertex_disjoint_paths(
        gadget.digraph, gadget.x_out, gadget.x_in
    )
    if linkage.order >= l:
        return WalkPacking(tuple(gadget.project(p) for p in linkage.paths[:l]))
    cover = sorted({gadget.origin[v] for v in separation.separator})
    return WalkCover(tuple(cover))


def verify_dichotomy(
    d: Digraph, xs: Collection[int], l: int, result: WalkPacking | WalkCover
) -> bool:
    """Packing: l odd X-walks, total appearances per vertex <= 2 (repeats
    inside one walk count).  Cover: size <= l - 1 and no odd X-walk survives."""
    if isinstance(result, WalkPacking):
        return (
            len(result.walks) == l
            and all(is_odd_x_walk(d, xs, w) for w in result.walks)
            and all(c <= 2 for c in _appearances(result.walks).values())
        )
    return len(result.vertices) <= l - 1 and not odd_x_walk_exists(d, xs, result.vertices)


def _appearances(walks: Iterable[Walk]) -> dict[int, int]:
    # every position counts, so a closed X-walk uses its endpoint twice
    total: dict[int, int] = {}
    for w in walks:
        for v in w.vertices:
            total[v] = total.get(v, 0) + 1
    return total


# -- shortening and the trichotomy ------------------------------------------


def _walk_graph(n: int, walk: Walk) -> Digraph:
    return Digraph.from_edges(n, walk.edges())


def shorten_to_odd_x_path(walk: Walk) -> Walk:
    """Shortest odd walk with the same ends inside the walk's own edges.

    When those edges span no directed odd cycle the result is a path: a
    repeated vertex would enclose a closed subwalk that is either odd (an odd
    cycle) or even (removable, contradicting minimality).
    """
    if walk.closed:
        raise ValueError("closed odd walks contain an odd cycle; extract it instead")
    if walk.parity != 1:
        raise ValueError("expected an odd walk")
    n = max(walk.vertices) + 1
    h = _walk_graph(n, walk)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {(walk.start, 0): None}
    frontier = [(walk.start, 0)]
    target = (walk.end, 1)
    while frontier and target not in parent:
        nxt = []
        for v, p in frontier:
            for w in h.out_adj[v]:
                state = (w, 1 - p)
                if state not in parent:
                    parent[state] = (v, p)
                    nxt.append(state)
        frontier = nxt
    seq = []
    state: tuple[int, int] | None = target
    while state is not None:
        seq.append(state[0])
        state = parent[state]
    path = Walk(tuple(reversed(seq)))
    if not path.is_path():
        raise ValueError("the walk spans a directed odd cycle; no odd path guaranteed")
    return path


@dataclass(frozen=True)
class OddCyclePacking:
    """Directed odd cycles (closed walks) with every vertex in at most two.

    ``distinct`` is False only when duplicate cycles had to be kept.
    """

    cycles: tuple[Walk, ...]
    distinct: bool = True


@dataclass(frozen=True)
class OddPathPacking:
    paths: tuple[Walk, ...]


def odd_cycles_in(n: int, walk: Walk, limit: int = 64) -> list[Walk]:
    h = _walk_graph(n, walk)
    return [cycle_walk(c) for c in enumerate_cycles(h, limit=limit, odd_only=True)]


def pick_distinct_cycles(n: int, walks: Sequence[Walk], k: int) -> list[Walk] | None:
    """One odd cycle per walk, pairwise distinct, for k of the walks.

    Bipartite matching between walks and the odd cycles their edges span.
    """
    options = [odd_cycles_in(n, w) for w in walks]
    owner: dict[tuple[int, ...], int] = {}

    def augment(i: int, seen: set) -> bool:
        for c in options[i]:
            key = c.vertices
            if key in seen:
                continue
            seen.add(key)
            if key not in owner or augment(owner[key], seen):
                owner[key] = i
                return True
        return False

    for i in range(len(walks)):
        augment(i, set())
        if len(owner) >= k:
            break
    if len(owner) < k:
        return None
    chosen = sorted(owner.items(), key=lambda item: item[1])[:k]
    return [Walk(key) for key, _ in chosen]


def select_distinct_endpoints(paths: Iterable[Walk]) -> list[Walk]:
    """Greedy thinning to pairwise endpoint-disjoint paths.

    Paths are taken by increasing smaller endpoint; a chosen path removes at
    most two others because each endpoint lies on at most two paths.
    """
    order = sorted(
        paths, key=lambda p: (min(p.start, p.end), max(p.start, p.end), p.vertices)
    )
    used: set[int] = set()
    chosen = []
    for p in order:
        if p.start in used or p.end in used:
            continue
        chosen.append(p)
        used.update((p.start, p.end))
    return chosen


def odd_x_walk_trichotomy(
    d: Digraph, xs: Iterable[int], k: int
) -> OddCyclePacking | OddPathPacking | WalkCover:
    """k half-integral odd cycles, k half-integral odd X-paths with distinct
    ends, or a cover of all odd X-walks of size at most 4k - 1."""
    if k < 1:
        raise ValueError("k must be positive")
    xs = frozenset(xs)
    result = odd_x_walk_dichotomy(d, xs, 4 * k)
    if isinstance(result, WalkCover):
        return result
    with_cycle = [w for w in result.walks if has_directed_odd_cycle(_walk_graph(d.n, w))]
    cycle_free = [w for w in result.walks if w not in with_cycle]
    if len(with_cycle) >= k:
        distinct = pick_distinct_cycles(d.n, with_cycle, k)
        if distinct is not None:
            return OddCyclePacking(tuple(distinct))
    paths = select_distinct_endpoints(shorten_to_odd_x_path(w) for w in cycle_free)
    if len(paths) >= k:
        return OddPathPacking(tuple(paths[:k]))
    # only reachable when overlapping walks share their odd cycles
    cycles = [find_directed_odd_cycle(_walk_graph(d.n, w)) for w in with_cycle[:k]]
    return OddCyclePacking(tuple(cycles), distinct=False)


def verify_cycle_packing(g: Digraph, packing: OddCyclePacking, k: int) -> bool:
    cycles = packing.cycles
    if len(cycles) != k:
        return False
    if packing.distinct and len({c.vertices for c in cycles}) != k:
        return False
    return all(
        c.is_cycle() and c.parity == 1 and c.is_walk_in(g) for c in cycles
    ) and all(v <= 2 for v in multiplicity(cycles).values())


def verify_trichotomy(
    d: Digraph,
    xs: Collection[int],
    k: int,
    result: OddCyclePacking | OddPathPacking | WalkCover,
) -> bool:
    if isinstance(result, WalkCover):
        return len(result.vertices) <= 4 * k - 1 and not odd_x_walk_exists(
            d, xs, result.vertices
        )
    if isinstance(result, OddCyclePacking):
        return verify_cycle_packing(d, result, k)
    paths = result.paths
    ends = [v for p in paths for v in (p.start, p.end)]
    return (
        len(paths) == k
        and all(p.is_path() and is_odd_x_walk(d, xs, p) for p in paths)
        and len(set(ends)) == len(ends)
        and all(c <= 2 for c in multiplicity(paths).values())
    )


# -- blue intervals ----------------------------------------------------------


def blue_intervals(path: Walk, red: Collection[int]) -> list[Walk]:
    """Split a path at its red vertices into red-to-red pieces with blue interiors."""
    red = set(red)
    if path.start not in red or path.end not in red:
        raise ValueError("both endpoints must be red")
    cuts = [i for i, v in enumerate(path.vertices) if v in red]
    return [
        Walk(path.vertices[i : j + 1]) for i, j in zip(cuts, cuts[1:])
    ]
