"""Expanding parity-breaking connections through a bipartite wall.

Given linkages ``Q`` (A to B) and ``R`` (C to D) inside a bipartite wall and
a half-integral family ``U`` of parity-breaking B-to-C paths, build the
auxiliary digraph ``F1`` in which walk parity records parity-breaking-ness:

* every edge of ``Q`` and ``R`` is subdivided once (always even),
* every piece of a ``U`` path between consecutive vertices of ``V(Q) u V(R)``
  becomes a single edge when it is parity-breaking and a subdivided edge when
  it is parity-preserving,
* sources get a pendant pair ``q1 -> q2 -> a`` and sinks ``d -> r2 -> r1``.

Odd ``A1``-to-``D1`` walks of ``F1`` are then exactly the parity-breaking
A-to-D walks.  The odd-walk gadget on ``F1`` turns the m walks into a
(1/t)-integral path family, from which an integral linkage of order 2k is
extracted; each of those 2k odd walks yields an odd cycle or an odd path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .gadgets import (
    OddCyclePacking,
    build_parity_gadget,
    pick_distinct_cycles,
    shorten_to_odd_x_path,
    verify_cycle_packing,
)
from .graph import (
    Digraph,
    Walk,
    extract_odd_cycle_from_closed_odd_walk,
    find_directed_odd_cycle,
    has_directed_odd_cycle,
    multiplicity,
)
from .linkage import Linkage, fractional_to_integral_linkage, verify_linkage


@dataclass(frozen=True)
class ParityBreakingLinkage:
    paths: tuple[Walk, ...]


def is_parity_breaking(colour: Mapping[int, int], walk: Walk) -> bool:
    return walk.parity != (colour[walk.start] ^ colour[walk.end])


class _Builder:
    def __init__(self) -> None:
        self.ids: dict[tuple, int] = {}
        self.labels: list[tuple] = []
        self.edges: set[tuple[int, int]] = set()

    def node(self, label: tuple) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.labels)
            self.labels.append(label)
        return self.ids[label]

    def edge(self, a: tuple, b: tuple) -> None:
        self.edges.add((self.node(a), self.node(b)))

    def digraph(self) -> Digraph:
        return Digraph.from_edges(len(self.labels), self.edges)


def _segments(path: Walk, split: set[int]) -> list[tuple[int, ...]]:
    cuts = [i for i, v in enumerate(path.vertices) if v in split]
    return [path.vertices[i : j + 1] for i, j in zip(cuts, cuts[1:])]


def expand_half_integral(
    g: Digraph,
    colour: Mapping[int, int],
    q: Linkage,
    r: Linkage,
    u: Linkage,
    k: int,
) -> OddCyclePacking | ParityBreakingLinkage:
    """Half-integral k odd cycles, or k parity-breaking A-to-D paths in Q u R u U.

    ``colour`` is the wall bipartition (0/1 per wall vertex).  ``q`` and ``r``
    are integral linkages inside the wall, ``u`` a (bound <= 2) family of
    parity-breaking paths from ``q.sinks`` to ``r.sources``.
    """
    m = u.order
    if k < 1:
        raise ValueError("k must be positive")
    if m < 8 * k:
        raise ValueError(f"need at least 8k = {8 * k} parity-breaking paths, got {m}")
    if u.bound > 2 or not _is_family(g, u):
        raise ValueError("U must be a half-integral family of B-to-C paths")
    for link in (q, r):
        if link.bound != 1 or not verify_linkage(g, link):
            raise ValueError("Q and R must be integral linkages")
        for p in link.paths:
            if any(v not in colour for v in p.vertices):
                raise ValueError("Q and R must lie inside the wall")
            if any(colour[a] == colour[b] for a, b in p.edges()):
                raise ValueError("wall colouring is not proper along Q or R")
    if q.order < m or r.order < m:
        raise ValueError("Q and R need order m")
    ends_q = {p.end: p for p in q.paths}
    starts_r = {p.start: p for p in r.paths}
    for p in u.paths:
        if p.start not in ends_q or p.end not in starts_r:
            raise ValueError("every U path must run from B to C")
        if not is_parity_breaking(colour, p):
            raise ValueError(f"U path {p.vertices} is parity-preserving")

    split = {v for link in (q, r) for p in link.paths for v in p.vertices}
    f1 = _Builder()
    for link in (q, r):
        for p in link.paths:
            f1.node(("g", p.start))
            for a, b in p.edges():
                f1.edge(("g", a), ("x", a, b))
                f1.edge(("x", a, b), ("g", b))
    direct: dict[tuple[int, int], tuple[int, ...]] = {}
    detour: dict[tuple[int, int], tuple[int, ...]] = {}
    for p in u.paths:
        for seg in _segments(p, split):
            a, b = seg[0], seg[-1]
            if is_parity_breaking(colour, Walk(seg)):
                direct.setdefault((a, b), seg)
                f1.edge(("g", a), ("g", b))
            else:
                detour.setdefault((a, b), seg)
                f1.edge(("g", a), ("z", a, b))
                f1.edge(("z", a, b), ("g", b))
    for a in sorted(q.sources):
        f1.edge(("q1", a), ("q2", a))
        f1.edge(("q2", a), ("g", a))
    for dd in sorted(r.sinks):
        f1.edge(("g", dd), ("r2", dd))
        f1.edge(("r2", dd), ("r1", dd))
    f1_graph = f1.digraph()
    labels = f1.labels

    def trace(vertices: tuple[int, ...]) -> list[int]:
        out: list[int] = []
        for a, b in zip(vertices, vertices[1:]):
            out.append(f1.ids[("g", a)])
            out.append(f1.ids[("x", a, b)])
        out.append(f1.ids[("g", vertices[-1])])
        return out

    walks = []
    for p in u.paths:
        qp, rp = ends_q[p.start], starts_r[p.end]
        seq = [f1.ids[("q1", qp.start)], f1.ids[("q2", qp.start)]]
        seq += trace(qp.vertices)[:-1]
        for seg in _segments(p, split):
            a, b = seg[0], seg[-1]
            seq.append(f1.ids[("g", a)])
            if not is_parity_breaking(colour, Walk(seg)):
                seq.append(f1.ids[("z", a, b)])
        seq += trace(rp.vertices)
        seq += [f1.ids[("r2", rp.end)], f1.ids[("r1", rp.end)]]
        walk = Walk(tuple(seq))
        assert walk.is_walk_in(f1_graph) and walk.parity == 1
        walks.append(walk)

    a1 = [f1.ids[("q1", a)] for a in sorted(q.sources)]
    d1 = [f1.ids[("r1", dd)] for dd in sorted(r.sinks)]
    gadget = build_parity_gadget(f1_graph, a1 + d1)
    a2 = frozenset(gadget.image[(v, "A")] for v in a1)
    d2 = frozenset(gadget.image[(v, "B")] for v in d1)
    lifted = tuple(_drop_loops(gadget.lift(w)) for w in walks)
    bound = max(multiplicity(lifted).values())
    family = Linkage(lifted, a2, d2, bound=bound)
    if m < 2 * k * bound:
        raise ValueError(
            f"lifted family has multiplicity {bound}; {m} paths cannot give {2 * k} disjoint ones"
        )
    integral = fractional_to_integral_linkage(gadget.digraph, family, 2 * k)
    odd_walks = [gadget.project(p) for p in integral.paths]

    cyclic, acyclic = [], []
    for w in odd_walks:
        h = Digraph.from_edges(f1_graph.n, w.edges())
        (cyclic if has_directed_odd_cycle(h) else acyclic).append(w)

    def to_g(seq: tuple[int, ...]) -> list[int]:
        out: list[int] = []
        for i, node in enumerate(seq):
            label = labels[node]
            if label[0] == "g":
                out.append(label[1])
                if i + 1 < len(seq) and labels[seq[i + 1]][0] == "g":
                    out.extend(direct[(label[1], labels[seq[i + 1]][1])][1:-1])
            elif label[0] == "z":
                out.extend(detour[(label[1], label[2])][1:-1])
        return out

    if len(cyclic) >= k:
        f1_cycles = pick_distinct_cycles(f1_graph.n, cyclic, k)
        distinct = f1_cycles is not None
        if f1_cycles is None:
            f1_cycles = [
                find_directed_odd_cycle(Digraph.from_edges(f1_graph.n, w.edges()))
                for w in cyclic[:k]
            ]
        cycles = []
        for c in f1_cycles:
            # start at a wall vertex so the contracted pieces close up
            body = c.vertices[:-1]
            i = next(j for j, node in enumerate(body) if labels[node][0] == "g")
            body = body[i:] + body[:i]
            closed = Walk(tuple(to_g(body + body[:1])))
            cycles.append(extract_odd_cycle_from_closed_odd_walk(closed))
        result: OddCyclePacking | ParityBreakingLinkage = OddCyclePacking(
            tuple(cycles), distinct=distinct and len({c.vertices for c in cycles}) == k
        )
        found = cycles
    else:
        paths = []
        for w in acyclic[:k]:
            core = shorten_to_odd_x_path(w).vertices[2:-2]
            paths.append(Walk(tuple(to_g(core))))
        result = ParityBreakingLinkage(tuple(paths))
        found = paths
    if any(c > 2 for c in multiplicity(found).values()):
        raise RuntimeError(
            "U paths overlap outside Q u R; half-integrality is lost after contraction"
        )
    return result


def _is_family(g: Digraph, u: Linkage) -> bool:
    return all(p.is_path() and p.is_walk_in(g) for p in u.paths) and all(
        c <= u.bound for c in multiplicity(u.paths).values()
    )


def _drop_loops(walk: Walk) -> Walk:
    seq: list[int] = []
    pos: dict[int, int] = {}
    for v in walk.vertices:
        if v in pos:
            for w in seq[pos[v] + 1 :]:
                del pos[w]
            del seq[pos[v] + 1 :]
            continue
        pos[v] = len(seq)
        seq.append(v)
    return Walk(tuple(seq))


def verify_expansion(
    g: Digraph,
    colour: Mapping[int, int],
    result: OddCyclePacking | ParityBreakingLinkage,
    k: int,
    sources: frozenset[int],
    sinks: frozenset[int],
) -> bool:
    if isinstance(result, OddCyclePacking):
        return verify_cycle_packing(g, result, k)
    paths = result.paths
    return (
        len(paths) == k
        and all(
            p.is_path()
            and p.is_walk_in(g)
            and p.start in sources
            and p.end in sinks
            and is_parity_breaking(colour, p)
            for p in paths
        )
        and all(c <= 2 for c in multiplicity(paths).values())
    )
