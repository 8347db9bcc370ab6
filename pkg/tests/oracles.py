"""Brute-force reference implementations.

None of these call into the package's algorithms; they only read the
``Digraph`` adjacency.  Exponential on purpose.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from oddcycles.graph import Digraph


def all_cycles(g: Digraph) -> list[tuple[int, ...]]:
    """Every simple directed cycle once, as a sequence starting at its minimum."""
    found = []

    def extend(path: list[int], on_path: set[int]) -> None:
        for w in g.out_adj[path[-1]]:
            if w == path[0] and len(path) >= 2:
                found.append(tuple(path))
            elif w > path[0] and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for s in range(g.n):
        extend([s], {s})
    return sorted(found, key=lambda c: (len(c), c))


def odd_cycles(g: Digraph) -> list[tuple[int, ...]]:
    return [c for c in all_cycles(g) if len(c) % 2 == 1]


def has_odd_closed_walk(g: Digraph, removed=()) -> bool:
    """Odd closed walk through some vertex, by reachability in the parity double cover."""
    removed = set(removed)
    for v in range(g.n):
        if v in removed:
            continue
        seen = {(v, 0)}
        todo = [(v, 0)]
        while todo:
            u, p = todo.pop()
            for w in g.out_adj[u]:
                if w in removed or (w, 1 - p) in seen:
                    continue
                seen.add((w, 1 - p))
                todo.append((w, 1 - p))
        if (v, 1) in seen:
            return True
    return False


def odd_x_walk_by_lengths(g: Digraph, xs, removed=()) -> bool:
    """Is there an odd X-walk in g - removed?  Dynamic programme over lengths.

    A shortest odd X-walk visits each (vertex, parity) state at most once, so
    lengths up to 2n + 1 suffice.
    """
    xs, removed = set(xs) - set(removed), set(removed)
    for x in xs:
        frontier = {x}
        for length in range(1, 2 * g.n + 2):
            nxt = set()
            for u in frontier:
                if length > 1 and u in xs:
                    continue  # X vertices end a walk
                for w in g.out_adj[u]:
                    if w not in removed:
                        nxt.add(w)
            if length % 2 == 1 and nxt & xs:
                return True
            frontier = nxt
            if not frontier:
                break
    return False


def reaches(g: Digraph, sources, sinks, removed) -> bool:
    removed = set(removed)
    start = [v for v in sources if v not in removed]
    targets = set(sinks) - removed
    seen = set(start)
    todo = deque(start)
    while todo:
        u = todo.popleft()
        if u in targets:
            return True
        for w in g.out_adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                todo.append(w)
    return False


def min_vertex_cut(g: Digraph, sources, sinks, removed=()) -> int:
    """Fewest vertices whose deletion leaves no A-to-B path."""
    removed = set(removed)
    live = [v for v in range(g.n) if v not in removed]
    for size in range(len(live) + 1):
        for cut in itertools.combinations(live, size):
            if not reaches(g, sources, sinks, removed | set(cut)):
                return size
    raise AssertionError("unreachable")


def min_odd_cycle_transversal(g: Digraph) -> int:
    for size in range(g.n + 1):
        for ys in itertools.combinations(range(g.n), size):
            if not has_odd_closed_walk(g, ys):
                return size
    raise AssertionError("unreachable")


def nu2_by_milp(g: Digraph) -> int:
    """Half-integral packing number as a 0/1 programme over all odd cycles."""
    cycles = odd_cycles(g)
    if not cycles:
        return 0
    a = np.zeros((g.n, len(cycles)))
    for j, c in enumerate(cycles):
        for v in c:
            a[v, j] = 1
    res = milp(
        c=-np.ones(len(cycles)),
        constraints=LinearConstraint(a, ub=2 * np.ones(g.n)),
        integrality=np.ones(len(cycles)),
        bounds=Bounds(0, 1),
    )
    return int(round(-res.fun))


def random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    return Digraph.from_edges(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def dichotomy_corpus(seed: int = 1, count: int = 500):
    """(D, X, l) triples: n <= 6, p in {0.2, 0.4}, |X| in 2..4, l in {1, 2, 3}."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 6)
        g = random_digraph(n, rng.choice((0.2, 0.4)), rng)
        xs = tuple(sorted(rng.sample(range(n), rng.randint(2, min(4, n)))))
        yield g, xs, rng.choice((1, 2, 3))


def all_digraphs(n: int):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(pairs)):
        yield Digraph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
