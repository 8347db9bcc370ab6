"""Small fixed digraphs, random digraphs and engineered wall instances.

Shared by the test-suite, the acceptance gate and the experiment scripts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gadgets import WalkCover, odd_x_walk_dichotomy
from .graph import Digraph, Walk, has_directed_odd_cycle
from .linkage import Linkage
from .structure import ReservedRegion, majority_component
from .walls import Wall, canonical_vertex, generate_cylindrical_wall, generate_parity_counterexample

# a, b, c, d, e = 0..4; X = {a, e}
SPLITTING_EDGES = ((0, 1), (1, 3), (1, 2), (3, 0), (3, 4), (2, 3))
SPLITTING_X = (0, 4)


def splitting_example() -> tuple[Digraph, tuple[int, ...]]:
    return Digraph.from_edges(5, SPLITTING_EDGES), SPLITTING_X


def cycle(n: int) -> Digraph:
    return Digraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def bidirected_complete(n: int) -> Digraph:
    return Digraph.from_edges(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph.from_edges(n, edges)


def named_graphs() -> dict[str, Digraph]:
    """The fixed corpus used for the end-to-end dichotomy checks."""
    graphs = {
        "empty": Digraph.from_edges(3, []),
        "triangle": cycle(3),
        "four-cycle": cycle(4),
        "five-cycle": cycle(5),
        "two-triangles": Digraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]),
        "bowtie": Digraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
        "bidirected-triangle": bidirected_complete(3),
        "bidirected-k4": bidirected_complete(4),
        "splitting-example": splitting_example()[0],
        "counterexample-2": generate_parity_counterexample(2),
        "counterexample-3": generate_parity_counterexample(3),
        "wall-2": generate_cylindrical_wall(2)[0],
    }
    rng = random.Random(20240)
    for i in range(8):
        graphs[f"random-{i}"] = random_digraph(rng.randint(4, 7), rng.choice((0.25, 0.4)), rng)
    return graphs


class _Grow:
    """Appends fresh vertices to a host vertex count."""

    def __init__(self, n: int):
        self.n = n
        self.edges: list[tuple[int, int]] = []

    def fresh(self) -> int:
        self.n += 1
        return self.n - 1

    def chain(self, a: int, b: int, length: int, first: int | None = None) -> tuple[int, ...]:
        """A path a -> ... -> b with ``length`` edges through fresh vertices."""
        inner = [] if length == 1 else ([first] if first is not None else [self.fresh()])
        while len(inner) < length - 1:
            inner.append(self.fresh())
        seq = (a, *inner, b)
        self.edges.extend(zip(seq, seq[1:]))
        return seq


def _breaking_length(colour: dict[int, int], a: int, b: int, rng: random.Random) -> int:
    # same-coloured ends are joined inside the wall by even paths only
    base = 3 if colour[a] == colour[b] else 2
    return base + 2 * rng.randint(0, 1)


# -- expansion of half-integral parity-breaking connections ------------------


@dataclass(frozen=True)
class ExpansionInstance:
    g: Digraph
    wall: Wall
    colour: dict[int, int]
    q: Linkage
    r: Linkage
    u: Linkage


def expansion_instance(seed: int, m: int = 8) -> ExpansionInstance:
    """Wall of order m; Q and R are column segments, U are parity-breaking
    bridges outside the wall, some sharing a hub vertex, some looping back
    into Q (which creates an odd cycle)."""
    rng = random.Random(seed)
    w = m
    host, wall = generate_cylindrical_wall(w)
    colour = dict(wall.colour or {})
    vid = lambda i, j, s: canonical_vertex(w, i, j, s)  # noqa: E731

    def segment(i: int, lo: int, hi: int) -> Walk:
        return Walk(tuple(vid(i, j, s) for j in range(lo, hi + 1) for s in (1, 2)))

    q_lo = rng.randint(1, 2)
    q_hi = q_lo + rng.randint(1, 2)
    r_lo = q_hi + rng.randint(1, 3)
    r_hi = min(2 * w, r_lo + rng.randint(1, 2))
    q_paths = [segment(i, q_lo, q_hi) for i in range(1, m + 1)]
    r_paths = [segment(i, r_lo, r_hi) for i in range(1, m + 1)]
    perm = list(range(m))
    rng.shuffle(perm)

    grow = _Grow(host.n)
    u_paths = []
    hub = None
    # "loop" bridges first return into their own Q path, closing an odd cycle
    mode = rng.choice(("direct", "loop", "mixed"))
    for i in range(m):
        b_end, c_start = q_paths[i].end, r_paths[perm[i]].start
        # pairs of bridges may share their first fresh vertex
        share = hub if (i % 2 == 1 and hub is not None) else None
        hub = None
        if mode == "loop" or (mode == "mixed" and rng.random() < 0.5):
            back = rng.choice(q_paths[i].vertices[:-1])
            first = grow.chain(b_end, back, _breaking_length(colour, b_end, back, rng))
            pres = 2 if colour[back] == colour[c_start] else 3
            second = grow.chain(back, c_start, pres + 2 * rng.randint(0, 1))
            u_paths.append(Walk(first + second[1:]))
            continue
        length = _breaking_length(colour, b_end, c_start, rng)
        seq = grow.chain(b_end, c_start, length, first=share)
        if i % 2 == 0 and rng.random() < 0.6:
            hub = seq[1]
        u_paths.append(Walk(seq))

    g = host.with_edges(grow.edges, n=grow.n)
    q = Linkage(tuple(q_paths), frozenset(p.start for p in q_paths), frozenset(p.end for p in q_paths))
    r = Linkage(tuple(r_paths), frozenset(p.start for p in r_paths), frozenset(p.end for p in r_paths))
    u = Linkage(
        tuple(u_paths),
        frozenset(p.start for p in u_paths),
        frozenset(p.end for p in u_paths),
        bound=2,
    )
    return ExpansionInstance(g, wall, colour, q, r, u)


# -- the hitting-set assembly ------------------------------------------------


@dataclass(frozen=True)
class HittingSetInstance:
    g: Digraph
    wall: Wall
    ts: tuple[int, ...]
    nails: tuple[int, ...]
    xs: tuple[int, ...]
    t: int


def hitting_set_instance(seed: int, t: int = 3) -> HittingSetInstance:
    """Bipartite wall plus an odd cycle hanging off it.

    The odd cycle is attached outward, inward or both ways; in the last case
    odd nail-walks exist and the cover X comes from the walk dichotomy.
    """
    rng = random.Random(seed)
    for attempt in range(100):
        w = rng.choice((2, 3))
        host, wall = generate_cylindrical_wall(w)
        colour = wall.colour or {}
        side = rng.randint(0, 1)
        nails = tuple(v for v in wall.nails if colour[v] == side)
        grow = _Grow(host.n)
        length = rng.choice((3, 5))
        ring = [grow.fresh() for _ in range(length)]
        grow.edges.extend(zip(ring, ring[1:] + ring[:1]))
        wall_vertices = sorted(wall.vertices())
        shape = rng.choice(("out", "in", "both"))
        if shape in ("out", "both"):
            grow.edges.append((rng.choice(wall_vertices), ring[0]))
        if shape in ("in", "both"):
            grow.edges.append((ring[rng.randrange(length)], rng.choice(wall_vertices)))
        g = host.with_edges(grow.edges, n=grow.n)
        result = odd_x_walk_dichotomy(g, nails, t)
        if not isinstance(result, WalkCover):
            continue
        spare = [v for v in wall_vertices if v not in result.vertices]
        ts = {rng.choice(ring)} | set(rng.sample(spare, rng.randint(2, 4)))
        if has_directed_odd_cycle(g, removed=ts) or majority_component(g, ts, result.vertices) is None:
            continue
        return HittingSetInstance(g, wall, tuple(sorted(ts)), nails, result.vertices, t)
    raise RuntimeError(f"no instance for seed {seed}")  # pragma: no cover


# -- rerouting through a reserved window ------------------------------------


@dataclass(frozen=True)
class RerouteInstance:
    wall: Wall
    region: ReservedRegion
    linkage: Linkage


def reroute_instance(k: int, w: int = 6, seed: int = 0) -> RerouteInstance:
    """Chords from column z+i to column z+k+i, landing below the window rows."""
    rng = random.Random(seed)
    host, wall = generate_cylindrical_wall(w)
    colour = wall.colour or {}
    z = rng.randint(0, w - 2 * k)
    y = rng.randint(1, 2 * w - 4 * k - 1)
    region = ReservedRegion(first_column=z + 1, first_row=y + 1, k=k)
    grow = _Grow(host.n)
    paths = []
    for i in range(1, k + 1):
        # endpoints on rows outside the window but on the reserved columns
        row_u = rng.choice([j for j in range(1, 2 * w + 1) if j not in region.row_ids()])
        row_v = rng.choice([j for j in range(1, 2 * w + 1) if j not in region.row_ids()])
        a = canonical_vertex(w, z + i, row_u, rng.randint(1, 2))
        b = canonical_vertex(w, z + k + i, row_v, rng.randint(1, 2))
        paths.append(Walk(grow.chain(a, b, _breaking_length(colour, a, b, rng))))
    g = host.with_edges(grow.edges, n=grow.n)
    wall = Wall(
        host=g,
        columns=wall.columns,
        rows=wall.rows,
        coords=wall.coords,
        nails=wall.nails,
        certifying_paths=wall.certifying_paths,
        colour=wall.colour,
    )
    linkage = Linkage(
        tuple(paths),
        frozenset(p.start for p in paths),
        frozenset(p.end for p in paths),
        bound=2,
    )
    return RerouteInstance(wall, region, linkage)
