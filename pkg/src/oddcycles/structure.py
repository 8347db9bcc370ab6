"""Structural certificates, the hitting-set assembly, rerouting, exact oracles."""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Collection, Iterable, Mapping, Sequence

import numpy as np
from scipy import sparse
from scipy.optimize import linprog

from .gadgets import WalkCover, WalkPacking, verify_dichotomy
from .graph import (
    Digraph,
    Walk,
    cycle_walk,
    enumerate_cycles,
    extract_odd_cycle_from_closed_odd_walk,
    find_directed_odd_cycle,
    has_directed_odd_cycle,
    is_strongly_connected,
    multiplicity,
    normalize_cycle,
    odd_x_walk_exists,
    scc,
)
from .linkage import Linkage, Separation, max_vertex_disjoint_paths, verify_separation
from .walls import Wall


class BudgetExceeded(RuntimeError):
    pass


class InstanceTooLarge(BudgetExceeded):
    pass


class HypothesisError(ValueError):
    """A precondition that the caller vouched for turned out false."""

    def __init__(self, reason: str, witness: Walk | None = None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class RerouteError(ValueError):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class CertificateError(RuntimeError):
    pass


# -- certificates ------------------------------------------------------------


KINDS = (
    "packing",
    "cover",
    "separation",
    "well-linked-violation",
    "linked-violation",
    "enumeration",
)


@dataclass(frozen=True)
class Certificate:
    """Checkable evidence about one digraph.

    ``witnesses`` holds cycles as open vertex sequences, walks and paths as
    full sequences, and a cover or separator as a single sequence.  ``extra``
    carries whatever else ``verify`` needs (the walk set, ``l``, the
    separation sides).  Build through :func:`certify`, which refuses to return
    anything that fails verification.
    """

    kind: str
    subject: str
    value: int
    witnesses: tuple[tuple[int, ...], ...]
    bound: int = 2
    vertex_set: tuple[int, ...] | None = None
    extra: Mapping[str, Any] = field(default_factory=dict)
    verified: bool = False

    def verify(self, g: Digraph) -> bool:
        check = _CHECKS.get(self.kind)
        return bool(check and check(self, g))


def certify(g: Digraph, **fields: Any) -> Certificate:
    cert = Certificate(**fields)
    if cert.kind not in KINDS:
        raise CertificateError(f"unknown certificate kind {cert.kind!r}")
    if not cert.verify(g):
        raise CertificateError(f"{cert.kind} certificate for {cert.subject} failed verification")
    return Certificate(**{**fields, "verified": True})


def _odd_cycle_family_ok(g: Digraph, cycles: Sequence[tuple[int, ...]], bound: int) -> bool:
    walks = [cycle_walk(c) for c in cycles]
    return (
        len({normalize_cycle(c) for c in cycles}) == len(cycles)
        and all(w.is_cycle() and w.parity == 1 and w.is_walk_in(g) for w in walks)
        and all(c <= bound for c in multiplicity(walks).values())
    )


def _check_packing(cert: Certificate, g: Digraph) -> bool:
    if cert.subject == "dichotomy":
        walks = WalkPacking(tuple(Walk(w) for w in cert.witnesses))
        return verify_dichotomy(g, cert.vertex_set or (), cert.extra["l"], walks)
    if len(cert.witnesses) != cert.value:
        return False
    return _odd_cycle_family_ok(g, cert.witnesses, cert.bound)


def _check_cover(cert: Certificate, g: Digraph) -> bool:
    if len(cert.witnesses) != 1:
        return False
    (ys,) = cert.witnesses
    if cert.subject == "dichotomy":
        return verify_dichotomy(g, cert.vertex_set or (), cert.extra["l"], WalkCover(ys))
    return len(set(ys)) == cert.value and not has_directed_odd_cycle(g, removed=ys)


def _check_separation(cert: Certificate, g: Digraph) -> bool:
    sep = Separation(frozenset(cert.extra["source_side"]), frozenset(cert.extra["sink_side"]))
    removed = cert.extra.get("removed", ())
    return (
        verify_separation(g, sep, cert.extra["sources"], cert.extra["sinks"], removed)
        and sep.order == cert.value
        and tuple(sorted(sep.separator)) == tuple(cert.witnesses[0])
    )


def _check_well_linked_violation(cert: Certificate, g: Digraph) -> bool:
    a, b = cert.extra["a"], cert.extra["b"]
    tail, head = (a, b) if cert.extra["direction"] == "forward" else (b, a)
    removed = set(cert.vertex_set or ()) - set(a) - set(b)
    sep = Separation(frozenset(cert.extra["source_side"]), frozenset(cert.extra["sink_side"]))
    return (
        len(a) == len(b)
        and verify_separation(g, sep, tail, head, removed)
        and sep.order < len(a)
        and sep.order == cert.value
    )


def _check_linked_violation(cert: Certificate, g: Digraph) -> bool:
    (xs,) = cert.witnesses
    return len(xs) < cert.extra["k"] and majority_component(g, cert.vertex_set or (), xs) is None


def _check_enumeration(cert: Certificate, g: Digraph) -> bool:
    if not _odd_cycle_family_ok(g, cert.witnesses, bound=len(cert.witnesses) or 1):
        return False
    if cert.extra.get("truncated"):
        return len(cert.witnesses) == cert.value
    return cert.value == len(cert.witnesses) == sum(1 for _ in enumerate_cycles(g, odd_only=True))


_CHECKS = {
    "packing": _check_packing,
    "cover": _check_cover,
    "separation": _check_separation,
    "well-linked-violation": _check_well_linked_violation,
    "linked-violation": _check_linked_violation,
    "enumeration": _check_enumeration,
}


# -- well-linked and k-linked sets ------------------------------------------


def _pairs(ts: Sequence[int], r: int, mode: str) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    top = len(ts) // 2 if mode == "disjoint" else len(ts)
    for size in range(r, top + 1):
        for a in itertools.combinations(ts, size):
            rest = [v for v in ts if v not in a] if mode == "disjoint" else ts
            for b in itertools.combinations(rest, size):
                yield a, b


def _sampled_pairs(ts: Sequence[int], r: int, mode: str, samples: int, seed: int):
    rng = random.Random(seed)
    top = len(ts) // 2 if mode == "disjoint" else len(ts)
    if top < r:
        return
    for _ in range(samples):
        size = rng.randint(r, top)
        a = tuple(sorted(rng.sample(ts, size)))
        pool = [v for v in ts if v not in a] if mode == "disjoint" else list(ts)
        b = tuple(sorted(rng.sample(pool, size)))
        yield a, b


def is_r_well_linked(
    g: Digraph,
    ts: Collection[int],
    r: int,
    mode: str = "disjoint",
    exhaustive_limit: int = 12,
    samples: int = 500,
    seed: int = 0,
) -> bool | Certificate:
    """True, or a violation certificate naming (A, B) and a small separation.

    Every pair is checked when ``|T| <= exhaustive_limit``; otherwise
    ``samples`` random pairs drawn with ``seed``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if mode not in ("disjoint", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    ts = sorted(set(ts))
    if len(ts) <= exhaustive_limit:
        pairs = _pairs(ts, r, mode)
    else:
        pairs = _sampled_pairs(ts, r, mode, samples, seed)
    for a, b in pairs:
        removed = set(ts) - set(a) - set(b)
        for direction, tail, head in (("forward", a, b), ("backward", b, a)):
            link, sep = max_vertex_disjoint_paths(g, tail, head, removed)
            if link.order < len(a):
                return certify(
                    g,
                    kind="well-linked-violation",
                    subject="well-linked",
                    value=sep.order,
                    witnesses=(tuple(sorted(sep.separator)),),
                    vertex_set=tuple(ts),
                    extra={
                        "a": a,
                        "b": b,
                        "direction": direction,
                        "r": r,
                        "source_side": tuple(sorted(sep.source_side)),
                        "sink_side": tuple(sorted(sep.sink_side)),
                    },
                )
    return True


def find_well_linked_violation(
    g: Digraph, ts: Collection[int], r: int, mode: str = "disjoint"
) -> Certificate | None:
    result = is_r_well_linked(g, ts, r, mode)
    return None if result is True else result


def majority_component(
    g: Digraph, s: Collection[int], removed: Collection[int] = ()
) -> tuple[int, ...] | None:
    """The strong component of ``g - removed`` holding more than |S|/2 of S."""
    s = set(s)
    part = scc(g, removed)
    counts: dict[int, int] = {}
    for v in s:
        c = part.component[v]
        if c >= 0:
            counts[c] = counts.get(c, 0) + 1
    for c, count in counts.items():
        if 2 * count > len(s):
            return part.components[c]
    return None


def _small_sets(n: int, k: int, exhaustive: bool, samples: int, seed: int):
    if exhaustive:
        for size in range(k):
            yield from itertools.combinations(range(n), size)
        return
    rng = random.Random(seed)
    yield ()
    for _ in range(samples):
        yield tuple(sorted(rng.sample(range(n), rng.randint(1, min(k - 1, n)))))


def is_k_linked(
    g: Digraph,
    s: Collection[int],
    k: int,
    samples: int = 2000,
    seed: int = 0,
) -> bool | Certificate:
    """True iff every X with |X| < k leaves a strong component holding more
    than half of S; exhaustive for k <= 4 and n <= 14, sampled otherwise."""
    if k < 1:
        raise ValueError("k must be positive")
    s = sorted(set(s))
    exhaustive = k <= 4 and g.n <= 14
    for xs in _small_sets(g.n, k, exhaustive, samples, seed):
        if majority_component(g, s, xs) is None:
            return certify(
                g,
                kind="linked-violation",
                subject="k-linked",
                value=len(xs),
                witnesses=(tuple(xs),),
                vertex_set=tuple(s),
                extra={"k": k},
            )
    return True


@dataclass(frozen=True)
class Bramble:
    elements: tuple[frozenset[int], ...]
    strongly_connected: tuple[bool, ...]
    order_lower: int | None = None
    order_upper: int | None = None

    def touching(self, g: Digraph) -> bool:
        for b1, b2 in itertools.combinations(self.elements, 2):
            if b1 & b2:
                continue
            forward = any(v in b2 for u in b1 for v in g.out_adj[u])
            backward = any(v in b1 for u in b2 for v in g.out_adj[u])
            if not (forward and backward):
                return False
        return True

    def is_cover(self, ys: Collection[int]) -> bool:
        ys = set(ys)
        return all(b & ys for b in self.elements)


def bramble_from_linked_set(g: Digraph, ts: Collection[int], f: int) -> Bramble:
    """Majority components C_X over all |X| < f; T covers them and no set of
    fewer than f vertices does, since C_Y avoids Y."""
    ts = sorted(set(ts))
    if is_k_linked(g, ts, f) is not True:
        raise ValueError(f"T is not {f}-linked")
    seen: dict[frozenset[int], None] = {}
    for size in range(f):
        for xs in itertools.combinations(range(g.n), size):
            comp = majority_component(g, ts, xs)
            if comp is None:  # pragma: no cover - excluded by the linkedness check
                raise ValueError(f"no majority component after removing {xs}")
            seen.setdefault(frozenset(comp), None)
    elements = tuple(seen)
    flags = tuple(is_strongly_connected(g, b) for b in elements)
    return Bramble(elements, flags, order_lower=f, order_upper=len(ts))


# -- local step for minimum transversals -----------------------------------


@dataclass(frozen=True)
class LocalStep:
    m_x: tuple[int, ...]  # minimum transversal of G - X
    m_y: tuple[int, ...]  # minimum transversal of G - Y
    assembled: tuple[int, ...]
    is_transversal: bool


def well_linked_local_step(g: Digraph, violation: Certificate) -> LocalStep:
    """Assemble M_X u M_Y u (X n Y) from a disjoint-mode violation."""
    x = set(violation.extra["source_side"])
    y = set(violation.extra["sink_side"])
    removed = set(violation.vertex_set or ()) - set(violation.extra["a"]) - set(violation.extra["b"])
    # the separation lives in G - Z; Z sits on both sides
    x |= removed
    y |= removed
    m_x = tau_exact(_without(g, x))[1].witnesses[0]
    m_y = tau_exact(_without(g, y))[1].witnesses[0]
    assembled = tuple(sorted(set(m_x) | set(m_y) | (x & y)))
    return LocalStep(
        tuple(m_x), tuple(m_y), assembled, not has_directed_odd_cycle(g, removed=assembled)
    )


def _without(g: Digraph, removed: Collection[int]) -> Digraph:
    removed = set(removed)
    return Digraph.from_edges(
        g.n, [(u, v) for u, v in g.edges if u not in removed and v not in removed]
    )


# -- the hitting-set assembly ------------------------------------------------


@dataclass(frozen=True)
class HittingSet:
    vertices: tuple[int, ...]
    majority: tuple[int, ...]
    flags: Mapping[str, bool]


def hitting_set_from_walk_cover(
    g: Digraph,
    ts: Collection[int],
    wall: Wall | None,
    nails: Collection[int],
    xs: Collection[int],
    t: int,
) -> HittingSet:
    """(T - V(H_x)) u X where H_x is the strong component of G - X holding
    most of T.  H_x has no odd cycle, otherwise two nails in it would be
    joined by walks of both parities."""
    ts, xs, nails = set(ts), set(xs), set(nails)
    if len(xs) >= t:
        raise ValueError(f"|X| = {len(xs)} is not below t = {t}")
    if odd_x_walk_exists(g, nails, xs):
        raise ValueError("X does not cover every odd N-walk")
    flags = {"t_is_transversal": not has_directed_odd_cycle(g, removed=ts)}
    if wall is not None:
        colour = wall.colour or {}
        flags["nails_on_wall"] = nails <= set(wall.nails)
        flags["nails_one_side"] = len({colour.get(v) for v in nails}) <= 1
    if not flags["t_is_transversal"]:
        raise HypothesisError("t-not-transversal")
    comp = majority_component(g, ts, xs)
    if comp is None:
        raise HypothesisError("no-majority-component")
    inside = set(comp)
    cycle = find_directed_odd_cycle(g, removed=set(range(g.n)) - inside)
    if cycle is not None:
        raise HypothesisError("hx-contains-odd-cycle", cycle)
    out = tuple(sorted((ts - inside) | xs))
    if has_directed_odd_cycle(g, removed=out):  # pragma: no cover - follows from the above
        raise AssertionError("assembled set misses an odd cycle")
    return HittingSet(out, tuple(sorted(comp)), flags)


# -- rerouting inside a reserved window -------------------------------------


@dataclass(frozen=True)
class ReservedRegion:
    """Columns ``first_column .. first_column + 2k - 1`` and rows
    ``first_row .. first_row + 4k - 1`` (1-based)."""

    first_column: int
    first_row: int
    k: int

    def column_ids(self) -> range:
        return range(self.first_column, self.first_column + 2 * self.k)

    def row_ids(self) -> range:
        return range(self.first_row, self.first_row + 4 * self.k)


def _row_window(wall: Wall, j: int, cols: range) -> tuple[int, ...]:
    row = wall.rows[j - 1]
    col_of = wall.column_of()
    pos = [p for p, v in enumerate(row) if col_of.get(v) in cols]
    return row[min(pos) : max(pos) + 1]


def _lines_through(wall: Wall, v: int, region: ReservedRegion) -> set[int]:
    out: set[int] = set()
    col_of, row_of = wall.column_of(), wall.row_of()
    if v in col_of and col_of[v] in region.column_ids():
        out |= set(wall.columns[col_of[v] - 1])
    if v in row_of and row_of[v] in region.row_ids():
        out |= set(_row_window(wall, row_of[v], region.column_ids()))
    return out


def reroute_to_odd_cycles(wall: Wall, region: ReservedRegion, linkage: Linkage) -> Certificate:
    """Close each parity-breaking path through the reserved window.

    Path i may use columns ``z+i`` and ``z+k+i``, rows ``y+2i-1, y+2i,
    y+2k+2i-1, y+2k+2i`` of the window, and the window lines through its own
    endpoints.  The closing path lies in the bipartite wall, so the closed
    walk is odd exactly because the path it closes is parity-breaking.
    """
    k = region.k
    g = wall.host
    colour = wall.colour
    if colour is None:
        raise ValueError("rerouting needs a bipartite wall")
    if linkage.order != k:
        raise ValueError(f"expected {k} paths, got {linkage.order}")
    z, y = region.first_column - 1, region.first_row - 1
    if z < 0 or y < 0 or z + 2 * k > wall.order or y + 4 * k > len(wall.rows):
        raise RerouteError("reserved-region-conflict", "window exceeds the wall")
    cols = region.column_ids()
    window = {v for i in cols for v in wall.columns[i - 1]}
    for j in region.row_ids():
        window |= set(_row_window(wall, j, cols))
    interiors = {v for p in linkage.paths for v in p.interior()}
    if interiors & window:
        raise RerouteError("reserved-region-conflict", "a path interior enters the window")
    wall_edges = wall.edges()
    cycles = []
    for i, p in enumerate(linkage.paths, start=1):
        if p.start not in window or p.end not in window:
            raise RerouteError("endpoint-off-W*", f"path {i}")
        if p.parity == (colour[p.start] ^ colour[p.end]):
            raise ValueError(f"path {i} is parity-preserving")
        allowed = set(wall.columns[z + i - 1]) | set(wall.columns[z + k + i - 1])
        for j in (y + 2 * i - 1, y + 2 * i, y + 2 * k + 2 * i - 1, y + 2 * k + 2 * i):
            allowed |= set(_row_window(wall, j, cols))
        allowed |= _lines_through(wall, p.start, region) | _lines_through(wall, p.end, region)
        allowed -= interiors
        closing = _bfs_path(wall_edges, p.end, p.start, allowed)
        if closing is None:
            raise RerouteError("reserved-region-conflict", f"no closing path for path {i}")
        closed = Walk(p.vertices + closing[1:])
        cycles.append(extract_odd_cycle_from_closed_odd_walk(closed))
    witnesses = tuple(c.vertices[:-1] for c in cycles)
    if any(c > 2 for c in multiplicity(cycles).values()):
        raise RerouteError("reserved-region-conflict", "a vertex lies on three cycles")
    return certify(
        g, kind="packing", subject="reroute", value=k, witnesses=witnesses, bound=2
    )


def _bfs_path(
    edges: set[tuple[int, int]], source: int, target: int, allowed: set[int]
) -> tuple[int, ...] | None:
    succ: dict[int, list[int]] = {}
    for u, v in sorted(edges):
        if u in allowed and v in allowed:
            succ.setdefault(u, []).append(v)
    prev = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for v in succ.get(u, []):
            if v not in prev:
                prev[v] = u
                queue.append(v)
    if target not in prev:
        return None
    seq = [target]
    while seq[-1] != source:
        seq.append(prev[seq[-1]])
    return tuple(reversed(seq))


# -- exact oracles -----------------------------------------------------------


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple[tuple[int, ...], ...]
    truncated: bool


def enumerate_directed_odd_cycles(g: Digraph, limit: int | None = None) -> CycleEnumeration:
    """All directed odd cycles, min-vertex-first, sorted by (length, sequence)."""
    found = []
    for c in enumerate_cycles(g, odd_only=True):
        if limit is not None and len(found) >= limit:
            return CycleEnumeration(tuple(sorted(found, key=lambda c: (len(c), c))), True)
        found.append(normalize_cycle(c))
    return CycleEnumeration(tuple(sorted(found, key=lambda c: (len(c), c))), False)


def _lp_bound(
    cycles: Sequence[tuple[int, ...]], cands: Sequence[int], cap: Sequence[int]
) -> tuple[float, list[float]]:
    """Fractional relaxation over ``cands``: max sum x, sum over cycles through v <= cap[v]."""
    rows, cols = [], []
    for j, idx in enumerate(cands):
        for v in cycles[idx]:
            rows.append(v)
            cols.append(j)
    a_ub = sparse.csr_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(len(cap), len(cands))
    )
    res = linprog(
        -np.ones(len(cands)), A_ub=a_ub, b_ub=np.asarray(cap, float), bounds=(0, 1), method="highs"
    )
    if res.status != 0:  # pragma: no cover - the zero vector is always feasible
        raise RuntimeError(f"LP relaxation failed: {res.message}")
    return -res.fun, list(res.x)


def nu2_exact(
    g: Digraph, cycle_budget: int = 100_000, node_budget: int = 100_000
) -> tuple[int, Certificate]:
    """Largest family of distinct directed odd cycles using each vertex at most twice.

    Branch and bound over the enumerated cycles, ordered by (length,
    sequence).  Each node solves the fractional relaxation; a node whose
    relaxation cannot beat the incumbent is closed, an integral relaxation is
    taken as is, otherwise the most fractional-heavy cycle is first forced in,
    then forbidden.
    """
    enum = enumerate_directed_odd_cycles(g, limit=cycle_budget)
    if enum.truncated:
        raise BudgetExceeded(f"more than {cycle_budget} directed odd cycles")
    cycles = enum.cycles
    cap = [2] * g.n
    best: list[int] = []
    chosen: list[int] = []
    nodes = 0

    def fits(idx: int) -> bool:
        return all(cap[v] > 0 for v in cycles[idx])

    def search(cands: list[int]) -> None:
        nonlocal nodes, best
        while True:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(f"search exceeded {node_budget} nodes")
            if len(chosen) > len(best):
                best = list(chosen)
            if not cands:
                return
            value, x = _lp_bound(cycles, cands, cap)
            if len(chosen) + math.floor(value + 1e-6) <= len(best):
                return
            if all(min(xi, 1 - xi) < 1e-6 for xi in x):
                picked = [idx for idx, xi in zip(cands, x) if xi > 0.5]
                if len(chosen) + len(picked) > len(best):
                    best = chosen + picked
                return
            # ties go to the earliest cycle in (length, sequence) order
            j = max(range(len(cands)), key=lambda i: (x[i] if x[i] < 1 - 1e-6 else -1, -i))
            idx = cands[j]
            for v in cycles[idx]:
                cap[v] -= 1
            chosen.append(idx)
            search([i for i in cands if i != idx and fits(i)])
            chosen.pop()
            for v in cycles[idx]:
                cap[v] += 1
            cands = cands[:j] + cands[j + 1 :]

    search(list(range(len(cycles))))
    witnesses = tuple(cycles[i] for i in sorted(best))
    cert = certify(
        g,
        kind="packing",
        subject="nu2",
        value=len(witnesses),
        witnesses=witnesses,
        bound=2,
        extra={"search_nodes": nodes, "cycles": len(cycles)},
    )
    return len(witnesses), cert


def _transversal_of_size(
    g: Digraph, size: int, budget: list[int]
) -> tuple[int, ...] | None:
    def search(removed: set[int], frozen: set[int], left: int) -> tuple[int, ...] | None:
        budget[0] -= 1
        if budget[0] < 0:
            raise InstanceTooLarge("transversal search exceeded its node budget")
        cycle = find_directed_odd_cycle(g, removed=removed)
        if cycle is None:
            return tuple(sorted(removed))
        if left == 0:
            return None
        # branch i deletes the i-th vertex and keeps the earlier ones
        kept = set(frozen)
        for v in cycle.vertices[:-1]:
            if v in kept:
                continue
            found = search(removed | {v}, set(kept), left - 1)
            if found is not None:
                return found
            kept.add(v)
        return None

    return search(set(), set(), size)


def tau_exact(g: Digraph, node_budget: int = 500_000) -> tuple[int, Certificate]:
    """Minimum odd-cycle transversal by iterative deepening over odd-cycle branching."""
    budget = [node_budget]
    for size in range(g.n + 1):
        found = _transversal_of_size(g, size, budget)
        if found is not None:
            cert = certify(
                g,
                kind="cover",
                subject="tau",
                value=len(found),
                witnesses=(found,),
                bound=1,
                extra={"lower_bound_by_exhaustion": size},
            )
            return len(found), cert
    raise AssertionError("V(G) is always a transversal")  # pragma: no cover


def cycles_certificate(g: Digraph, limit: int | None = None) -> Certificate:
    enum = enumerate_directed_odd_cycles(g, limit)
    return certify(
        g,
        kind="enumeration",
        subject="cycles",
        value=len(enum.cycles),
        witnesses=enum.cycles,
        bound=max(1, len(enum.cycles)),
        extra={"truncated": enum.truncated},
    )
