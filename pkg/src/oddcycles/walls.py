"""Cylindrical walls: generation, validation, nails and subwalls.

A wall always carries its coordinates.  Nothing in this package tries to
recognise a wall inside a bare digraph; walls are produced by the generators
here (or loaded from a sidecar written by them) and only ever validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Digraph, Walk, underlying_bipartition


@dataclass(frozen=True)
class Wall:
    host: Digraph
    columns: tuple[tuple[int, ...], ...]  # open cycle sequences, each from C_i n P_1
    rows: tuple[tuple[int, ...], ...]
    coords: dict[int, tuple[int, int, int]] = field(compare=False)  # 1-based (i, j, position)
    nails: tuple[int, ...] = field(compare=False)
    certifying_paths: tuple[Walk, ...] = field(compare=False, repr=False)
    colour: dict[int, int] | None = field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.columns)

    def vertices(self) -> set[int]:
        return {v for c in self.columns for v in c} | {v for r in self.rows for v in r}

    def edges(self) -> set[tuple[int, int]]:
        return wall_edges(self.columns, self.rows)

    def subgraph(self) -> Digraph:
        return Digraph.from_edges(self.host.n, self.edges())

    def column_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.columns, start=1) for v in c}

    def row_of(self) -> dict[int, int]:
        return {v: j for j, r in enumerate(self.rows, start=1) for v in r}

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        if self.colour is None:
            return None
        side0 = tuple(sorted(v for v, c in self.colour.items() if c == 0))
        side1 = tuple(sorted(v for v, c in self.colour.items() if c == 1))
        return side0, side1


def wall_edges(columns: Sequence[Sequence[int]], rows: Sequence[Sequence[int]]) -> set[tuple[int, int]]:
    edges = set()
    for c in columns:
        edges.update(zip(c, list(c[1:]) + [c[0]]))
    for r in rows:
        edges.update(zip(r, r[1:]))
    return edges


def _intersections(columns, rows) -> dict[int, tuple[int, int, int]]:
    col = {v: i for i, c in enumerate(columns, start=1) for v in c}
    coords = {}
    for j, r in enumerate(rows, start=1):
        pos: dict[int, int] = {}
        for v in r:
            if v in col:
                i = col[v]
                pos[i] = pos.get(i, 0) + 1
                coords[v] = (i, j, pos[i])
    return coords


def _nails(edges: set[tuple[int, int]]) -> set[int]:
    indeg: dict[int, int] = {}
    outdeg: dict[int, int] = {}
    for u, v in edges:
        outdeg[u] = outdeg.get(u, 0) + 1
        indeg[v] = indeg.get(v, 0) + 1
    return {v for v in set(indeg) | set(outdeg) if indeg.get(v, 0) == 2 or outdeg.get(v, 0) == 2}


def _certifying_paths(edges: set[tuple[int, int]], nails: set[int]) -> list[Walk]:
    succ: dict[int, list[int]] = {}
    for u, v in sorted(edges):
        succ.setdefault(u, []).append(v)
    paths = []
    for a in sorted(nails):
        for nxt in succ.get(a, []):
            seq = [a, nxt]
            while seq[-1] not in nails:
                options = succ.get(seq[-1], [])
                if len(options) != 1 or options[0] in seq[1:]:
                    break
                seq.append(options[0])
            if seq[-1] in nails:
                paths.append(Walk(tuple(seq)))
    return paths


def build_wall(
    host: Digraph,
    columns: Sequence[Sequence[int]],
    rows: Sequence[Sequence[int]],
) -> Wall:
    """Assemble a Wall, deriving coordinates, nails, certifying paths and colouring."""
    columns = tuple(tuple(c) for c in columns)
    rows = tuple(tuple(r) for r in rows)
    edges = wall_edges(columns, rows)
    nails = _nails(edges)
    sub = Digraph.from_edges(host.n, edges)
    verts = {v for c in columns for v in c} | {v for r in rows for v in r}
    parts = underlying_bipartition(sub, verts)
    colour = None
    if parts is not None:
        colour = {v: 0 for v in parts[0]} | {v: 1 for v in parts[1]}
    return Wall(
        host=host,
        columns=columns,
        rows=rows,
        coords=_intersections(columns, rows),
        nails=tuple(sorted(nails)),
        certifying_paths=tuple(_certifying_paths(edges, nails)),
        colour=colour,
    )


def canonical_vertex(w: int, i: int, j: int, s: int) -> int:
    """Id of the s-th vertex (s in {1, 2}) of C_i n P_j in the canonical wall."""
    return ((i - 1) * 2 * w + (j - 1)) * 2 + (s - 1)


def generate_cylindrical_wall(w: int) -> tuple[Digraph, Wall]:
    """Canonical cylindrical wall of order w; every C_i n P_j is one edge.

    Columns run P_1 -> P_2w -> P_1; odd rows run C_1 -> C_w, even rows back.
    With these directions the underlying graph is bipartite without any
    subdivision, which is asserted rather than assumed.
    """
    if w < 2:
        raise ValueError(f"wall order must be at least 2, got {w}")
    vid = lambda i, j, s: canonical_vertex(w, i, j, s)  # noqa: E731
    columns = [
        [vid(i, j, s) for j in range(1, 2 * w + 1) for s in (1, 2)]
        for i in range(1, w + 1)
    ]
    rows = []
    for j in range(1, 2 * w + 1):
        order = range(1, w + 1) if j % 2 == 1 else range(w, 0, -1)
        rows.append([vid(i, j, s) for i in order for s in (1, 2)])
    host = Digraph.from_edges(4 * w * w, wall_edges(columns, rows))
    wall = build_wall(host, columns, rows)
    if wall.colour is None:  # pragma: no cover - guaranteed by the layout
        raise AssertionError("canonical wall is not bipartite")
    return host, wall


def wall_violations(g: Digraph, wall: Wall) -> list[str]:
    """Every failed condition of the cylindrical-wall definition, as text."""
    bad: list[str] = []
    cols, rows = wall.columns, wall.rows
    w = len(cols)
    if w < 1:
        return ["no columns"]
    if len(rows) != 2 * w:
        bad.append(f"expected {2 * w} rows, got {len(rows)}")
    seen: set[int] = set()
    for i, c in enumerate(cols, start=1):
        if len(c) < 2 or len(set(c)) != len(c):
            bad.append(f"column {i} is not a cycle")
            continue
        if not all(g.has_edge(a, b) for a, b in zip(c, c[1:] + c[:1])):
            bad.append(f"column {i} uses a missing edge")
        if seen & set(c):
            bad.append(f"column {i} meets another column")
        seen |= set(c)
    seen = set()
    for j, r in enumerate(rows, start=1):
        if len(set(r)) != len(r):
            bad.append(f"row {j} repeats a vertex")
        if not all(g.has_edge(a, b) for a, b in zip(r, r[1:])):
            bad.append(f"row {j} uses a missing edge")
        if seen & set(r):
            bad.append(f"row {j} meets another row")
        seen |= set(r)
    if bad:
        return bad

    col_edges = [set(zip(c, c[1:] + c[:1])) for c in cols]
    col_of = {v: i for i, c in enumerate(cols, start=1) for v in c}
    for j, r in enumerate(rows, start=1):
        row_edges = set(zip(r, r[1:]))
        for i, c in enumerate(cols, start=1):
            common = [p for p, v in enumerate(r) if col_of.get(v) == i]
            shared = row_edges & col_edges[i - 1]
            contiguous = bool(common) and common == list(range(common[0], common[-1] + 1))
            if not (
                contiguous
                and len(common) >= 2
                and len(shared) == len(common) - 1
                and all((r[p], r[p + 1]) in shared for p in common[:-1])
            ):
                bad.append(f"C_{i} n P_{j} is not a directed path with an edge")
        ends = set(cols[0]) | set(cols[-1])
        if r[0] not in ends or r[-1] not in ends:
            bad.append(f"row {j} does not end on C_1 or C_{w}")
    if bad:
        return bad

    row_of = {v: j for j, r in enumerate(rows, start=1) for v in r}
    for i, c in enumerate(cols, start=1):
        starts = [p for p, v in enumerate(c) if row_of.get(v) == 1 and row_of.get(c[p - 1]) != 1]
        if len(starts) != 1:
            bad.append(f"C_{i} n P_1 is not a single segment")
            continue
        p0 = starts[0]
        labels = [row_of[v] for v in c[p0:] + c[:p0] if v in row_of]
        if labels != sorted(labels) or sorted(set(labels)) != list(range(1, 2 * w + 1)):
            bad.append(f"rows are out of order on C_{i}")
    for j, r in enumerate(rows, start=1):
        labels = [col_of[v] for v in r if v in col_of]
        want = sorted(labels) if j % 2 == 1 else sorted(labels, reverse=True)
        if labels != want or sorted(set(labels)) != list(range(1, w + 1)):
            bad.append(f"columns are out of order on P_{j}")

    edges = wall_edges(cols, rows)
    nails = _nails(edges)
    if set(wall.nails) != nails:
        bad.append("stored nails differ from vertices of in- or out-degree 2")
    certifying = {p.vertices for p in _certifying_paths(edges, nails)}
    if {p.vertices for p in wall.certifying_paths} != certifying:
        bad.append("stored certifying paths differ from the nail-to-nail paths")
    if any(p.length < 1 or set(p.interior()) & nails for p in wall.certifying_paths):
        bad.append("a certifying path is empty or passes through a nail")
    if wall.coords != _intersections(cols, rows):
        bad.append("coordinate index is stale")
    if wall.colour is not None:
        if any(wall.colour.get(a) == wall.colour.get(b) for a, b in edges):
            bad.append("stored bipartition is not a proper colouring")
    return bad


def validate_wall(g: Digraph, wall: Wall) -> bool:
    return not wall_violations(g, wall)


def nail_labels(wall: Wall) -> dict[int, tuple[int, int, int]]:
    """Label each nail (column, row, slot); slots count nails of C_i n P_j
    in the order C_i is traversed from P_1."""
    nails = set(wall.nails)
    labels = {}
    for i, c in enumerate(wall.columns, start=1):
        slot: dict[int, int] = {}
        for v in c:
            if v not in nails:
                continue
            if v not in wall.coords:
                raise ValueError(f"nail {v} lies on no row-column intersection")
            _, j, _ = wall.coords[v]
            slot[j] = slot.get(j, 0) + 1
            labels[v] = (i, j, slot[j])
    missing = nails - set(labels)
    if missing:
        raise ValueError(f"nails off every column: {sorted(missing)}")
    return labels


def _row_span(row: Sequence[int], col_of: dict[int, int], first: int, last: int) -> tuple[int, ...]:
    """Subpath of a row from its entry into ``first`` to its exit from ``last``."""
    pos_first = [p for p, v in enumerate(row) if col_of.get(v) == first]
    pos_last = [p for p, v in enumerate(row) if col_of.get(v) == last]
    return tuple(row[min(pos_first) : max(pos_last) + 1])


def disjoint_subwalls(wall: Wall, k: int) -> list[Wall]:
    """k vertex-disjoint subwalls on consecutive column blocks.

    Block b keeps columns ``b*q+1 .. (b+1)*q`` with ``q = order // k`` and the
    segments of the first 2q rows between its outer columns.
    """
    if k < 1:
        raise ValueError("k must be positive")
    q = wall.order // k
    if q < 2:
        raise ValueError(f"order {wall.order} too small for {k} subwalls of order >= 2")
    col_of = wall.column_of()
    result = []
    for b in range(k):
        first, last = b * q + 1, (b + 1) * q
        columns = wall.columns[first - 1 : last]
        rows = []
        for j, row in enumerate(wall.rows[: 2 * q], start=1):
            if j % 2 == 1:
                rows.append(_row_span(row, col_of, first, last))
            else:
                rows.append(_row_span(row, col_of, last, first))
        result.append(build_wall(wall.host, columns, rows))
    return result


# -- the parity counterexample family ----------------------------------------


@dataclass(frozen=True)
class CounterexampleLayout:
    columns: int
    rows: int
    grid: dict[tuple[int, int], int]  # (x, y) -> vertex, y = rows - 1 is the top
    gadgets: tuple[tuple[int, int, int], ...]


def counterexample_layout(n: int) -> CounterexampleLayout:
    if n < 2:
        raise ValueError(f"counterexample size must be at least 2, got {n}")
    width, height = 2 * n, 2 * n + 1
    grid = {(x, y): y * width + x for y in range(height) for x in range(width)}
    count = (n + 1) // 2
    gadgets = []
    nxt = width * height
    for g in range(count):
        gadgets.append((nxt, nxt + 1, nxt + 2))
        nxt += 3
    return CounterexampleLayout(width, height, grid, tuple(gadgets))


def generate_parity_counterexample(n: int, with_gadgets: bool = True) -> Digraph:
    """Cylinder grid whose top row carries length-4 detours around single edges.

    ``2n`` alternating-direction columns (even x upwards, odd x downwards)
    cross ``2n + 1`` rows, each row a directed cycle around the cylinder.
    ``ceil(n / 2)`` three-vertex gadgets run parallel to a top-row edge
    ``x -> x+1`` (x even) as a path of length 4.  Every directed cycle winds
    around the cylinder and every odd one uses a gadget; for n <= 4 no two
    odd cycles are disjoint (checked exhaustively in the tests).
    """
    lay = counterexample_layout(n)
    width, height, grid = lay.columns, lay.rows, lay.grid
    edges = []
    for y in range(height):
        for x in range(width):
            edges.append((grid[(x, y)], grid[((x + 1) % width, y)]))
    for x in range(width):
        for y in range(height - 1):
            lo, hi = grid[(x, y)], grid[(x, y + 1)]
            edges.append((lo, hi) if x % 2 == 0 else (hi, lo))
    n_vertices = width * height
    if with_gadgets:
        top = height - 1
        for g, (a, b, c) in enumerate(lay.gadgets):
            x = 2 * ((g * width // 2) // len(lay.gadgets))
            left, right = grid[(x, top)], grid[(x + 1, top)]
            edges += [(left, a), (a, b), (b, c), (c, right)]
        n_vertices += 3 * len(lay.gadgets)
    return Digraph.from_edges(n_vertices, edges)
