"""Text edge-list graphs, certificate and wall JSON, DOT export."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import __version__
from .graph import Digraph, GraphError
from .structure import Certificate
from .walls import Wall, build_wall


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class GraphDocument:
    graph: Digraph
    sets: dict[str, tuple[int, ...]] = field(default_factory=dict)


def parse_graph(text: str) -> GraphDocument:
    """Parse ``p digraph n m`` / ``e t h`` / ``s name v...`` lines; ``c`` lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    sets: dict[str, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if header is not None:
                    raise FormatError("second header line")
                if len(parts) != 4 or parts[1] != "digraph":
                    raise FormatError("header must read 'p digraph <n> <m>'")
                header = (int(parts[2]), int(parts[3]))
            elif header is None:
                raise FormatError("header line must come first")
            elif tag == "e":
                if len(parts) != 3:
                    raise FormatError("edge line must read 'e <tail> <head>'")
                edges.append((int(parts[1]), int(parts[2])))
            elif tag == "s":
                if len(parts) < 2:
                    raise FormatError("set line needs a name")
                name = parts[1]
                if name in sets:
                    raise FormatError(f"set {name!r} defined twice")
                sets[name] = tuple(int(v) for v in parts[2:])
            else:
                raise FormatError(f"unknown line type {tag!r}")
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if header is None:
        raise FormatError("missing header line")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, body has {len(edges)}")
    if len(set(edges)) != m:
        raise FormatError("duplicate edge")
    try:
        g = Digraph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    for name, vs in sets.items():
        bad = [v for v in vs if not 0 <= v < n]
        if bad:
            raise FormatError(f"set {name!r} has out-of-range ids {bad}")
    return GraphDocument(g, sets)


def render_graph(g: Digraph, sets: Mapping[str, Sequence[int]] | None = None) -> str:
    lines = [f"p digraph {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    for name in sorted(sets or {}):
        lines.append(" ".join(["s", name, *map(str, (sets or {})[name])]))
    return "\n".join(lines) + "\n"


def input_hash(g: Digraph) -> str:
    return hashlib.sha256(render_graph(g).encode()).hexdigest()


# -- certificates ------------------------------------------------------------


def certificate_to_json(cert: Certificate, g: Digraph) -> dict:
    return {
        "kind": cert.kind,
        "subject": cert.subject,
        "k_or_value": cert.value,
        "witnesses": [list(w) for w in cert.witnesses],
        "set": None if cert.vertex_set is None else list(cert.vertex_set),
        "multiplicity_bound": cert.bound,
        "extra": _jsonable(dict(cert.extra)),
        "verified": cert.verified,
        "tool_version": __version__,
        "input_hash": input_hash(g),
    }


def dump_certificate(cert: Certificate, g: Digraph) -> str:
    return json.dumps(certificate_to_json(cert, g), indent=2, sort_keys=True) + "\n"


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return value


def _tupled(value):
    if isinstance(value, list):
        return tuple(_tupled(v) for v in value)
    if isinstance(value, dict):
        return {k: _tupled(v) for k, v in value.items()}
    return value


def load_certificate(text: str, g: Digraph) -> Certificate:
    """Parse and re-verify; a certificate for another graph or one that no
    longer verifies is rejected."""
    try:
        data = json.loads(text)
        if data["input_hash"] != input_hash(g):
            raise FormatError("certificate was issued for a different graph")
        cert = Certificate(
            kind=data["kind"],
            subject=data["subject"],
            value=int(data["k_or_value"]),
            witnesses=tuple(tuple(w) for w in data["witnesses"]),
            bound=int(data["multiplicity_bound"]),
            vertex_set=None if data["set"] is None else tuple(data["set"]),
            extra=_tupled(data.get("extra", {})),
        )
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from None
    if not cert.verify(g):
        raise FormatError("certificate does not verify against the graph")
    return Certificate(**{**cert.__dict__, "verified": True})


# -- wall sidecar ------------------------------------------------------------


def wall_to_json(wall: Wall) -> dict:
    parts = wall.bipartition()
    return {
        "order": wall.order,
        "columns": [list(c) for c in wall.columns],
        "rows": [list(r) for r in wall.rows],
        "coordinates": [[v, *wall.coords[v]] for v in sorted(wall.coords)],
        "nails": list(wall.nails),
        "bipartition": None if parts is None else [list(p) for p in parts],
    }


def dump_wall(wall: Wall) -> str:
    return json.dumps(wall_to_json(wall), indent=2, sort_keys=True) + "\n"


def load_wall(text: str, g: Digraph) -> Wall:
    try:
        data = json.loads(text)
        wall = build_wall(g, data["columns"], data["rows"])
        stored = {v: (i, j, s) for v, i, j, s in data["coordinates"]}
        nails = tuple(data["nails"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed wall sidecar: {exc}") from None
    if stored != wall.coords or nails != wall.nails or data["order"] != wall.order:
        raise FormatError("wall sidecar disagrees with its own columns and rows")
    return wall


# -- DOT ---------------------------------------------------------------------

_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


def render_dot(
    g: Digraph, highlight: Certificate | None = None, wall: Wall | None = None
) -> str:
    """Deterministic DOT text: nodes and edges in id order, attributes sorted."""
    node_attr: dict[int, dict[str, str]] = {v: {} for v in range(g.n)}
    edge_attr: dict[tuple[int, int], dict[str, str]] = {e: {} for e in g.edges}
    if wall is not None:
        for c in wall.columns:
            for e in zip(c, c[1:] + c[:1]):
                edge_attr[e].update(color="gray40", penwidth="2", **{"class": "column"})
        for r in wall.rows:
            for e in zip(r, r[1:]):
                edge_attr[e].setdefault("class", "row")
        for v in wall.nails:
            node_attr[v]["shape"] = "doublecircle"
    if highlight is not None:
        if highlight.kind == "cover" or highlight.kind.endswith("violation"):
            for v in highlight.witnesses[0] if highlight.witnesses else ():
                node_attr[v].update(style="filled", fillcolor="red")
        else:
            for idx, w in enumerate(highlight.witnesses):
                colour = _PALETTE[idx % len(_PALETTE)]
                seq = list(w)
                closing = [(seq[-1], seq[0])] if highlight.subject != "dichotomy" else []
                for e in list(zip(seq, seq[1:])) + closing:
                    if e in edge_attr:
                        edge_attr[e].update(color=colour, penwidth="3")
    lines = ["digraph G {", "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f"  {v}{_attrs(node_attr[v])};")
    for e in g.edges:
        lines.append(f"  {e[0]} -> {e[1]}{_attrs(edge_attr[e])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _attrs(attr: Mapping[str, str]) -> str:
    if not attr:
        return ""
    return " [" + ", ".join(f'{k}="{attr[k]}"' for k in sorted(attr)) + "]"
