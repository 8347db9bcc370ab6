"""Command-line driver.

Exit codes: 0 packing branch or success, 1 input error, 2 cover branch,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .formats import (
    FormatError,
    GraphDocument,
    certificate_to_json,
    dump_certificate,
    dump_wall,
    load_certificate,
    load_wall,
    parse_graph,
    render_dot,
    render_graph,
)
from .gadgets import WalkPacking, odd_x_walk_dichotomy
from .graph import Digraph
from .instances import random_digraph
from .structure import BudgetExceeded, Certificate, certify, cycles_certificate, nu2_exact, tau_exact
from .walls import generate_cylindrical_wall, generate_parity_counterexample

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_COVER = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _read_graph(path: str) -> GraphDocument:
    try:
        return parse_graph(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "wall":
        try:
            g, wall = generate_cylindrical_wall(args.order)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        _emit(render_graph(g), args.out)
        sidecar = args.sidecar or (str(Path(args.out).with_suffix(".wall.json")) if args.out else None)
        if sidecar:
            Path(sidecar).write_text(dump_wall(wall))
        return EXIT_OK
    if args.kind == "counterexample":
        try:
            g = generate_parity_counterexample(args.n)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        if args.n < 1 or not 0 <= args.p <= 1:
            raise InputError("random graphs need n >= 1 and 0 <= p <= 1")
        g = random_digraph(args.n, args.p, random.Random(args.seed))
    _emit(render_graph(g), args.out)
    return EXIT_OK


def cmd_dichotomy(args: argparse.Namespace) -> int:
    doc = _read_graph(args.file)
    if args.set not in doc.sets:
        raise InputError(f"set {args.set!r} is not defined in {args.file}")
    if args.l < 1:
        raise InputError("--l must be positive")
    xs = doc.sets[args.set]
    result = odd_x_walk_dichotomy(doc.graph, xs, args.l)
    packing = isinstance(result, WalkPacking)
    cert = certify(
        doc.graph,
        kind="packing" if packing else "cover",
        subject="dichotomy",
        value=args.l if packing else len(result.vertices),
        witnesses=tuple(w.vertices for w in result.walks) if packing else (result.vertices,),
        bound=2,
        vertex_set=tuple(sorted(set(xs))),
        extra={"l": args.l},
    )
    _emit(dump_certificate(cert, doc.graph), args.out)
    return EXIT_OK if packing else EXIT_COVER


def _oracle(g: Digraph, which: str, budget: int) -> Certificate:
    if which == "nu2":
        return nu2_exact(g, cycle_budget=budget)[1]
    if which == "tau":
        return tau_exact(g, node_budget=budget)[1]
    cert = cycles_certificate(g, limit=budget + 1)
    if cert.extra["truncated"]:
        raise BudgetExceeded(f"more than {budget} directed odd cycles")
    return cert


def cmd_oracle(args: argparse.Namespace) -> int:
    doc = _read_graph(args.file)
    cert = _oracle(doc.graph, args.which, args.budget)
    _emit(dump_certificate(cert, doc.graph), args.out)
    return EXIT_OK


def analyze(g: Digraph, k: int, budget: int = 100_000) -> dict:
    """Exact values and the branch this instance realises for k."""
    if k < 1:
        raise InputError("--k must be positive")
    nu2, packing = nu2_exact(g, cycle_budget=budget)
    tau, cover = tau_exact(g)
    if nu2 >= k:
        branch = "packing"
        witness = certify(
            g,
            kind="packing",
            subject="analyze",
            value=k,
            witnesses=packing.witnesses[:k],
            bound=2,
        )
    else:
        branch = "cover"
        witness = cover
    return {
        "k": k,
        "nu2": nu2,
        "tau": tau,
        "branch": branch,
        "witness": certificate_to_json(witness, g),
        "certificates": {
            "packing": certificate_to_json(packing, g),
            "cover": certificate_to_json(cover, g),
        },
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    doc = _read_graph(args.file)
    report = analyze(doc.graph, args.k, args.budget)
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK if report["branch"] == "packing" else EXIT_COVER


def cmd_export_dot(args: argparse.Namespace) -> int:
    doc = _read_graph(args.file)
    cert = wall = None
    try:
        if args.highlight:
            cert = load_certificate(Path(args.highlight).read_text(), doc.graph)
        if args.wall:
            wall = load_wall(Path(args.wall).read_text(), doc.graph)
    except OSError as exc:
        raise InputError(f"cannot read {exc.filename}: {exc.strerror}") from None
    except FormatError as exc:
        raise InputError(str(exc)) from None
    _emit(render_dot(doc.graph, cert, wall), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    doc = _read_graph(args.file)
    try:
        cert = load_certificate(Path(args.certificate).read_text(), doc.graph)
    except OSError as exc:
        raise InputError(f"cannot read {args.certificate}: {exc.strerror}") from None
    except FormatError as exc:
        raise InputError(str(exc)) from None
    print(f"{cert.kind} certificate for {cert.subject} verifies (value {cert.value})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddcycles", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for randomised commands")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated digraph")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    p = gen_sub.add_parser("wall", help="canonical cylindrical wall")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--sidecar", help="wall JSON path (default: next to --out)")
    p = gen_sub.add_parser("counterexample", help="cylinder grid with odd detours on its top row")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p = gen_sub.add_parser("random", help="seeded random digraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("dichotomy", help="l odd X-walks or a small cover")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="name of the X set in the file")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("oracle", help="exact nu2, tau or odd-cycle list")
    p.add_argument("file")
    p.add_argument("--which", choices=("nu2", "tau", "cycles"), required=True)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("analyze", help="packing of k odd cycles or exact cover")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export-dot", help="DOT rendering")
    p.add_argument("file")
    p.add_argument("--highlight", help="certificate JSON to draw")
    p.add_argument("--wall", help="wall sidecar JSON")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("verify", help="re-verify a certificate")
    p.add_argument("file")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
