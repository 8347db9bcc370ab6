"""Tabulate the parity counterexample family: size, odd cycles, nu2, tau.

    python scripts/counterexample_growth.py --max-n 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from oddcycles.graph import enumerate_cycles
from oddcycles.structure import BudgetExceeded, nu2_exact, tau_exact
from oddcycles.walls import generate_parity_counterexample


@dataclass(frozen=True)
class GrowthConfig:
    min_n: int = 2
    max_n: int = 4
    cycle_budget: int = 20_000  # nu2 is skipped above this many odd cycles


def run(cfg: GrowthConfig) -> list[dict]:
    rows = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        g = generate_parity_counterexample(n)
        start = time.perf_counter()
        count = sum(1 for _ in enumerate_cycles(g, odd_only=True))
        tau = tau_exact(g)[0]
        try:
            nu2 = nu2_exact(g, cycle_budget=cfg.cycle_budget)[0]
        except BudgetExceeded:
            nu2 = None
        rows.append(
            {
                "n": n,
                "vertices": g.n,
                "edges": g.m,
                "odd_cycles": count,
                "tau": tau,
                "nu2": nu2,
                "seconds": round(time.perf_counter() - start, 2),
            }
        )
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=GrowthConfig.min_n)
    parser.add_argument("--max-n", type=int, default=GrowthConfig.max_n)
    parser.add_argument("--cycle-budget", type=int, default=GrowthConfig.cycle_budget)
    args = parser.parse_args()
    cfg = GrowthConfig(args.min_n, args.max_n, args.cycle_budget)
    header = ("n", "vertices", "edges", "odd_cycles", "tau", "nu2", "seconds")
    print("\t".join(header))
    for row in run(cfg):
        print("\t".join("-" if row[h] is None else str(row[h]) for h in header))


if __name__ == "__main__":
    main()
