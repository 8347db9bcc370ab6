"""How often each branch of the odd X-walk dichotomy fires on random digraphs.

    python scripts/dichotomy_sweep.py --samples 2000 --seed 3
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from oddcycles.gadgets import WalkPacking, odd_x_walk_dichotomy, verify_dichotomy
from oddcycles.instances import random_digraph


@dataclass(frozen=True)
class SweepConfig:
    samples: int = 1000
    seed: int = 0
    max_n: int = 8
    densities: tuple[float, ...] = (0.1, 0.2, 0.3, 0.5)
    ls: tuple[int, ...] = (1, 2, 3, 4)


def run(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.samples):
        n = rng.randint(2, cfg.max_n)
        p = rng.choice(cfg.densities)
        g = random_digraph(n, p, rng)
        xs = rng.sample(range(n), rng.randint(1, n))
        l = rng.choice(cfg.ls)
        result = odd_x_walk_dichotomy(g, xs, l)
        if not verify_dichotomy(g, xs, l, result):
            raise AssertionError(f"unverified result on n={n}, X={xs}, l={l}")
        branch = "packing" if isinstance(result, WalkPacking) else "cover"
        tally[(p, l, branch)] += 1
    return tally


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=SweepConfig.samples)
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    parser.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    args = parser.parse_args()
    cfg = SweepConfig(samples=args.samples, seed=args.seed, max_n=args.max_n)
    tally = run(cfg)
    print("p\tl\tpacking\tcover")
    for p in cfg.densities:
        for l in cfg.ls:
            print(f"{p}\t{l}\t{tally[(p, l, 'packing')]}\t{tally[(p, l, 'cover')]}")


if __name__ == "__main__":
    main()
