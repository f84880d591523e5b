#!/usr/bin/env python3
"""Separation distance decay for repeated shuffles.

Runs a shuffle for k = 1..passes on a small deck, convolving exact
distributions, and prints the separation distance next to the closed
upper bound C(n,2) * (sum of squared pile probabilities)^k.  The ratio
column shows how loose the bound is at each step.

Example:
    python3 scripts/mixing_report.py --model riffle --q 1/2,1/2 --n 5 --passes 8
    python3 scripts/mixing_report.py --model abg --alpha 3/4 --gamma 1/4 --n 4
"""

import argparse
from dataclasses import dataclass, replace
from fractions import Fraction

from shufflelab import (
    abg_shuffle,
    convolve,
    exact_distribution,
    riffle_shuffle,
    separation_bound,
    separation_distance,
)
from shufflelab.poly import as_fraction


@dataclass(frozen=True)
class Config:
    model: str
    q: tuple
    alpha: tuple
    gamma: Fraction
    n: int
    passes: int


def parse_args() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--model", choices=("riffle", "abg"), default="riffle")
    ap.add_argument("--q", default="1/2,1/2", help="riffle pile probabilities")
    ap.add_argument("--alpha", default="1/2", help="abg upright pile probabilities")
    ap.add_argument("--gamma", default="1/2", help="abg mixed pile probability")
    ap.add_argument("--n", type=int, default=4, help="deck size")
    ap.add_argument("--passes", type=int, default=8)
    args = ap.parse_args()
    return Config(
        model=args.model,
        q=tuple(as_fraction(v) for v in args.q.split(",")),
        alpha=tuple(as_fraction(v) for v in args.alpha.split(",") if v),
        gamma=as_fraction(args.gamma),
        n=args.n,
        passes=args.passes,
    )


def main() -> int:
    cfg = parse_args()
    if cfg.model == "riffle":
        base = riffle_shuffle(cfg.q)
    else:
        base = abg_shuffle(alpha=cfg.alpha, gamma=cfg.gamma)

    single = exact_distribution(base, cfg.n)
    print(f"model={cfg.model} n={cfg.n}")
    print(f"{'k':>3} {'separation':>16} {'bound':>16} {'ratio':>10}")
    current = None
    for k in range(1, cfg.passes + 1):
        current = single if current is None else convolve(single, current)
        sep = separation_distance(current)
        bound = separation_bound(replace(base, iterations=k), cfg.n)
        ratio = float(sep / bound) if bound else float("nan")
        print(f"{k:>3} {str(sep):>16} {str(bound):>16} {ratio:>10.4f}")
        if sep == 0:
            print("exactly uniform; stopping early")
            break
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
