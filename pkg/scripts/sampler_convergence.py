#!/usr/bin/env python3
"""Empirical convergence of the seeded samplers to the exact law.

Draws growing batches from one shuffle spec and reports the worst
absolute deviation between observed frequencies and exact probabilities,
plus the largest deviation measured in binomial standard errors.  Useful
as a quick sanity run after touching any sampler code path.
"""

import argparse
from dataclasses import dataclass

from shufflelab import (
    abg_shuffle,
    empirical_distribution,
    exact_distribution,
    riffle_shuffle,
    sample_permutations,
    typec_shuffle,
)
from shufflelab.poly import as_fraction


@dataclass(frozen=True)
class Config:
    model: str
    params: str
    n: int
    seed: int
    batches: tuple


def build_spec(cfg: Config):
    vals = tuple(as_fraction(v) for v in cfg.params.split(",") if v)
    if cfg.model == "riffle":
        return riffle_shuffle(vals)
    if cfg.model == "typec":
        return typec_shuffle(vals)
    return abg_shuffle(alpha=vals[:-1], gamma=vals[-1])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--model", choices=("riffle", "typec", "abg"), default="riffle")
    ap.add_argument("--params", default="1/2,1/2")
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument(
        "--batches", default="1000,10000,100000",
        help="comma separated sample counts",
    )
    args = ap.parse_args()
    cfg = Config(
        model=args.model, params=args.params, n=args.n, seed=args.seed,
        batches=tuple(int(b) for b in args.batches.split(",")),
    )

    spec = build_spec(cfg)
    exact = exact_distribution(spec, cfg.n)
    print(f"model={cfg.model} params={cfg.params} n={cfg.n} seed={cfg.seed}")
    print(f"{'samples':>9} {'max |dev|':>12} {'max sigmas':>12}")
    for count in cfg.batches:
        freq = empirical_distribution(
            sample_permutations(spec, cfg.n, count, seed=cfg.seed)
        )
        worst = 0.0
        worst_sigmas = 0.0
        for w, p in exact.weights.items():
            pf = float(p)
            dev = abs(float(freq.get(w, 0)) - pf)
            sigma = (pf * (1 - pf) / count) ** 0.5
            worst = max(worst, dev)
            if sigma:
                worst_sigmas = max(worst_sigmas, dev / sigma)
        print(f"{count:>9} {worst:>12.6f} {worst_sigmas:>12.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
