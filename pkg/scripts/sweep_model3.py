#!/usr/bin/env python3
"""Grid search of Model 3 over (r, t) and a look at the neighbourhood of the best point.

Usage: python scripts/sweep_model3.py [--checkpoints 100,1000,10000,100000] [--loss sum_abs]
"""

import argparse
from collections import Counter

from partition_primes.calibrate import LOSSES, best_fit, sweep
from partition_primes.models import ModelContext


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--checkpoints", default="100,1000,10000,100000")
    ap.add_argument("--loss", choices=LOSSES, default="sum_abs")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    checkpoints = [int(c) for c in args.checkpoints.split(",")]

    r_values = range(0, 21)
    t_values = [round(0.01 * k, 2) for k in range(101)]
    result = sweep(r_values, t_values, checkpoints, loss=args.loss, context=ModelContext(), jobs=args.jobs)
    r, t = best_fit(result)
    best = result.losses[result.grid.index((r, t))]
    print(f"best (r, t) = ({r:g}, {t:g}) with {args.loss} = {best:g}")

    ties = [p for p, loss in zip(result.grid, result.losses) if loss == best]
    print(f"{len(ties)} grid points share that loss; r values among them: {sorted(Counter(p[0] for p in ties))}")
    ref = result.losses[result.grid.index((6.0, 0.11))]
    print(f"loss at (6, 0.11): {ref:g}")
    for (pr, pt), rows in zip(result.grid, result.rows):
        if (pr, pt) in {(r, t), (6.0, 0.11)}:
            print(f"  ({pr:g}, {pt:g}) errors:", [row.error for row in rows])


if __name__ == "__main__":
    main()
