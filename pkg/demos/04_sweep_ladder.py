#!/usr/bin/env python3
"""
Highest and average cut as a function of trial length.

Runs one full campaign per sweep budget on a fixed torus and prints
the resulting curve, the standard way to show how solution quality
saturates as trials get longer. Greedy local search has a strict
budget-prefix guarantee (same seed, longer budget, never worse), so
its highest-cut curve is non-decreasing by construction; annealing
re-stretches its cooling schedule to the budget, so its curve is only
statistically increasing.

Run:
    python demos/04_sweep_ladder.py [--csv out.csv]
"""

import argparse
import io
import sys

from gsetbench.campaign import CampaignConfig, sweep_scan, write_scan_csv
from gsetbench.instances import TorusSpec, generate_torus
from gsetbench.solvers import ANNEALING, GREEDY, default_config

LADDER = (1, 3, 10, 30, 100)
TRIALS = 30


def run_ladder(torus, kind):
    config = CampaignConfig(
        instance_name=torus.name,
        solver=default_config(kind, sweeps=1, seed=0),
        num_trials=TRIALS,
        master_seed=1414,
        sweep_scan=LADDER,
    )
    return sweep_scan(torus, config, workers=4)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", default=None, help="write the annealing curve as CSV")
    args = parser.parse_args(argv)

    torus = generate_torus(TorusSpec(8, 8, seed=7))
    print(f"instance {torus.name}: n={torus.n} m={torus.m}, "
          f"{TRIALS} trials per ladder rung\n")

    curves = {}
    for kind in (GREEDY, ANNEALING):
        rows = run_ladder(torus, kind)
        curves[kind] = rows
        print(kind)
        for row in rows:
            bar = "*" * int(row.average_cut)
            print(f"  {row.sweeps:>5} sweeps: highest {row.highest_cut:>3} "
                  f"average {row.average_cut:>6.2f} {bar}")
        print()

    greedy_highs = [row.highest_cut for row in curves[GREEDY]]
    assert greedy_highs == sorted(greedy_highs), "greedy prefix guarantee violated"
    print(f"greedy highest-cut curve is non-decreasing: {greedy_highs}")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_scan_csv(curves[ANNEALING], fh)
        print(f"wrote {args.csv}")
    else:
        buf = io.StringIO()
        write_scan_csv(curves[ANNEALING], buf)
        print("annealing curve as CSV:\n" + buf.getvalue())


if __name__ == "__main__":
    sys.exit(main())
