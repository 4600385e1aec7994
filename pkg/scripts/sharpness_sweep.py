#!/usr/bin/env python3
"""Sweep random codes and report how often each bound is sharp.

Usage:
    python scripts/sharpness_sweep.py [--count N] [--seed S] [--s S]
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from qtspectral.bounds import Caps
from qtspectral.cli import simulate_rows, summarize


def run():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--s", type=int, default=2)
    args = ap.parse_args()

    rows = simulate_rows(q=3, m=4, ell_range=(2, 4), r_range=(1, 4),
                         count=args.count, seed=args.seed, s=args.s,
                         lam_value=2, caps=Caps())
    summary = summarize(rows, 4)
    print(f"codes: {summary['rows']}  nontrivial: {summary['nontrivial']}")
    for name, label in (("jensen", "Jensen"), ("spec1", "spectral s=1"),
                        (("specS"), f"generalized s={args.s}")):
        print(f"{label:>18}: sharp {summary['sharp_' + name]:3d}"
              f"  best {summary['best_' + name]:3d}")


if __name__ == "__main__":
    run()
