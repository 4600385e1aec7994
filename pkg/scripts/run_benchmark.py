#!/usr/bin/env python3
"""Reproduce the bundled worked examples and run the seeded benchmark.

Usage:
    python scripts/run_benchmark.py [--count N] [--seed S] [--out sim.csv]
"""

import argparse
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from qtspectral.bounds import Caps
from qtspectral.cli import main as cli_main

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def run():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=135)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out", default="sim.csv")
    args = ap.parse_args()

    for name in ("example1.json", "example2.json"):
        path = os.path.join(DATA, name)
        print(f"== bounds for {name} ==")
        cli_main(["bounds", path, "--s", "2"])
        print()

    print(f"== benchmark: {args.count} random ternary codes, seed {args.seed} ==")
    cli_main(["simulate", "--count", str(args.count), "--seed", str(args.seed),
              "--out", args.out])
    print(f"rows written to {args.out}")


if __name__ == "__main__":
    run()
