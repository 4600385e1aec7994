"""Command line front end: analyze / bounds / distance / simulate.

Code specs are single JSON documents:

    {"q": 3, "m": 4, "ell": 2, "lambda": 2,
     "generators": [[[1,2,0,2], [2,1,0,1]]]}

generators is an r x ell x m array of little-endian coefficient lists.  For
prime q, lambda may be a bare integer; for prime powers it is a coefficient
list over the prime field.  Infinity serializes as the string "inf".

Exit codes: 0 success, 1 parse error, 2 budget exceeded on a required field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .bounds import (Caps, DEFAULT_MAX_SUBSET_BITS, FAMILIES, compare_all)
from .errors import (FieldError, OracleBudgetError, PoolSizeError,
                     QTSpectralError)
from .galois import field_of_order, root_setup
from .linalg import INFINITY, min_distance_from_generator
from .polyring import Polynomial
from .qtstruct import (QTCodeSpec, analyze, dimension, eigencode,
                       random_qtcode, scalar_generator_matrix)

DEFAULT_ORACLE_BUDGET = 4194304
DEFAULT_SIM_COUNT = 135

SIM_FIELDS = ("q", "m", "ell", "r", "seed", "dim", "d_true", "d_jensen",
              "d_spec1", "d_specS", "sharp_jensen", "sharp_spec1",
              "sharp_specS", "best_jensen", "best_spec1", "best_specS")


class ParseError(Exception):
    pass


def _fmt(d):
    if d is None:
        return None
    if d == INFINITY:
        return "inf"
    return int(d)


def load_spec(path: str) -> QTCodeSpec:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    for key in ("q", "m", "ell", "lambda", "generators"):
        if key not in doc:
            raise ParseError(f"{path}: missing field '{key}'")
    try:
        field = field_of_order(int(doc["q"]))
    except (FieldError, ValueError) as exc:
        raise ParseError(f"{path}: bad q: {exc}") from exc
    m, ell = int(doc["m"]), int(doc["ell"])
    lam_raw = doc["lambda"]
    try:
        if isinstance(lam_raw, int):
            lam = field.scalar(lam_raw)
        else:
            lam = field.element([int(v) for v in lam_raw])
    except (FieldError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: bad lambda: {exc}") from exc
    gens = doc["generators"]
    if not isinstance(gens, list):
        raise ParseError(f"{path}: generators must be an array")
    rows = []
    for i, row in enumerate(gens):
        if not isinstance(row, list) or len(row) != ell:
            raise ParseError(f"{path}: generators[{i}] must have {ell} entries")
        prow = []
        for j, entry in enumerate(row):
            if not isinstance(entry, list) or len(entry) != m:
                raise ParseError(
                    f"{path}: generators[{i}][{j}] must be a length-{m} list")
            try:
                if entry and isinstance(entry[0], list):
                    prow.append(Polynomial.from_coord_lists(field, entry))
                else:
                    prow.append(Polynomial.from_ints(field, [int(v) for v in entry]))
            except (FieldError, TypeError, ValueError) as exc:
                raise ParseError(
                    f"{path}: generators[{i}][{j}]: {exc}") from exc
        rows.append(tuple(prow))
    try:
        return QTCodeSpec(q_field=field, m=m, ell=ell, lam=lam,
                          generators=tuple(rows))
    except (FieldError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _caps(args) -> Caps:
    return Caps(max_subset_bits=args.max_subset_bits,
                oracle_budget=args.oracle_budget)


def cmd_analyze(args) -> int:
    spec = load_spec(args.file)
    setup, fact, gm, spect = analyze(spec)
    report = {
        "q": spec.q_field.order,
        "m": spec.m,
        "ell": spec.ell,
        "length": spec.length,
        "dimension": dimension(gm),
        "groebner": [[repr(p) for p in row] for row in gm.entries],
        "determinant": repr(gm.determinant()),
        "factors": [{"poly": repr(f.poly), "u": f.u, "degree": f.degree}
                    for f in fact.factors],
        "eigenvalues": [{"exponent": e.exponent, "multiplicity": e.multiplicity}
                        for e in spect.eigen],
    }
    codes = {}
    for raw in args.eigencode or []:
        exps = frozenset(int(t) for t in raw.split(",") if t.strip() != "")
        ec = eigencode(spect, exps)
        codes[",".join(str(k) for k in sorted(exps))] = _fmt(ec.distance)
    if codes:
        report["eigencode_distances"] = codes
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def cmd_distance(args) -> int:
    spec = load_spec(args.file)
    try:
        d = min_distance_from_generator(scalar_generator_matrix(spec),
                                        budget=args.oracle_budget)
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(json.dumps({"d_true": _fmt(d)}) + "\n", args.out)
    return 0


def _report_dict(spec: QTCodeSpec, rep) -> dict:
    return {
        "q": spec.q_field.order, "m": spec.m, "ell": spec.ell,
        "d_true": _fmt(rep.d_true),
        "d_jensen": _fmt(rep.d_jensen),
        "d_spec1": _fmt(rep.d_spec1),
        "d_specS": _fmt(rep.d_spec_s),
        "s": rep.s_used,
        "witness": [sorted(r.exponents) for r in rep.witness],
        "errors": rep.errors,
    }


def cmd_bounds(args) -> int:
    spec = load_spec(args.file)
    families = tuple(f.strip() for f in args.families.split(",") if f.strip())
    for f in families:
        if f not in FAMILIES:
            raise ParseError(f"unknown family '{f}' (choose from {','.join(FAMILIES)})")
    rep = compare_all(spec, s=args.s, caps=_caps(args),
                      with_oracle=not args.no_oracle, families=families)
    doc = _report_dict(spec, rep)
    if args.format == "csv":
        buf = io.StringIO()
        keys = [k for k in doc if k not in ("witness", "errors")]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        w.writerow([doc[k] for k in keys])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _parse_range(text: str, name: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise ParseError(f"bad {name} '{text}', expected LO:HI") from exc
    if lo > hi or lo < 1:
        raise ParseError(f"bad {name} '{text}'")
    return lo, hi


@dataclass
class SimulationRow:
    q: int
    m: int
    ell: int
    r: int
    seed: int
    dim: int
    d_true: object
    d_jensen: object
    d_spec1: object
    d_specS: object
    sharp_jensen: int
    sharp_spec1: int
    sharp_specS: int
    best_jensen: int
    best_spec1: int
    best_specS: int


def simulate_rows(q: int, m: int, ell_range, r_range, count: int, seed: int,
                  s: int, lam_value: int, caps: Caps):
    """Deterministic benchmark rows: (ell, r) pairs round robin, one random
    code per row, per-row seed derived from the master seed and row index."""
    field = field_of_order(q)
    lam = field.scalar(lam_value)
    pairs = [(ell, r) for ell in range(ell_range[0], ell_range[1] + 1)
             for r in range(r_range[0], min(r_range[1], ell) + 1)]
    if not pairs:
        raise ParseError("empty (ell, r) grid")
    rows = []
    for idx in range(count):
        ell, r = pairs[idx % len(pairs)]
        row_seed = seed * 1_000_003 + idx
        spec = random_qtcode(field, m, ell, r, row_seed, lam=lam)
        gm_dim = None
        try:
            rep = compare_all(spec, s=s, caps=caps)
        except QTSpectralError:
            rep = None
        from .qtstruct import groebner_matrix
        gm_dim = dimension(groebner_matrix(spec))
        vals = {}
        if rep is not None:
            vals = {"d_true": rep.d_true, "d_jensen": rep.d_jensen,
                    "d_spec1": rep.d_spec1, "d_specS": rep.d_spec_s}
        else:
            vals = {"d_true": None, "d_jensen": None,
                    "d_spec1": None, "d_specS": None}
        bounds = {k: vals[k] for k in ("d_jensen", "d_spec1", "d_specS")}
        present = [v for v in bounds.values() if v is not None]
        flags = {}
        for k, v in bounds.items():
            name = k[2:]
            flags[f"sharp_{name}"] = int(v is not None and vals["d_true"] is not None
                                         and v == vals["d_true"])
            flags[f"best_{name}"] = int(v is not None and present != []
                                        and all(v >= o for o in present))
        rows.append(SimulationRow(
            q=q, m=m, ell=ell, r=r, seed=row_seed, dim=gm_dim,
            d_true=_fmt(vals["d_true"]), d_jensen=_fmt(vals["d_jensen"]),
            d_spec1=_fmt(vals["d_spec1"]), d_specS=_fmt(vals["d_specS"]),
            **flags))
    return rows


def summarize(rows, m: int):
    """Tallies over nontrivial rows (0 < dim < m*ell); a row may count as
    sharp or best for several bounds at once."""
    summary = {"rows": len(rows), "nontrivial": 0}
    for name in ("jensen", "spec1", "specS"):
        summary[f"sharp_{name}"] = 0
        summary[f"best_{name}"] = 0
    for row in rows:
        if row.dim is None or not (0 < row.dim < m * row.ell):
            continue
        summary["nontrivial"] += 1
        for name in ("jensen", "spec1", "specS"):
            summary[f"sharp_{name}"] += getattr(row, f"sharp_{name}")
            summary[f"best_{name}"] += getattr(row, f"best_{name}")
    return summary


def cmd_simulate(args) -> int:
    ell_range = _parse_range(args.ell_range, "--ell-range")
    r_range = _parse_range(args.r_range, "--r-range")
    rows = simulate_rows(args.q, args.m, ell_range, r_range, args.count,
                         args.seed, args.s, args.lam, _caps(args))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SIM_FIELDS)
    for row in rows:
        w.writerow(["" if getattr(row, f) is None else getattr(row, f)
                    for f in SIM_FIELDS])
    _emit(buf.getvalue(), args.out)
    summary = summarize(rows, args.m)
    dest = sys.stdout if args.out else sys.stderr
    print(json.dumps(summary), file=dest)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtspectral",
        description="Quasi-twisted code analysis and minimum-distance bounds")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="JSON code spec")
        p.add_argument("--s", type=int, default=2)
        p.add_argument("--families", default=",".join(FAMILIES),
                       help="csv of bch,ht,roos,exact")
        p.add_argument("--max-subset-bits", type=int,
                       default=DEFAULT_MAX_SUBSET_BITS)
        p.add_argument("--oracle-budget", type=int,
                       default=DEFAULT_ORACLE_BUDGET)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out")

    p = sub.add_parser("analyze", help="structure report for one code")
    common(p)
    p.add_argument("--eigencode", action="append",
                   help="csv of exponents; report the eigencode distance")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="bound comparison for one code")
    common(p)
    p.add_argument("--no-oracle", action="store_true",
                   help="skip the exact distance oracle")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("distance", help="exact minimum distance")
    common(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("simulate", help="seeded random-code benchmark")
    common(p, with_file=False)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--lam", type=int, default=2,
                   help="twist constant as a prime-field integer")
    p.add_argument("--ell-range", default="2:4")
    p.add_argument("--r-range", default="1:4")
    p.add_argument("--count", type=int, default=DEFAULT_SIM_COUNT)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OracleBudgetError, PoolSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
