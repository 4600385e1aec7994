"""Defining-set bound families (BCH, HT, Roos, exact), the Jensen bound and
the spectral bounds, plus the s-tuple optimizer and the comparison report.

All set combinatorics is carried out on root exponents: the element
alpha*xi^k is represented by k, and the Roos normalization (1/alpha) U eN
becomes plain exponent addition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations

from .errors import OracleBudgetError, PoolSizeError, RecordScopeError
from .galois import RootSetup
from .linalg import (INFINITY, Distance, Matrix, min_distance_from_generator,
                     min_distance_from_parity)
from .polyring import Factorization, Polynomial, minimal_code_generator
from .qtstruct import (QTCodeSpec, Spectrum, chain_eigencode, constituents,
                       eigencode)

FAMILIES = ("bch", "ht", "roos", "exact")

DEFAULT_MAX_SUBSET_BITS = 12
DEFAULT_ORACLE_BUDGET = 2**22
DEFAULT_FAMILY_CAP = 200_000


@dataclass(frozen=True)
class BoundRecord:
    kind: str
    exponents: frozenset[int]
    d: Distance
    witness: tuple = ()

    def sort_key(self):
        return (tuple(sorted(self.exponents)), -self.d if self.d != INFINITY else -10**9)


@dataclass
class Caps:
    max_subset_bits: int = DEFAULT_MAX_SUBSET_BITS
    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    family_cap: int = DEFAULT_FAMILY_CAP


@dataclass
class BoundReport:
    d_true: Distance | None
    d_jensen: Distance | None
    d_spec1: Distance | None
    d_spec_s: Distance | None
    s_used: int
    witness: tuple = ()
    errors: dict = dc_field(default_factory=dict)


def _merge(records: dict, P: frozenset, d: Distance, kind: str, witness: tuple):
    cur = records.get(P)
    if cur is None or d > cur.d:
        records[P] = BoundRecord(kind=kind, exponents=P, d=d, witness=witness)


def _coprime_steps(m: int) -> list[int]:
    return [n for n in range(1, m + 1) if math.gcd(m, n) == 1]


def consecutive_sets(m: int):
    """All (set, e, n, size) consecutive subsets {e + z*n} with gcd(m,n)=1."""
    out = []
    for n in _coprime_steps(m):
        for e in range(m):
            cur = set()
            for z in range(m):
                cur.add((e + z * n) % m)
                out.append((frozenset(cur), e, n, len(cur)))
    return out


def bch_records(universe: frozenset[int], m: int) -> list[BoundRecord]:
    """Family B2: consecutive sets E inside the universe, each worth |E|+1."""
    best: dict[frozenset, BoundRecord] = {}
    for n in _coprime_steps(m):
        for e in range(m):
            cur = set()
            for z in range(m):
                k = (e + z * n) % m
                if k not in universe:
                    break
                cur.add(k)
                _merge(best, frozenset(cur), len(cur) + 1, "bch", (e, n, len(cur) + 1))
    return sorted(best.values(), key=BoundRecord.sort_key)


def ht_records(universe: frozenset[int], m: int,
               cap: int = DEFAULT_FAMILY_CAP) -> list[BoundRecord]:
    """Family B3: grids {e + z*n1 + y*n2}, d = delta + s.

    gcd(m, n1) = 1, gcd(m, n2) < delta, delta >= 2, s >= 1; the grid must not
    collapse (all (delta-1)(s+1) points distinct) for the bound to be sound.
    """
    best: dict[frozenset, BoundRecord] = {}
    examined = 0
    partial = False
    for n1 in _coprime_steps(m):
        for n2 in range(1, m):
            g2 = math.gcd(m, n2)
            for delta in range(max(2, g2 + 1), m + 2):
                for s in range(1, m + 1):
                    if (delta - 1) * (s + 1) > m:
                        break
                    examined += 1
                    if examined > cap:
                        partial = True
                        break
                    for e in range(m):
                        pts = {(e + z * n1 + y * n2) % m
                               for z in range(delta - 1) for y in range(s + 1)}
                        if len(pts) != (delta - 1) * (s + 1):
                            continue
                        if not pts <= universe:
                            continue
                        _merge(best, frozenset(pts), delta + s, "ht",
                               (e, n1, n2, delta, s))
                if partial:
                    break
            if partial:
                break
        if partial:
            break
    recs = sorted(best.values(), key=BoundRecord.sort_key)
    if partial:
        raise OracleBudgetError("ht enumeration cap exceeded")
    return recs


def roos_records(universe: frozenset[int], m: int,
                 cap: int = DEFAULT_FAMILY_CAP) -> list[BoundRecord]:
    """Family B4: (MN, |M| + |N|) with N consecutive, M inside a consecutive
    M' of size at most |M| + |N| - 1.

    MN on exponents is the sumset {k_M + k_N mod m}.
    """
    best: dict[frozenset, BoundRecord] = {}
    n_sets = {}
    for fs, e, n, size in consecutive_sets(m):
        n_sets.setdefault((size, fs), (e, n))
    consec = sorted({fs for (_, fs) in n_sets}, key=lambda s: (len(s), sorted(s)))
    examined = 0
    for mprime in consec:
        mp_size = len(mprime)
        mp_list = sorted(mprime)
        for a in range(1, mp_size + 1):
            for m_sub in combinations(mp_list, a):
                for n_set in consec:
                    b = len(n_set)
                    if mp_size > a + b - 1:
                        continue
                    examined += 1
                    if examined > cap:
                        raise OracleBudgetError("roos enumeration cap exceeded")
                    mn = frozenset((km + kn) % m for km in m_sub for kn in n_set)
                    if not mn <= universe:
                        continue
                    _merge(best, mn, a + b, "roos",
                           (tuple(m_sub), tuple(sorted(n_set)), tuple(sorted(mprime))))
    return sorted(best.values(), key=BoundRecord.sort_key)


def exact_record(P, setup: RootSetup,
                 budget: int = DEFAULT_ORACLE_BUDGET) -> BoundRecord:
    """Exact distance of the constacyclic code over F with zero set P.

    The code is cut out by the Vandermonde-style parity rows (1, w, ..,
    w^{m-1}) for w with exponent in P, so d = n_H + 1 by the column
    independence oracle; an empty kernel (|P| = m) gives infinity.
    """
    P = frozenset(P)
    m = setup.m
    if len(P) > m:
        raise ValueError("zero set larger than the length")
    F = setup.field
    rows = []
    for k in sorted(P):
        w = setup.omega[k]
        row, cur = [], F.one()
        for _ in range(m):
            row.append(cur)
            cur = cur * w
        rows.append(row)
    if not rows:
        return BoundRecord(kind="exact", exponents=P, d=1)
    d = min_distance_from_parity(Matrix(F, rows), cap=budget)
    return BoundRecord(kind="exact", exponents=P, d=d)


def exact_records(universe: frozenset[int], setup: RootSetup,
                  budget: int = DEFAULT_ORACLE_BUDGET) -> list[BoundRecord]:
    out = []
    elems = sorted(universe)
    for size in range(1, len(elems) + 1):
        for combo in combinations(elems, size):
            out.append(exact_record(frozenset(combo), setup, budget))
    return out


# ---------------------------------------------------------------------------
# Jensen bound


def jensen_bound(spec: QTCodeSpec, fact: Factorization,
                 budget: int = DEFAULT_ORACLE_BUDGET,
                 maximize_ties: bool = False) -> Distance:
    """Concatenation bound: min over r of d(C_{i_r}) * d(inner direct sum).

    Constituents are sorted by ascending distance with ascending factor index
    as the tie break; maximize_ties additionally tries every order of tied
    constituents and keeps the largest valid estimate.
    """
    setup = fact.setup
    consts = constituents(spec, fact)
    entries = []
    for i, f in enumerate(fact.factors):
        mat = consts[i]
        if mat.is_zero():
            continue
        sub = setup.field.subfield_elements(setup.q ** f.degree)
        d_i = min_distance_from_generator(mat, coeff_elements=sub, budget=budget)
        entries.append((d_i, i))
    if not entries:
        return INFINITY

    def evaluate(order):
        chosen = set()
        bound = INFINITY
        for d_i, i in order:
            chosen.add(i)
            gen = Polynomial.one(setup.q_field)
            for j, f in enumerate(fact.factors):
                if j not in chosen:
                    gen = gen * f.poly
            dim = setup.m - gen.degree
            rows = []
            coeffs = list(gen.coeffs) + [setup.q_field.zero()] * (setup.m - gen.degree - 1)
            for t in range(dim):
                rows.append([setup.q_field.zero()] * t + coeffs[:setup.m - t])
            d_inner = min_distance_from_generator(Matrix(setup.q_field, rows),
                                                  budget=budget)
            bound = min(bound, d_i * d_inner)
        return bound

    entries.sort()
    if not maximize_ties:
        return evaluate(entries)
    # group ties and take the max over orderings inside tied groups
    best = evaluate(entries)
    for perm in permutations(entries):
        if [d for d, _ in perm] != sorted(d for d, _ in perm):
            continue
        best = max(best, evaluate(list(perm)))
    return best


# ---------------------------------------------------------------------------
# spectral bounds


def spectral_bound(spect: Spectrum, record: BoundRecord) -> Distance:
    """min{d_P, d(C_P)} for one defining-set bound record."""
    if spect.is_full_space():
        if record.exponents:
            raise RecordScopeError("record outside eigenvalue set")
        return 1
    if not record.exponents <= spect.exponents:
        raise RecordScopeError("record outside eigenvalue set")
    ec = eigencode(spect, record.exponents)
    return min(record.d, ec.distance)


def generalized_spectral_bound(spect: Spectrum, records) -> Distance:
    """The s-term chain bound over possibly overlapping exponent sets."""
    records = list(records)
    if not records:
        raise ValueError("need at least one record")
    for rec in records:
        if not rec.exponents <= spect.exponents:
            raise RecordScopeError("record outside eigenvalue set")
    records.sort(key=lambda r: (-(r.d if r.d != INFINITY else float("inf")),
                                tuple(sorted(r.exponents))))
    records.sort(key=lambda r: r.d, reverse=True)
    terms = [records[0].d]
    prefix = []
    for i, rec in enumerate(records):
        prefix.append(rec.exponents)
        tail = chain_eigencode(spect, prefix).distance
        if i + 1 < len(records):
            terms.append(records[i + 1].d * tail)
        else:
            terms.append(tail)
    return min(terms)


def build_record_pool(spect: Spectrum, setup: RootSetup, families=FAMILIES,
                      caps: Caps | None = None) -> list[BoundRecord]:
    """Best defining-set record per subset of the eigenvalue set.

    Always includes the (Omega, infinity) convention when the eigenvalue set
    is all of Omega.
    """
    caps = caps or Caps()
    universe = spect.exponents
    if len(universe) > caps.max_subset_bits:
        raise PoolSizeError(
            f"|eigenvalue set| = {len(universe)} exceeds subset cap "
            f"{caps.max_subset_bits}")
    families = tuple(f.lower() for f in families)
    for f in families:
        if f not in FAMILIES:
            raise ValueError(f"unknown bound family: {f}")
    best: dict[frozenset, BoundRecord] = {}
    m = setup.m
    if "bch" in families:
        for rec in bch_records(universe, m):
            _merge(best, rec.exponents, rec.d, rec.kind, rec.witness)
    if "ht" in families:
        for rec in ht_records(universe, m, caps.family_cap):
            _merge(best, rec.exponents, rec.d, rec.kind, rec.witness)
    if "roos" in families:
        for rec in roos_records(universe, m, caps.family_cap):
            _merge(best, rec.exponents, rec.d, rec.kind, rec.witness)
    if "exact" in families:
        for rec in exact_records(universe, setup, caps.oracle_budget):
            _merge(best, rec.exponents, rec.d, rec.kind, rec.witness)
    if universe and len(universe) == m:
        _merge(best, frozenset(universe), INFINITY, "convention", ())
    return sorted(best.values(), key=BoundRecord.sort_key)


def optimize_spectral(spect: Spectrum, setup: RootSetup, s: int,
                      families=FAMILIES, caps: Caps | None = None,
                      pool: list[BoundRecord] | None = None):
    """Maximize the s-term chain bound over repetition-free record tuples.

    Returns (value, witness records); the witness is the lexicographically
    least maximizer.  Tuples of every size 1..s are covered since repeated
    records reduce to shorter tuples.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if spect.is_full_space():
        return 1, ()
    if pool is None:
        pool = build_record_pool(spect, setup, families, caps)
    if not pool:
        return 1, ()
    cache: dict[frozenset, Distance] = {}

    def chain_distance(prefix_sets: tuple[frozenset, ...]) -> Distance:
        key = frozenset(prefix_sets)
        if key not in cache:
            cache[key] = chain_eigencode(spect, prefix_sets).distance
        return cache[key]

    best_val: Distance = -1
    best_wit = None
    for size in range(1, min(s, len(pool)) + 1):
        for combo in combinations(pool, size):
            ordered = sorted(combo, key=lambda r: (-r.d if r.d != INFINITY else -INFINITY,
                                                   tuple(sorted(r.exponents))))
            ordered.sort(key=lambda r: r.d, reverse=True)
            terms = [ordered[0].d]
            prefix = []
            for i, rec in enumerate(ordered):
                prefix.append(rec.exponents)
                tail = chain_distance(tuple(prefix))
                if i + 1 < len(ordered):
                    terms.append(ordered[i + 1].d * tail)
                else:
                    terms.append(tail)
            val = min(terms)
            wit_key = tuple(sorted(tuple(sorted(r.exponents)) for r in ordered))
            if val > best_val or (val == best_val and wit_key < best_wit_key):
                best_val = val
                best_wit = tuple(ordered)
                best_wit_key = wit_key
    return best_val, best_wit


def compare_all(spec: QTCodeSpec, s: int = 2, caps: Caps | None = None,
                with_oracle: bool = True, families=FAMILIES) -> BoundReport:
    """Full comparison: oracle distance, Jensen, spectral s=1 and s-term."""
    from .linalg import min_distance_from_generator
    from .polyring import factor_xm_minus_lambda
    from .qtstruct import (groebner_matrix, scalar_generator_matrix, spectrum)
    from .galois import root_setup

    caps = caps or Caps()
    setup = root_setup(spec.q_field, spec.m, spec.lam)
    fact = factor_xm_minus_lambda(setup)
    gm = groebner_matrix(spec)
    spect = spectrum(gm, setup)
    errors = {}
    d_true = None
    if with_oracle:
        try:
            d_true = min_distance_from_generator(scalar_generator_matrix(spec),
                                                 budget=caps.oracle_budget)
        except OracleBudgetError as exc:
            errors["d_true"] = str(exc)
    d_jensen = None
    try:
        d_jensen = jensen_bound(spec, fact, budget=caps.oracle_budget)
    except OracleBudgetError as exc:
        errors["d_jensen"] = str(exc)
    d_spec1 = d_spec_s = None
    witness = ()
    try:
        pool = build_record_pool(spect, setup, families, caps)
        d_spec1, _ = optimize_spectral(spect, setup, 1, families, caps, pool)
        d_spec_s, witness = optimize_spectral(spect, setup, s, families, caps, pool)
    except (OracleBudgetError, PoolSizeError) as exc:
        errors["d_spec"] = str(exc)
    return BoundReport(d_true=d_true, d_jensen=d_jensen, d_spec1=d_spec1,
                       d_spec_s=d_spec_s, s_used=s, witness=witness,
                       errors=errors)
