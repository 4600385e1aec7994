"""Exact matrices over a FiniteField: rank, kernels, Kronecker products,
the column-independence number and brute-force minimum-distance oracles.

Distances are plain ints with float('inf') as the distinguished infinite
value; inf absorbs products and compares totally, which is exactly the
arithmetic the bounds need.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .errors import FieldError, OracleBudgetError
from .galois import FieldElement, FiniteField

INFINITY = float("inf")

Distance = float  # int or float('inf')

_MAX_TABLE_ORDER = 2048
_DEFAULT_SPAN_BUDGET = 2**22
_DEFAULT_SUBSET_BUDGET = 10**6


class Matrix:
    """Immutable rectangular matrix with entries from a single field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FiniteField, rows):
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            if len(r) != len(rows[0]):
                raise FieldError("ragged rows")
            for a in r:
                if a.owner is not field:
                    raise FieldError("entry from a different field")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @classmethod
    def zero(cls, field: FiniteField, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_ints(cls, field: FiniteField, rows) -> "Matrix":
        return cls(field, [[field.scalar(v) for v in r] for r in rows])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.field is other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((id(self.field), self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over {self.field})"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def column(self, j: int):
        return [r[j] for r in self.rows]

    def submatrix_columns(self, cols) -> "Matrix":
        return Matrix(self.field, [[r[j] for j in cols] for r in self.rows])

    def vstack(self, other: "Matrix") -> "Matrix":
        if other.nrows == 0:
            return self
        if self.nrows == 0:
            return other
        if self.ncols != other.ncols or self.field is not other.field:
            raise FieldError("stack shape/field mismatch")
        return Matrix(self.field, self.rows + other.rows)

    def mat_vec(self, v):
        z = self.field.zero()
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    # -- elimination

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        rows = [list(r) for r in self.rows]
        pivots = []
        pr = 0
        for col in range(self.ncols):
            piv = None
            for i in range(pr, len(rows)):
                if rows[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            rows[pr], rows[piv] = rows[piv], rows[pr]
            inv = rows[pr][col].inverse()
            rows[pr] = [a * inv for a in rows[pr]]
            for i in range(len(rows)):
                if i != pr and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
            pivots.append(col)
            pr += 1
            if pr == len(rows):
                break
        return Matrix(self.field, rows), tuple(pivots)

    def row_basis(self) -> "Matrix":
        """Nonzero rows of the reduced echelon form."""
        red, pivots = self.rref()
        return Matrix(self.field, red.rows[:len(pivots)])


def rank(a: Matrix) -> int:
    _, pivots = a.rref()
    return len(pivots)


def right_kernel(a: Matrix) -> Matrix:
    """Basis rows of {v : A v^T = 0}; empty matrix when the kernel is {0}."""
    red, pivots = a.rref()
    free = [j for j in range(a.ncols) if j not in pivots]
    field = a.field
    z, o = field.zero(), field.one()
    basis = []
    for f in free:
        v = [z] * a.ncols
        v[f] = o
        for i, pc in enumerate(pivots):
            v[pc] = -red.rows[i][f]
        basis.append(v)
    return Matrix(field, basis) if basis else Matrix(field, [])


def row_space_equal(a: Matrix, b: Matrix) -> bool:
    if a.ncols != b.ncols and not (a.nrows == 0 or b.nrows == 0):
        return False
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    if a.nrows == 0 or b.nrows == 0:
        return ra == rb
    return rank(a.vstack(b)) == ra


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    if a.field is not b.field:
        raise FieldError("Kronecker product needs a common field")
    rows = []
    for ar in a.rows:
        for br in b.rows:
            rows.append([x * y for x in ar for y in br])
    return Matrix(a.field, rows)


def column_independence_number(a: Matrix, cap: int = _DEFAULT_SUBSET_BUDGET) -> int:
    """Largest j such that every j columns of A are linearly independent.

    Exhaustive over column subsets; j-subsets only need checking while all
    (j-1)-subsets passed, so the scan grows j upward.
    """
    n = a.ncols
    if n == 0:
        return 0
    max_j = min(n, rank(a))
    checked = 0
    j = 0
    while j < max_j:
        nxt = j + 1
        checked += math.comb(n, nxt)
        if checked > cap:
            raise OracleBudgetError(
                f"column-subset budget exceeded ({checked} > {cap})")
        ok = all(rank(a.submatrix_columns(cols)) == nxt
                 for cols in combinations(range(n), nxt))
        if not ok:
            break
        j = nxt
    return j


# ---------------------------------------------------------------------------
# span enumeration oracle


def _op_tables(field: FiniteField):
    if field._op_tables is not None:
        return field._op_tables
    n = field.order
    if n > _MAX_TABLE_ORDER:
        raise OracleBudgetError(f"field order {n} too large for oracle tables")
    p, e = field.p, field.degree
    coords = np.zeros((n, e), dtype=np.int64)
    for idx in range(n):
        v = idx
        for t in range(e):
            coords[idx, t] = v % p
            v //= p
    pw = p ** np.arange(e, dtype=np.int64)
    add = (((coords[:, None, :] + coords[None, :, :]) % p) @ pw).astype(np.int64)
    # multiplication via discrete logs
    mul = np.zeros((n, n), dtype=np.int64)
    g = field.generator()
    log = {}
    cur = field.one()
    exps = np.zeros(n - 1, dtype=np.int64)
    for i in range(n - 1):
        log[cur.encoding] = i
        exps[i] = cur.encoding
        cur = cur * g
    logv = np.zeros(n, dtype=np.int64)
    for enc, lg in log.items():
        logv[enc] = lg
    nz = np.arange(1, n)
    mul[np.ix_(nz, nz)] = exps[(logv[nz][:, None] + logv[nz][None, :]) % (n - 1)]
    field._op_tables = (add, mul)
    return field._op_tables


def _to_index_array(m: Matrix) -> np.ndarray:
    return np.array([[a.encoding for a in r] for r in m.rows], dtype=np.int64)


def min_weight_in_span(rows: Matrix, coeffs: list[FieldElement],
                       budget: int = _DEFAULT_SPAN_BUDGET) -> Distance:
    """Minimum Hamming weight over nonzero coefficient combinations of rows.

    coeffs must contain zero; combinations run over coeffs^nrows.  Returns
    INFINITY for the zero span.
    """
    k = rows.nrows
    if k == 0 or rows.is_zero():
        return INFINITY
    q = len(coeffs)
    if q**k > budget:
        raise OracleBudgetError(f"oracle budget: {q}^{k} > {budget}")
    add, mul = _op_tables(rows.field)
    basis = _to_index_array(rows)
    cvec = np.array(sorted(a.encoding for a in coeffs), dtype=np.int64)
    span = np.zeros((1, rows.ncols), dtype=np.int64)
    for row in basis:
        scaled = mul[cvec[:, None], row[None, :]]
        span = add[span[:, None, :], scaled[None, :, :]].reshape(-1, rows.ncols)
    weights = (span != 0).sum(axis=1)
    weights = weights[weights > 0]
    if weights.size == 0:
        return INFINITY
    return int(weights.min())


def min_distance_from_generator(g: Matrix, coeff_elements=None,
                                budget: int = _DEFAULT_SPAN_BUDGET) -> Distance:
    """Exact minimum distance of the code spanned by the rows of G.

    With coeff_elements=None the span is over the entries' field and G is
    first reduced to a basis.  Otherwise combinations are restricted to the
    given coefficient set (subfield-linear spans); the rows are used as given
    since reduction would employ scalars outside the coefficient set.
    """
    if coeff_elements is None:
        basis = g.row_basis()
        coeffs = list(g.field.elements())
        return min_weight_in_span(basis, coeffs, budget)
    return min_weight_in_span(g, list(coeff_elements), budget)


def min_distance_from_parity(h: Matrix,
                             cap: int = _DEFAULT_SUBSET_BUDGET) -> Distance:
    """d = n_H + 1, with INFINITY for a trivial (zero) kernel."""
    ker = right_kernel(h)
    if ker.nrows == 0:
        return INFINITY
    return column_independence_number(h, cap) + 1
