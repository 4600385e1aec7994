"""Quasi-twisted code model: scalar expansion, the reduced upper-triangular
generator matrix over F_q[x], spectrum, eigencodes, the spectral parity-check
matrix, CRT constituents and the concatenation reassembly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import FieldError, InternalCheckError, RecordScopeError
from .galois import FieldElement, FiniteField, RootSetup, root_setup
from .linalg import (INFINITY, Distance, Matrix, kronecker, rank, right_kernel)
from .polyring import Factorization, Polynomial, minimal_code_generator, quotient_mul

MAX_EIGENCODE_INDEX = 8  # eigencode distances enumerate F_q^ell exhaustively


@dataclass(frozen=True)
class QTCodeSpec:
    """A lambda-QT code given by generator rows of polynomials of degree < m."""

    q_field: FiniteField
    m: int
    ell: int
    lam: FieldElement
    generators: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        if math.gcd(self.m, self.q_field.p) != 1:
            raise FieldError("m not coprime to characteristic")
        if self.lam.owner is not self.q_field or not self.lam:
            raise FieldError("lambda must be a nonzero base-field element")
        for row in self.generators:
            if len(row) != self.ell:
                raise FieldError("generator row length differs from the index")
            for poly in row:
                if poly.field is not self.q_field or poly.degree >= self.m:
                    raise FieldError("generator polynomial of degree >= m")

    @property
    def length(self) -> int:
        return self.m * self.ell


def random_qtcode(q_field: FiniteField, m: int, ell: int, r: int,
                  seed: int, lam: FieldElement | None = None) -> QTCodeSpec:
    """Seeded uniformly random spec with r generator rows."""
    rng = random.Random(seed)
    if lam is None:
        lam = q_field.one()
    p, e = q_field.p, q_field.degree
    rows = []
    for _ in range(r):
        row = []
        for _ in range(ell):
            coeffs = [q_field.element([rng.randrange(p) for _ in range(e)])
                      for _ in range(m)]
            row.append(Polynomial(q_field, coeffs))
        rows.append(tuple(row))
    return QTCodeSpec(q_field=q_field, m=m, ell=ell, lam=lam,
                      generators=tuple(rows))


def scalar_generator_matrix(spec: QTCodeSpec) -> Matrix:
    """All constashifts of the generator rows, expanded to length m*ell.

    Codeword coordinate (i, j) sits at position i*ell + j.
    """
    x = Polynomial.x(spec.q_field)
    rows = []
    for gen in spec.generators:
        shifted = list(gen)
        for _ in range(spec.m):
            flat = []
            for i in range(spec.m):
                for poly in shifted:
                    flat.append(poly.coeff(i))
            rows.append(flat)
            shifted = [quotient_mul(x, poly, spec.m, spec.lam)
                       for poly in shifted]
    if not rows:
        return Matrix.zero(spec.q_field, 1, spec.length)
    return Matrix(spec.q_field, rows)


# ---------------------------------------------------------------------------
# reduced upper-triangular generator matrix (Hermite form over F_q[x])


@dataclass(frozen=True)
class GroebnerMatrix:
    q_field: FiniteField
    m: int
    ell: int
    lam: FieldElement
    entries: tuple[tuple[Polynomial, ...], ...]

    def diagonal(self) -> tuple[Polynomial, ...]:
        return tuple(self.entries[j][j] for j in range(self.ell))

    def determinant(self) -> Polynomial:
        det = Polynomial.one(self.q_field)
        for g in self.diagonal():
            det = det * g
        return det

    def evaluate(self, point: FieldElement, embed) -> Matrix:
        F = point.owner
        return Matrix(F, [[poly.eval_embedded(point, embed) for poly in row]
                          for row in self.entries])


def groebner_matrix(spec: QTCodeSpec) -> GroebnerMatrix:
    """Unique reduced upper-triangular polynomial generator matrix.

    Appends the (x^m - lambda)e_j relations, triangularizes by column-pivot
    extended-gcd elimination under the position-over-term order, then size
    reduces above-diagonal entries modulo the diagonal.
    """
    field, m, ell, lam = spec.q_field, spec.m, spec.ell, spec.lam
    whole = Polynomial.x_pow_m_minus(field, m, lam)
    zero = Polynomial.zero(field)
    work: list[list[Polynomial]] = [list(row) for row in spec.generators]
    for j in range(ell):
        work.append([whole if t == j else zero for t in range(ell)])
    out: list[list[Polynomial]] = []
    for j in range(ell):
        while True:
            nz = [r for r in work if r[j]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: r[j].degree)
            piv = nz[0]
            for r in nz[1:]:
                q, _ = divmod(r[j], piv[j])
                for t in range(j, ell):
                    r[t] = r[t] - q * piv[t]
        pivot = next((r for r in work if r[j]), None)
        if pivot is None:
            raise InternalCheckError("missing pivot in Hermite elimination")
        work.remove(pivot)
        inv = pivot[j].lead.inverse()
        out.append([p.scale(inv) for p in pivot])
    if any(any(r) for r in work):
        raise InternalCheckError("leftover nonzero rows after elimination")
    # size reduction: deg g[i][j] < deg g[j][j] for i < j
    for j in range(1, ell):
        for i in range(j):
            q, _ = divmod(out[i][j], out[j][j])
            if q:
                for t in range(j, ell):
                    out[i][t] = out[i][t] - q * out[j][t]
    gm = GroebnerMatrix(q_field=field, m=m, ell=ell, lam=lam,
                        entries=tuple(tuple(r) for r in out))
    _check_groebner_conditions(gm, whole)
    return gm


def _check_groebner_conditions(gm: GroebnerMatrix, whole: Polynomial) -> None:
    ell = gm.ell
    for j in range(ell):
        gjj = gm.entries[j][j]
        if not gjj.is_monic() or whole % gjj:
            raise InternalCheckError("diagonal entry does not divide x^m - lambda")
        for i in range(j):
            if gm.entries[i][j].degree >= gjj.degree:
                raise InternalCheckError("size reduction failed")
        if gjj == whole:
            # the row then lies in the trivial relations and must vanish off
            # the diagonal
            if any(gm.entries[j][t] for t in range(j + 1, ell)):
                raise InternalCheckError("full-diagonal row is not a relation row")


def dimension(gm: GroebnerMatrix) -> int:
    return gm.m * gm.ell - sum(g.degree for g in gm.diagonal())


def groebner_scalar_rows(gm: GroebnerMatrix, spec: QTCodeSpec) -> Matrix:
    """Scalar expansion of the rows of G(x) (image of the Hermite rows in R)."""
    reduced = []
    whole = Polynomial.x_pow_m_minus(spec.q_field, spec.m, spec.lam)
    for row in gm.entries:
        image = tuple(p % whole for p in row)
        if any(image):
            reduced.append(image)
    shadow = QTCodeSpec(q_field=spec.q_field, m=spec.m, ell=spec.ell,
                        lam=spec.lam, generators=tuple(reduced))
    return scalar_generator_matrix(shadow)


# ---------------------------------------------------------------------------
# spectrum


@dataclass(frozen=True)
class Eigenvalue:
    exponent: int              # beta = alpha * xi^exponent
    beta: FieldElement
    multiplicity: int
    eigenspace: Matrix         # basis rows over the splitting field
    evaluated: Matrix          # G(beta), kept for eigenspace intersections


@dataclass
class Spectrum:
    setup: RootSetup
    ell: int
    eigen: tuple[Eigenvalue, ...]
    _unit_cache: list | None = dc_field(default=None, repr=False)

    @property
    def exponents(self) -> frozenset[int]:
        return frozenset(ev.exponent for ev in self.eigen)

    def by_exponent(self, k: int) -> Eigenvalue:
        for ev in self.eigen:
            if ev.exponent == k:
                return ev
        raise RecordScopeError(f"record outside eigenvalue set: exponent {k}")

    def is_full_space(self) -> bool:
        return not self.eigen

    def is_zero_code(self) -> bool:
        return (len(self.eigen) == self.setup.m
                and all(ev.multiplicity == self.ell for ev in self.eigen))


def spectrum(gm: GroebnerMatrix, setup: RootSetup) -> Spectrum:
    """Eigenvalues of the code with algebraic multiplicities and eigenspaces.

    Multiplicity comes from repeated exact division of det(G(x)); the equality
    with the nullity of G(beta) is verified rather than assumed.
    """
    det_fq = gm.determinant()
    F = setup.field
    det_up = det_fq.map_coeffs(setup.embed, F)
    eigen = []
    for k, omega in enumerate(setup.omega):
        lin = Polynomial(F, [-omega, F.one()])
        mult = 0
        cur = det_up
        while cur:
            q, rem = divmod(cur, lin)
            if rem:
                break
            mult += 1
            cur = q
        if mult == 0:
            continue
        evaluated = gm.evaluate(omega, setup.embed)
        eigenspace = right_kernel(evaluated)
        if eigenspace.nrows != mult:
            raise InternalCheckError(
                f"algebraic multiplicity {mult} != geometric {eigenspace.nrows} "
                f"at exponent {k}")
        eigen.append(Eigenvalue(exponent=k, beta=omega, multiplicity=mult,
                                eigenspace=eigenspace, evaluated=evaluated))
    return Spectrum(setup=setup, ell=gm.ell, eigen=tuple(eigen))


# ---------------------------------------------------------------------------
# eigencodes


@dataclass(frozen=True)
class Eigencode:
    basis: Matrix
    distance: Distance


def _unit_vectors(spect: Spectrum):
    """All vectors of F_q^ell with their embeddings into the splitting field."""
    if spect._unit_cache is not None:
        return spect._unit_cache
    q_field = spect.setup.q_field
    if spect.ell > MAX_EIGENCODE_INDEX:
        raise FieldError(f"index {spect.ell} above eigencode enumeration limit")
    emb = spect.setup.embed
    cache = []
    for combo in product(list(q_field.elements()), repeat=spect.ell):
        up = tuple(emb(c) for c in combo)
        weight = sum(1 for c in combo if c)
        cache.append((combo, up, weight))
    spect._unit_cache = cache
    return cache


def common_eigenspace(spect: Spectrum, exponents) -> Matrix:
    """Basis of the intersection of the eigenspaces for the given exponents."""
    mats = [spect.by_exponent(k).evaluated for k in sorted(exponents)]
    stacked = mats[0]
    for m in mats[1:]:
        stacked = stacked.vstack(m)
    return right_kernel(stacked)


def eigencode_from_constraints(spect: Spectrum, constraint_rows) -> Eigencode:
    """Vectors of F_q^ell orthogonal to every constraint row (over F)."""
    q_field = spect.setup.q_field
    F = spect.setup.field
    zero = F.zero()
    solutions = []
    best: Distance = INFINITY
    rows = [tuple(r) for r in constraint_rows]
    for combo, up, weight in _unit_vectors(spect):
        ok = True
        for row in rows:
            acc = zero
            for a, b in zip(row, up):
                if a and b:
                    acc = acc + a * b
            if acc:
                ok = False
                break
        if ok:
            solutions.append(combo)
            if 0 < weight < best:
                best = weight
    basis = Matrix(q_field, solutions).row_basis() if solutions else Matrix(q_field, [])
    return Eigencode(basis=basis, distance=best)


def eigencode(spect: Spectrum, exponents) -> Eigencode:
    """Eigencode of the common eigenspace of the given eigenvalue exponents.

    The empty set follows the full-space convention: the eigencode is all of
    F_q^ell with distance 1.
    """
    exponents = frozenset(exponents)
    if not exponents:
        return eigencode_from_constraints(spect, [])
    vp = common_eigenspace(spect, exponents)
    return eigencode_from_constraints(spect, vp.rows)


def chain_eigencode(spect: Spectrum, exponent_sets) -> Eigencode:
    """Intersection of the eigencodes of several exponent sets.

    Equals the eigencode of the sum of their common eigenspaces, so the
    constraints are simply the union of the eigenspace bases.
    """
    rows = []
    for P in exponent_sets:
        if P:
            rows.extend(common_eigenspace(spect, P).rows)
    return eigencode_from_constraints(spect, rows)


# ---------------------------------------------------------------------------
# parity check


def parity_check(spect: Spectrum, m: int) -> Matrix:
    """Stack of (1, beta, ..., beta^{m-1}) kron V_beta over all eigenvalues.

    With no eigenvalues (full space) the zero-matrix convention applies.
    """
    F = spect.setup.field
    if not spect.eigen:
        return Matrix.zero(F, 1, m * spect.ell)
    blocks = []
    for ev in spect.eigen:
        powers = []
        cur = F.one()
        for _ in range(m):
            powers.append(cur)
            cur = cur * ev.beta
        blocks.append(kronecker(Matrix(F, [powers]), ev.eigenspace))
    stacked = blocks[0]
    for b in blocks[1:]:
        stacked = stacked.vstack(b)
    return stacked


# ---------------------------------------------------------------------------
# constituents and concatenation


def constituents(spec: QTCodeSpec, fact: Factorization) -> list[Matrix]:
    """One matrix per factor: generator rows evaluated at alpha*xi^{u_i}."""
    setup = fact.setup
    out = []
    for f in fact.factors:
        point = setup.omega[f.u]
        rows = [[poly.eval_embedded(point, setup.embed) for poly in gen]
                for gen in spec.generators]
        if not rows:
            mat = Matrix.zero(setup.field, 1, spec.ell)
        else:
            mat = Matrix(setup.field, rows)
        out.append(mat)
    return out


def inverse_isomorphism(delta: FieldElement, factor_index: int,
                        fact: Factorization) -> Polynomial:
    """psi_i: map an element of E_i back into the minimal code <theta_i>."""
    setup = fact.setup
    f = fact.factors[factor_index]
    eta = setup.omega[f.u]
    eta_inv = eta.inverse()
    q = setup.q
    m_inv = setup.q_field.scalar(setup.m).inverse()
    coeffs = []
    point = setup.field.one()
    for _ in range(setup.m):
        z = delta * point
        tr = z
        cur = z
        for _ in range(f.degree - 1):
            cur = cur**q
            tr = tr + cur
        coeffs.append(setup.unembed(tr) * m_inv)
        point = point * eta_inv
    return Polynomial(setup.q_field, coeffs)


def concatenate_and_reassemble(spec: QTCodeSpec, fact: Factorization) -> Matrix:
    """Apply psi_i coordinatewise to an F_q-spanning set of each constituent.

    Each constituent row is scaled through an F_q-basis of E_i (powers of
    alpha*xi^{u_i}) so the stacked image spans the whole code over F_q.
    """
    setup = fact.setup
    consts = constituents(spec, fact)
    rows = []
    for i, f in enumerate(fact.factors):
        eta = setup.omega[f.u]
        for crow in consts[i].rows:
            if not any(crow):
                continue
            scale = setup.field.one()
            for _ in range(f.degree):
                scaled = [c * scale for c in crow]
                polys = [inverse_isomorphism(c, i, fact) for c in scaled]
                flat = []
                for t in range(setup.m):
                    for poly in polys:
                        flat.append(poly.coeff(t))
                rows.append(flat)
                scale = scale * eta
    if not rows:
        return Matrix.zero(setup.q_field, 1, spec.length)
    return Matrix(setup.q_field, rows)


def analyze(spec: QTCodeSpec):
    """Convenience bundle: (setup, factorization, groebner, spectrum)."""
    from .polyring import factor_xm_minus_lambda

    setup = root_setup(spec.q_field, spec.m, spec.lam)
    fact = factor_xm_minus_lambda(setup)
    gm = groebner_matrix(spec)
    spect = spectrum(gm, setup)
    return setup, fact, gm, spect
