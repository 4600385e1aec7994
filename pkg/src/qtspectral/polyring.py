"""Polynomials over finite fields and the quotient ring F_q[x]/(x^m - lambda).

Factorization of x^m - lambda is done by Frobenius-orbit products in the
splitting field rather than by a generic factoring algorithm: the root list
is already available from the RootSetup, and orbit products are exact and
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldError, InternalCheckError
from .galois import FieldElement, FiniteField, RootSetup


class Polynomial:
    """Dense univariate polynomial, little-endian coefficients (c0 first)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        for c in coeffs:
            if c.owner is not field:
                raise FieldError("coefficient from a different field")
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field: FiniteField, ints) -> "Polynomial":
        return cls(field, [field.scalar(v) for v in ints])

    @classmethod
    def from_coord_lists(cls, field: FiniteField, lists) -> "Polynomial":
        return cls(field, [field.element(v) for v in lists])

    @classmethod
    def zero(cls, field: FiniteField) -> "Polynomial":
        return cls(field, [])

    @classmethod
    def one(cls, field: FiniteField) -> "Polynomial":
        return cls(field, [field.one()])

    @classmethod
    def x(cls, field: FiniteField) -> "Polynomial":
        return cls(field, [field.zero(), field.one()])

    @classmethod
    def x_pow_m_minus(cls, field: FiniteField, m: int, lam: FieldElement) -> "Polynomial":
        coeffs = [-lam] + [field.zero()] * (m - 1) + [field.one()]
        return cls(field, coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if i <= self.degree else self.field.zero()

    @property
    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise FieldError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == self.field.one()

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if not c:
                continue
            cs = repr(c)
            if i == 0:
                parts.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if cs == "1" else f"{cs}*{xs}")
        return " + ".join(parts)

    # -- ring arithmetic

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field,
                          [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field,
                          [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self or not other:
            return Polynomial.zero(self.field)
        z = self.field.zero()
        out = [z] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def scale(self, c: FieldElement) -> "Polynomial":
        return Polynomial(self.field, [a * c for a in self.coeffs])

    def __divmod__(self, other: "Polynomial"):
        if not other:
            raise FieldError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        inv = other.lead.inverse()
        z = self.field.zero()
        if len(rem) - 1 < db:
            return Polynomial.zero(self.field), Polynomial(self.field, rem)
        quo = [z] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = c * inv
                quo[i - db] = f
                for j in range(db + 1):
                    rem[i - db + j] = rem[i - db + j] - f * other.coeffs[j]
        return Polynomial(self.field, quo), Polynomial(self.field, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise FieldError("division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if not self:
            return self
        return self.scale(self.lead.inverse())

    def __call__(self, point: FieldElement) -> FieldElement:
        """Evaluate by Horner; the point must live in the coefficient field."""
        acc = point.owner.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def eval_embedded(self, point: FieldElement, embed) -> FieldElement:
        """Evaluate at a point of an extension via the given embedding map."""
        acc = point.owner.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + embed(c)
        return acc

    def map_coeffs(self, fn, field: FiniteField) -> "Polynomial":
        return Polynomial(field, [fn(c) for c in self.coeffs])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial):
    """(g, u, v) with u*a + v*b = g, g monic."""
    field = a.field
    r0, r1 = a, b
    u0, u1 = Polynomial.one(field), Polynomial.zero(field)
    v0, v1 = Polynomial.zero(field), Polynomial.one(field)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0:
        inv = r0.lead.inverse()
        r0, u0, v0 = r0.scale(inv), u0.scale(inv), v0.scale(inv)
    return r0, u0, v0


def quotient_mul(a: Polynomial, b: Polynomial, m: int, lam: FieldElement) -> Polynomial:
    """a*b in F_q[x]/(x^m - lambda); x^m reduces to lambda."""
    prod = a * b
    if prod.degree < m:
        return prod
    z = a.field.zero()
    out = [z] * m
    for i, c in enumerate(prod.coeffs):
        if not c:
            continue
        j, wrap = i % m, i // m
        factor = c
        for _ in range(wrap):
            factor = factor * lam
        out[j] = out[j] + factor
    return Polynomial(a.field, out)


# ---------------------------------------------------------------------------
# factorization of x^m - lambda via conjugation orbits on the exponents


@dataclass(frozen=True)
class Factor:
    poly: Polynomial          # irreducible factor over F_q
    u: int                    # smallest exponent k with poly(alpha*xi^k) = 0
    degree: int               # = orbit size = [E_i : F_q]
    orbit: frozenset[int]


@dataclass(frozen=True)
class Factorization:
    setup: RootSetup
    factors: tuple[Factor, ...]

    @property
    def s(self) -> int:
        return len(self.factors)


def factor_xm_minus_lambda(setup: RootSetup) -> Factorization:
    """Split x^m - lambda into its irreducible factors over F_q.

    Exponents 0..m-1 are partitioned into orbits of k -> (q-1)/r + q*k mod m;
    each orbit's root product has coefficients in F_q by Frobenius stability.
    """
    m = setup.m
    seen = set()
    orbits = []
    for k in range(m):
        if k in seen:
            continue
        orbit = []
        cur = k
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = setup.conjugate_exponent(cur)
        orbits.append(orbit)
    F = setup.field
    factors = []
    for orbit in sorted(orbits, key=min):
        f_up = Polynomial.one(F)
        for k in orbit:
            f_up = f_up * Polynomial(F, [-setup.omega[k], F.one()])
        try:
            f_down = f_up.map_coeffs(setup.unembed, setup.q_field)
        except FieldError as exc:
            raise InternalCheckError(
                "orbit product has a coefficient outside F_q; "
                "the root setup is broken") from exc
        factors.append(Factor(poly=f_down, u=min(orbit), degree=len(orbit),
                              orbit=frozenset(orbit)))
    fact = Factorization(setup=setup, factors=tuple(factors))
    prod = Polynomial.one(setup.q_field)
    for f in fact.factors:
        prod = prod * f.poly
    if prod != Polynomial.x_pow_m_minus(setup.q_field, m, setup.lam):
        raise InternalCheckError("factor product does not recover x^m - lambda")
    return fact


def minimal_code_generator(i: int, fact: Factorization) -> Polynomial:
    """Generator (x^m - lambda)/f_i of the minimal code with check poly f_i."""
    setup = fact.setup
    whole = Polynomial.x_pow_m_minus(setup.q_field, setup.m, setup.lam)
    return whole.exact_div(fact.factors[i].poly)


def primitive_idempotent(i: int, fact: Factorization) -> Polynomial:
    """theta_i: 1 mod f_i and 0 mod f_j for j != i; idempotent in R."""
    setup = fact.setup
    f_i = fact.factors[i].poly
    g_i = minimal_code_generator(i, fact)
    _, inv, _ = poly_xgcd(g_i % f_i, f_i)
    whole = Polynomial.x_pow_m_minus(setup.q_field, setup.m, setup.lam)
    return (g_i * inv) % whole
