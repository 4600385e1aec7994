"""Exact arithmetic in finite fields F_{p^e}, field towers and root-of-unity setup.

Every field is represented over its prime field by a canonical monic
irreducible modulus: the first irreducible polynomial of the right degree in
ascending integer encoding c0 + c1*p + ... + c_{e-1}*p^{e-1}.  Extension
computations all happen inside a single splitting field; subfields are
identified by Frobenius fixed-point tests and canonical embeddings rather
than as separately constructed towers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Iterator

import sympy

from .errors import FieldError


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists of plain ints, little-endian)


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = a[:]
    dm = len(mod) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        shift = len(a) - 1 - dm
        if lead:
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * mod[i]) % p
        _trim(a)
        if not a:
            break
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _ppow_mod(base: list[int], n: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, mod, p)
    while n > 0:
        if n & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        n >>= 1
    return result


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Monic polynomial over F_p; Frobenius-based irreducibility test."""
    e = len(coeffs) - 1
    if e <= 0:
        return False
    x = [0, 1]
    # x^(p^e) == x mod f
    xq = _ppow_mod(x, p**e, coeffs, p)
    diff = [0] * max(len(xq), 2)
    for i, c in enumerate(xq):
        diff[i] = c
    diff[1] = (diff[1] - 1) % p
    if _pmod(_trim(diff), coeffs, p):
        return False
    for r in sympy.primefactors(e):
        xr = _ppow_mod(x, p ** (e // r), coeffs, p)
        d = [0] * max(len(xr), 2)
        for i, c in enumerate(xr):
            d[i] = c
        d[1] = (d[1] - 1) % p
        g = _pgcd(coeffs, _trim(d), p)
        if len(g) - 1 != 0:
            return False
    return True


_MODULUS_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e over F_p in ascending encoding."""
    key = (p, e)
    if key in _MODULUS_CACHE:
        return _MODULUS_CACHE[key]
    if e == 1:
        mod = (0, 1)
    else:
        mod = None
        for code in range(p**e):
            coeffs = []
            n = code
            for _ in range(e):
                coeffs.append(n % p)
                n //= p
            coeffs.append(1)
            if _is_irreducible(coeffs, p):
                mod = tuple(coeffs)
                break
        if mod is None:  # cannot happen: irreducibles exist for every degree
            raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")
    _MODULUS_CACHE[key] = mod
    return mod


# ---------------------------------------------------------------------------
# fields and elements


class FieldElement:
    __slots__ = ("owner", "coords")

    def __init__(self, owner: "FiniteField", coords: tuple[int, ...]):
        self.owner = owner
        self.coords = coords

    # -- basic protocol

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement)
                and self.owner is other.owner and self.coords == other.coords)

    def __hash__(self) -> int:
        return hash((id(self.owner), self.coords))

    @property
    def encoding(self) -> int:
        """Integer encoding c0 + c1*p + ... used for canonical element order."""
        n = 0
        for c in reversed(self.coords):
            n = n * self.owner.p + c
        return n

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}y" if c != 1 else "y")
            else:
                terms.append(f"{c}y^{i}" if c != 1 else f"y^{i}")
        return "+".join(terms) if terms else "0"

    # -- arithmetic

    def _check(self, other: "FieldElement") -> None:
        if self.owner is not other.owner:
            raise FieldError("elements from different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.owner.p
        return FieldElement(self.owner, tuple(
            (a + b) % p for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.owner.p
        return FieldElement(self.owner, tuple(
            (a - b) % p for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "FieldElement":
        p = self.owner.p
        return FieldElement(self.owner, tuple((-a) % p for a in self.coords))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.owner._mul(self, other)

    def inverse(self) -> "FieldElement":
        if not self:
            raise FieldError("zero has no inverse")
        return self ** (self.owner.order - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.owner.one()
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


class FiniteField:
    """F_{p^degree} under the canonical modulus.  Immutable and shareable."""

    def __init__(self, p: int, degree: int):
        self.p = p
        self.degree = degree
        self.modulus = canonical_modulus(p, degree)
        self.order = p**degree
        # reduction table: coords of y^(degree+k) for k = 0..degree-2
        red = []
        cur = [(-c) % p for c in self.modulus[:-1]]  # y^degree
        red.append(tuple(cur))
        for _ in range(degree - 2):
            cur = [0] + cur
            if len(cur) > degree:
                lead = cur.pop()
                cur = [(a + lead * r) % p for a, r in zip(cur, red[0])]
            red.append(tuple(cur))
        self._red = red
        self._generator: FieldElement | None = None
        self._factored_unit_order: dict[int, int] | None = None
        self._embeddings: dict[int, dict] = {}
        self._subfield_cache: dict[int, list] = {}
        self._op_tables = None

    def __repr__(self) -> str:
        return f"GF({self.order})"

    # -- element construction

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.degree)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.degree - 1))

    def element(self, coords) -> FieldElement:
        coords = tuple(int(c) % self.p for c in coords)
        if len(coords) > self.degree:
            raise FieldError("too many coordinates")
        coords = coords + (0,) * (self.degree - len(coords))
        return FieldElement(self, coords)

    def from_int(self, n: int) -> FieldElement:
        """Element whose encoding is n (base-p digits, little-endian)."""
        coords = []
        n = int(n)
        for _ in range(self.degree):
            coords.append(n % self.p)
            n //= self.p
        if n:
            raise FieldError("encoding out of range")
        return FieldElement(self, tuple(coords))

    def scalar(self, n: int) -> FieldElement:
        """Image of the integer n under the prime-field embedding."""
        return self.element((n % self.p,))

    def elements(self) -> Iterator[FieldElement]:
        """All elements in ascending encoding order."""
        for n in range(self.order):
            yield self.from_int(n)

    # -- arithmetic core

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, e = self.p, self.degree
        if e == 1:
            return FieldElement(self, ((a.coords[0] * b.coords[0]) % p,))
        conv = [0] * (2 * e - 1)
        ac, bc = a.coords, b.coords
        for i in range(e):
            ai = ac[i]
            if ai:
                for j in range(e):
                    conv[i + j] += ai * bc[j]
        out = [c % p for c in conv[:e]]
        for k in range(e - 1):
            hi = conv[e + k] % p
            if hi:
                red = self._red[k]
                for t in range(e):
                    out[t] = (out[t] + hi * red[t]) % p
        return FieldElement(self, tuple(out))

    # -- multiplicative structure

    def _unit_order_factors(self) -> dict[int, int]:
        if self._factored_unit_order is None:
            self._factored_unit_order = sympy.factorint(self.order - 1)
        return self._factored_unit_order

    def generator(self) -> FieldElement:
        """First multiplicative generator in ascending encoding order."""
        if self._generator is None:
            if self.order == 2:
                self._generator = self.one()
            else:
                for n in range(1, self.order):
                    a = self.from_int(n)
                    if not a:
                        continue
                    if multiplicative_order(a) == self.order - 1:
                        self._generator = a
                        break
        return self._generator

    def subfield_elements(self, sub_order: int) -> list[FieldElement]:
        """Elements of the unique subfield of the given order, ascending."""
        if sub_order in self._subfield_cache:
            return self._subfield_cache[sub_order]
        n1 = self.order - 1
        if sub_order < 2 or n1 % (sub_order - 1) != 0:
            raise FieldError(f"no subfield of order {sub_order} in {self}")
        if sub_order == self.order:
            elems = list(self.elements())
        else:
            g = self.generator()
            step = n1 // (sub_order - 1)
            h = g**step
            elems = [self.zero()]
            cur = self.one()
            for _ in range(sub_order - 1):
                elems.append(cur)
                cur = cur * h
            elems.sort(key=lambda a: a.encoding)
        self._subfield_cache[sub_order] = elems
        return elems


_FIELD_CACHE: dict[tuple[int, int], FiniteField] = {}


def _get_field(p: int, degree: int) -> FiniteField:
    key = (p, degree)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FiniteField(p, degree)
    return _FIELD_CACHE[key]


def make_prime_field(p: int) -> FiniteField:
    if p < 2 or not sympy.isprime(p):
        raise FieldError(f"not prime: {p}")
    return _get_field(p, 1)


def make_extension(base: FiniteField, degree: int) -> FiniteField:
    """Degree-`degree` extension of `base`, realized over the prime field."""
    if degree <= 0:
        raise FieldError("extension degree must be positive")
    if degree == 1:
        return base
    return _get_field(base.p, base.degree * degree)


def field_of_order(q: int) -> FiniteField:
    """F_q for a prime power q."""
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise FieldError(f"not a prime power: {q}")
    (p, e), = factors.items()
    return _get_field(p, e)


def multiplicative_order(a: FieldElement) -> int:
    """Least t >= 1 with a^t = 1; divides order - 1."""
    if not a:
        raise FieldError("zero has no multiplicative order")
    t = a.owner.order - 1
    for prime in a.owner._unit_order_factors():
        while t % prime == 0 and a ** (t // prime) == a.owner.one():
            t //= prime
    return t


def subfield_member(a: FieldElement, sub_order: int) -> bool:
    """True iff a lies in the subfield of the given order (a^sub_order = a)."""
    return a**sub_order == a


def relative_trace(a: FieldElement, base_order: int, degree: int) -> FieldElement:
    """Trace from the subfield of order base_order^degree down to base_order.

    Computes sum of a^(base_order^j) for j < degree; the result lies in the
    order-base_order subfield.
    """
    if not subfield_member(a, base_order**degree):
        raise FieldError("element outside the stated subfield")
    total = a.owner.zero()
    cur = a
    for _ in range(degree):
        total = total + cur
        cur = cur**base_order
    return total


def embedding_map(sub: FiniteField, target: FiniteField) -> dict[FieldElement, FieldElement]:
    """Canonical embedding of every element of `sub` into `target`.

    The generator y of `sub` maps to the first root (ascending encoding) of
    sub's modulus inside target.
    """
    if sub is target:
        return {a: a for a in sub.elements()}
    cached = target._embeddings.get(id(sub))
    if cached is not None:
        return cached
    if sub.p != target.p or target.degree % sub.degree != 0:
        raise FieldError(f"{sub} does not embed into {target}")
    if sub.degree == 1:
        table = {a: target.scalar(a.coords[0]) for a in sub.elements()}
    else:
        candidates = target.subfield_elements(sub.order)
        img = None
        for z in candidates:
            # evaluate sub's modulus at z
            acc = target.zero()
            zp = target.one()
            for c in sub.modulus:
                if c:
                    acc = acc + target.scalar(c) * zp
                zp = zp * z
            if not acc:
                img = z
                break
        if img is None:
            raise FieldError("embedding root not found")  # unreachable
        table = {}
        for a in sub.elements():
            acc = target.zero()
            zp = target.one()
            for c in a.coords:
                if c:
                    acc = acc + target.scalar(c) * zp
                zp = zp * img
            table[a] = acc
    target._embeddings[id(sub)] = table
    return table


# ---------------------------------------------------------------------------
# root setup for x^m - lambda


@dataclass(frozen=True)
class RootSetup:
    """The splitting data of x^m - lambda over F_q.

    alpha is the canonical primitive rm-th root of unity with alpha^m = lambda
    and xi = alpha^r generates the m-th roots of unity, so omega[k] = alpha*xi^k
    runs over all m-th roots of lambda.
    """

    q_field: FiniteField
    m: int
    lam: FieldElement
    r: int
    field: FiniteField
    alpha: FieldElement
    xi: FieldElement
    omega: tuple[FieldElement, ...]
    _embed: dict = dc_field(repr=False, default_factory=dict)
    _unembed: dict = dc_field(repr=False, default_factory=dict)

    @property
    def q(self) -> int:
        return self.q_field.order

    @property
    def ext_degree(self) -> int:
        """[F : F_q]."""
        return self.field.degree // self.q_field.degree

    def embed(self, a: FieldElement) -> FieldElement:
        return self._embed[a]

    def unembed(self, a: FieldElement) -> FieldElement:
        try:
            return self._unembed[a]
        except KeyError:
            raise FieldError(f"{a!r} is not in the image of F_{self.q}") from None

    def lam_up(self) -> FieldElement:
        return self.embed(self.lam)

    def conjugate_exponent(self, k: int) -> int:
        """Index k' with omega[k]^q = omega[k']."""
        return ((self.q - 1) // self.r + self.q * k) % self.m


def root_setup(q_field: FiniteField, m: int, lam: FieldElement) -> RootSetup:
    """Construct the canonical root data for x^m - lambda over F_q."""
    if m < 1:
        raise FieldError("m must be positive")
    if math.gcd(m, q_field.p) != 1:
        raise FieldError("m not coprime to characteristic")
    if lam.owner is not q_field or not lam:
        raise FieldError("lambda must be a nonzero element of the base field")
    q = q_field.order
    r = multiplicative_order(lam)
    rm = r * m
    e = 1
    while pow(q, e, rm) != 1 % rm:
        e += 1
    F = make_extension(q_field, e)
    emb = embedding_map(q_field, F)
    lam_f = emb[lam]
    # all order-rm candidates are powers h^j with gcd(j, rm) = 1
    if rm == 1:
        candidates = [F.one()]
    else:
        g = F.generator()
        h = g ** ((F.order - 1) // rm)
        candidates = []
        cur = F.one()
        for j in range(rm):
            if j > 0:
                cur = cur * h
            if math.gcd(j, rm) == 1:
                candidates.append(cur)
    viable = [a for a in candidates if a**m == lam_f]
    if not viable:
        raise FieldError("no compatible primitive root")
    alpha = min(viable, key=lambda a: a.encoding)
    xi = alpha**r
    omega = []
    cur = alpha
    for _ in range(m):
        omega.append(cur)
        cur = cur * xi
    if len(set(omega)) != m:
        raise FieldError("roots of x^m - lambda are not distinct")  # unreachable
    unemb = {v: k for k, v in emb.items()}
    return RootSetup(q_field=q_field, m=m, lam=lam, r=r, field=F,
                     alpha=alpha, xi=xi, omega=tuple(omega),
                     _embed=emb, _unembed=unemb)
