import random

import pytest
from hypothesis import given, settings, strategies as st

from qtspectral.errors import FieldError
from qtspectral.galois import make_prime_field, root_setup
from qtspectral.polyring import (Polynomial, factor_xm_minus_lambda,
                                 minimal_code_generator, poly_gcd, poly_xgcd,
                                 primitive_idempotent, quotient_mul)

F3 = make_prime_field(3)


def P(ints):
    return Polynomial.from_ints(F3, ints)


def test_degree_and_normalization():
    assert Polynomial.zero(F3).degree == -1
    assert P([1, 0, 0]).degree == 0
    assert P([0, 0, 2]).degree == 2
    assert not Polynomial.zero(F3)


def test_repr_matches_convention():
    assert repr(P([2, 1, 1])) == "x^2 + x + 2"
    assert repr(Polynomial.zero(F3)) == "0"


@given(st.lists(st.integers(0, 2), max_size=6),
       st.lists(st.integers(0, 2), max_size=6),
       st.lists(st.integers(0, 2), max_size=6))
@settings(max_examples=80, deadline=None)
def test_ring_axioms(a, b, c):
    pa, pb, pc = P(a), P(b), P(c)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa * pb == pb * pa
    assert (pa + pb) + pc == pa + (pb + pc)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=6),
       st.lists(st.integers(0, 2), min_size=2, max_size=6))
@settings(max_examples=80, deadline=None)
def test_division_identity(a, b):
    pa, pb = P(a), P(b)
    if not pb:
        return
    q, r = divmod(pa, pb)
    assert q * pb + r == pa
    assert r.degree < pb.degree


def test_division_by_zero():
    with pytest.raises(FieldError):
        divmod(P([1]), Polynomial.zero(F3))


def test_xgcd_bezout():
    rng = random.Random(3)
    for _ in range(50):
        a = P([rng.randrange(3) for _ in range(rng.randrange(1, 6))])
        b = P([rng.randrange(3) for _ in range(rng.randrange(1, 6))])
        if not a and not b:
            continue
        g, u, v = poly_xgcd(a, b)
        assert u * a + v * b == g
        assert g == poly_gcd(a, b) or (not a and not b)
        if g:
            assert g.is_monic()


def test_evaluation_horner():
    p = P([1, 2, 1])  # x^2 + 2x + 1 = (x+1)^2
    assert p(F3.scalar(2)) == F3.zero()
    assert p(F3.zero()) == F3.one()


def test_quotient_mul_wraps():
    lam = F3.scalar(2)
    # x^3 * x = x^4 = lambda in F_3[x]/(x^4 - 2)
    out = quotient_mul(P([0, 0, 0, 1]), P([0, 1]), 4, lam)
    assert out == P([2])


def test_factorization_example_setup():
    setup = root_setup(F3, 4, F3.scalar(2))
    fact = factor_xm_minus_lambda(setup)
    assert fact.s == 2
    assert [f.u for f in fact.factors] == [0, 2]
    assert [repr(f.poly) for f in fact.factors] == ["x^2 + x + 2",
                                                    "x^2 + 2*x + 2"]
    assert fact.factors[0].orbit == frozenset({0, 1})
    assert fact.factors[1].orbit == frozenset({2, 3})


def test_minimal_generator_and_idempotents():
    setup = root_setup(F3, 4, F3.scalar(2))
    fact = factor_xm_minus_lambda(setup)
    whole = Polynomial.x_pow_m_minus(F3, 4, F3.scalar(2))
    total = Polynomial.zero(F3)
    for i in range(fact.s):
        g = minimal_code_generator(i, fact)
        assert g * fact.factors[i].poly == whole
        theta = primitive_idempotent(i, fact)
        assert quotient_mul(theta, theta, 4, F3.scalar(2)) == theta
        total = total + theta
    assert total == Polynomial.one(F3)


def test_random_factorizations():
    """Factor x^m - lambda over several small fields; check the product and
    the pairwise coprimality of the factors."""
    rng = random.Random(41)
    cases = []
    for q in (2, 3, 4, 5):
        from qtspectral.galois import field_of_order
        field = field_of_order(q)
        for m in range(2, 11):
            if m % field.p == 0:
                continue
            cases.append((field, m))
    rng.shuffle(cases)
    count = 0
    from qtspectral.galois import multiplicative_order
    pool = [(field, m, lam) for field, m in cases
            for lam in field.elements() if lam]
    rng.shuffle(pool)
    for field, m, lam in pool:
        if count >= 50:
            break
        # keep splitting fields small enough to stay fast
        rm = m * multiplicative_order(lam)
        e, cur = 1, field.order % rm
        while cur != 1:
            cur = (cur * field.order) % rm
            e += 1
        if field.order ** e > 3**8:
            continue
        setup = root_setup(field, m, lam)
        count += 1
        fact = factor_xm_minus_lambda(setup)
        prod = Polynomial.one(field)
        for f in fact.factors:
            assert f.poly.is_monic()
            prod = prod * f.poly
        assert prod == Polynomial.x_pow_m_minus(field, m, lam)
        for i in range(fact.s):
            for j in range(i + 1, fact.s):
                g = poly_gcd(fact.factors[i].poly, fact.factors[j].poly)
                assert g.degree == 0
    assert count >= 30
