import random

import pytest
from hypothesis import given, settings, strategies as st

from qtspectral.errors import FieldError
from qtspectral.galois import (canonical_modulus, embedding_map,
                               field_of_order, make_extension,
                               make_prime_field, multiplicative_order,
                               relative_trace, root_setup, subfield_member)


def test_canonical_modulus_small_fields():
    # first monic irreducible in ascending integer encoding c0 + c1*p + ...
    assert canonical_modulus(2, 2) == (1, 1, 1)          # y^2 + y + 1
    assert canonical_modulus(3, 2) == (1, 0, 1)          # y^2 + 1
    assert canonical_modulus(2, 3) == (1, 1, 0, 1)       # y^3 + y + 1


def test_prime_field_basics():
    F3 = make_prime_field(3)
    assert F3.order == 3
    assert F3.scalar(2) + F3.scalar(2) == F3.one()
    assert F3.scalar(2).inverse() == F3.scalar(2)
    with pytest.raises(FieldError):
        make_prime_field(4)


def test_extension_field_identity_and_cache():
    F3 = make_prime_field(3)
    F9 = make_extension(F3, 2)
    assert F9 is make_extension(F3, 2)
    assert F9 is field_of_order(9)
    assert F9.order == 9
    assert make_extension(F3, 1) is F3


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
@settings(max_examples=100, deadline=None)
def test_field_axioms_f9(a, b, c):
    F9 = field_of_order(9)
    x, y, z = F9.from_int(a), F9.from_int(b), F9.from_int(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x:
        assert x * x.inverse() == F9.one()


def test_generator_has_full_order():
    for q in (4, 8, 9, 25):
        F = field_of_order(q)
        g = F.generator()
        assert multiplicative_order(g) == q - 1
        # canonical choice: no element of smaller encoding has full order
        for enc in range(1, g.encoding):
            assert multiplicative_order(F.from_int(enc)) < q - 1


def test_multiplicative_order_brute_force():
    F = field_of_order(16)
    for enc in range(1, 16):
        a = F.from_int(enc)
        n = multiplicative_order(a)
        cur = a
        for k in range(1, n):
            assert cur != F.one()
            cur = cur * a
        assert cur == F.one()


def test_subfield_elements_form_a_field():
    F9 = field_of_order(9)
    sub = F9.subfield_elements(3)
    assert len(sub) == 3
    subset = set(sub)
    for a in sub:
        for b in sub:
            assert a + b in subset
            assert a * b in subset
    for a in sub:
        assert subfield_member(a, 3)


def test_embedding_respects_arithmetic():
    F4 = field_of_order(4)
    F16 = field_of_order(16)
    emb = embedding_map(F4, F16)
    for a in F4.elements():
        for b in F4.elements():
            assert emb[a + b] == emb[a] + emb[b]
            assert emb[a * b] == emb[a] * emb[b]


def test_relative_trace_lands_in_base():
    F9 = field_of_order(9)
    for a in F9.elements():
        t = relative_trace(a, 3, 2)
        assert subfield_member(t, 3)


def test_root_setup_example_parameters():
    F3 = make_prime_field(3)
    setup = root_setup(F3, 4, F3.scalar(2))
    assert setup.r == 2
    assert setup.field.order == 9
    assert setup.alpha ** 4 == setup.lam_up()
    assert setup.xi == setup.alpha ** setup.r
    assert len(set(setup.omega)) == 4
    # each omega entry is a root of x^4 - lambda
    for w in setup.omega:
        assert w ** 4 == setup.lam_up()


def test_conjugate_exponent_is_a_permutation():
    F3 = make_prime_field(3)
    setup = root_setup(F3, 4, F3.scalar(2))
    images = {setup.conjugate_exponent(k) for k in range(4)}
    assert images == set(range(4))
    # conjugation realizes the Frobenius on the roots
    for k in range(4):
        assert setup.omega[setup.conjugate_exponent(k)] == setup.omega[k] ** 3


def test_root_setup_rejects_bad_m():
    F3 = make_prime_field(3)
    with pytest.raises(FieldError):
        root_setup(F3, 6, F3.scalar(2))  # gcd(m, p) != 1


def test_root_setup_untwisted_case():
    F3 = make_prime_field(3)
    setup = root_setup(F3, 4, F3.one())
    assert setup.r == 1
    assert setup.alpha ** 4 == setup.field.one()


def test_embed_unembed_round_trip():
    F3 = make_prime_field(3)
    setup = root_setup(F3, 4, F3.scalar(2))
    for a in F3.elements():
        assert setup.unembed(setup.embed(a)) == a


def test_random_seeds_give_valid_setups():
    rng = random.Random(11)
    cases = [(2, 3), (2, 5), (3, 4), (3, 8), (5, 4)]
    for p, m in cases:
        F = make_prime_field(p)
        units = [F.scalar(v) for v in range(1, p)]
        lam = units[rng.randrange(len(units))]
        setup = root_setup(F, m, lam)
        assert setup.alpha ** m == setup.lam_up()
        assert len(set(setup.omega)) == m
