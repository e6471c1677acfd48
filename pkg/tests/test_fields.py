"""Tests for finite field arithmetic, roots of unity, and embeddings."""

import random

import pytest

from sshecke.fields import (
    all_nth_roots,
    embed,
    embedding,
    field,
    nth_root,
    primitive_root_of_unity,
    project,
)


def brute_order(a):
    """Multiplicative order by repeated multiplication (test oracle)."""
    assert not a.is_zero()
    x = a
    n = 1
    while x != a.field.one():
        x = x * a
        n += 1
    return n


def test_f121_is_f11_of_i():
    F = field(11, 2)
    assert F.modulus == (1, 0, 1)  # x^2 + 1, since -1 is a non-residue mod 11
    i = F.gen()
    assert i * i == F(-1)


def test_f121_sqrt_of_minus_one_tiebreak():
    F = field(11, 2)
    r = F(-1).sqrt()
    assert r == F.gen()  # (0,1) beats (0,10) lexicographically


def test_f16_contains_order_five_element():
    F = field(2, 4)
    assert F.modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1
    z = primitive_root_of_unity(F, 5)
    assert z**5 == F.one() and z != F.one()
    assert brute_order(z) == 5


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        field(11, 2, modulus=(-1, 0, 1))  # x^2 - 1 = (x-1)(x+1)


def test_composite_characteristic_rejected():
    with pytest.raises(ValueError):
        field(4, 1)


def test_field_create_deterministic():
    assert field(7, 3).modulus == field(7, 3).modulus
    assert field(13, 2) is field(13, 2)


def test_field_axioms_random():
    rng = random.Random(1)
    for F in (field(11, 2), field(2, 4), field(3, 2), field(101)):
        one = F.one()
        for _ in range(50):
            a = F.random_element(rng)
            b = F.random_element(rng)
            c = F.random_element(rng)
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            if not a.is_zero():
                assert a * a.inv() == one
                assert a ** (F.q - 1) == one
        with pytest.raises(ZeroDivisionError):
            F.zero().inv()


def test_arith_rejects_field_mismatch():
    a = field(11, 2).one()
    b = field(13, 2).one()
    with pytest.raises(ValueError):
        a + b


def test_frobenius_fixed_on_full_power():
    rng = random.Random(2)
    F = field(5, 3)
    for _ in range(20):
        a = F.random_element(rng)
        assert a.frobenius(F.k) == a
        assert a.frobenius(1) == a**5


def test_sqrt_of_square_is_plus_minus():
    rng = random.Random(3)
    for F in (field(11, 2), field(2, 4), field(19)):
        for _ in range(30):
            a = F.random_element(rng)
            r = (a * a).sqrt()
            assert r in (a, -a)


def test_sqrt_none_for_nonsquare():
    F = field(11)
    # 2 is a non-residue mod 11: squares are {1,3,4,5,9}
    assert F(2).sqrt() is None


def test_primitive_root_of_unity_cases():
    F121 = field(11, 2)
    z4 = primitive_root_of_unity(F121, 4)
    assert brute_order(z4) == 4
    assert z4 in (F121.gen(), -F121.gen())  # order 4 means z^2 = -1
    with pytest.raises(ValueError):
        primitive_root_of_unity(field(11), 7)  # 7 does not divide 10


def test_nth_root_against_brute_force():
    F = field(7, 2)
    rng = random.Random(4)
    for n in (2, 3, 4, 6):
        for _ in range(10):
            a = F.random_element(rng)
            roots = all_nth_roots(a, n)
            expected = sorted(x.c for x in F.elements() if x**n == a)
            assert sorted(r.c for r in roots) == expected
            if roots:
                assert nth_root(a, n) ** n == a


def test_embed_is_ring_homomorphism():
    F4 = field(2, 2)
    F16 = field(2, 4)
    rng = random.Random(5)
    emb = embedding(F4, F16)
    assert emb(F4.zero()) == F16.zero()
    assert emb(F4.one()) == F16.one()
    for _ in range(100):
        a = F4.random_element(rng)
        b = F4.random_element(rng)
        assert emb(a) + emb(b) == emb(a + b)
        assert emb(a) * emb(b) == emb(a * b)


def test_embed_preserves_multiplicative_order():
    F4 = field(2, 2)
    F16 = field(2, 4)
    g = F4.gen()
    assert brute_order(g) == 3
    assert brute_order(embed(g, F16)) == 3


def test_embed_rejects_bad_degree():
    with pytest.raises(ValueError):
        embedding(field(2, 4), field(2, 6))


def test_embed_composition_from_prime_field():
    # Chains grounded in F_p are exactly the ones the curve pipeline uses.
    Fp = field(11)
    F2 = field(11, 2)
    F4 = field(11, 4)
    for v in (0, 1, 5, 10):
        a = Fp(v)
        assert embed(embed(a, F2), F4) == embed(a, F4)


def test_project_inverts_embed():
    F = field(11, 2)
    K = field(11, 4)
    rng = random.Random(6)
    for _ in range(30):
        a = F.random_element(rng)
        assert project(embed(a, K), F) == a
    # an element outside the subfield is rejected
    outside = K.gen()
    if all(embed(x, K) != outside for x in F.elements()):
        with pytest.raises(ValueError):
            project(outside, F)


def test_large_field_embedding_via_quadratic_formula():
    F = field(101, 2)
    K = field(101, 6)  # q = 101^6 > 2^16 forces the non-scan path
    rng = random.Random(7)
    emb = embedding(F, K)
    for _ in range(20):
        a = F.random_element(rng)
        b = F.random_element(rng)
        assert emb(a) * emb(b) == emb(a * b)
