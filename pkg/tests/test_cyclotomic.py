"""Exact cyclotomic-rational arithmetic."""

import random
from fractions import Fraction

import pytest

from thetaorbit.cyclotomic import (
    CycNum,
    cyclotomic_polynomial,
    e_frac,
    euler_phi,
    rational,
    root_of_unity,
)


def test_rational_embedding_round_trip():
    for v in (0, 1, -7, Fraction(22, 7), Fraction(-3, 8)):
        x = rational(v)
        assert x.is_rational()
        assert x.as_rational() == Fraction(v)


def test_zero_and_one():
    assert rational(0).is_zero()
    assert not rational(1).is_zero()
    assert rational(1) * rational(1) == rational(1)


def test_root_sums():
    # primitive cube roots sum to -1
    assert root_of_unity(1, 3) + root_of_unity(2, 3) == rational(-1)
    # all L-th roots of unity sum to zero
    for L in (2, 3, 4, 5, 6, 8, 12):
        total = rational(0)
        for j in range(L):
            total = total + root_of_unity(j, L)
        assert total.is_zero()


def test_root_multiplication_matches_exponent_addition():
    assert root_of_unity(1, 8) * root_of_unity(1, 8) == root_of_unity(1, 4)
    assert root_of_unity(3, 8) * root_of_unity(5, 8) == rational(1)
    assert e_frac(Fraction(1, 3)) * e_frac(Fraction(1, 4)) == e_frac(
        Fraction(7, 12))


def test_e_frac_periodicity():
    for num in (1, 5, -3):
        for den in (2, 3, 8, 12):
            x = Fraction(num, den)
            assert e_frac(x) == e_frac(x + 1)
            assert e_frac(x) == e_frac(x - 2)


def test_inverse_roots_cancel():
    for L in (3, 5, 8, 12, 24):
        for k in range(1, L):
            assert e_frac(Fraction(k, L)) * e_frac(Fraction(-k, L)) == \
                rational(1)


def test_as_rational_rejects_irrational():
    with pytest.raises(ValueError):
        root_of_unity(1, 5).as_rational()


def test_cyclotomic_polynomial_small():
    assert list(cyclotomic_polynomial(1)) == [-1, 1]
    assert list(cyclotomic_polynomial(2)) == [1, 1]
    assert list(cyclotomic_polynomial(4)) == [1, 0, 1]
    assert list(cyclotomic_polynomial(6)) == [1, -1, 1]
    assert list(cyclotomic_polynomial(12)) == [1, 0, -1, 0, 1]


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == [
        1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def _random_cyc(rng, order):
    x = rational(0)
    for _ in range(rng.randint(1, 3)):
        k = rng.randrange(order)
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        x = x + root_of_unity(k, order) * c
    return x


def test_ring_laws_randomized():
    rng = random.Random(20260826)
    for _ in range(200):
        order = rng.choice((1, 2, 3, 4, 6, 8, 12, 24))
        a = _random_cyc(rng, order)
        b = _random_cyc(rng, order)
        c = _random_cyc(rng, order)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_division_inverts_multiplication():
    rng = random.Random(4)
    count = 0
    while count < 60:
        order = rng.choice((1, 3, 4, 8, 12))
        a = _random_cyc(rng, order)
        b = _random_cyc(rng, order)
        if b.is_zero():
            continue
        count += 1
        assert (a * b) / b == a


def test_powers():
    z = root_of_unity(1, 12)
    assert z ** 12 == rational(1)
    assert z ** -1 == root_of_unity(11, 12)
    acc = rational(1)
    for k in range(1, 7):
        acc = acc * z
        assert z ** k == acc


def test_json_round_trip():
    rng = random.Random(99)
    for _ in range(40):
        order = rng.choice((1, 2, 4, 6, 8, 24))
        x = _random_cyc(rng, order)
        y = CycNum.from_json(x.to_json())
        assert x == y
        assert x.to_json() == y.to_json()
