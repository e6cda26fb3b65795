"""Eisenstein series, class-number coefficients and Hecke lifts."""

from fractions import Fraction

import pytest
from sympy.functions.combinatorial.numbers import jacobi_symbol

from thetaorbit.cyclotomic import rational
from thetaorbit.eisenstein import (
    bernoulli,
    cohen_number,
    e21p,
    eisenstein_2k,
    g2,
    gen_bernoulli,
    hecke_V,
    hurwitz,
    is_fundamental,
    jacobi_eisenstein,
    jacobi_eisenstein_1,
    kronecker,
)
from thetaorbit.errors import BadParameter
from thetaorbit.series import FormMeta

import oracles

F = Fraction


def test_bernoulli_values():
    assert [bernoulli(n) for n in range(9)] == [
        F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42), F(0),
        F(-1, 30)]


def test_kronecker_matches_reference():
    for D in (-8, -7, -4, -3, 1, 5, 8, 12, 13):
        for m in range(1, 30, 2):
            assert kronecker(D, m) == int(jacobi_symbol(D, m))
    # even m spot checks against the multiplicative extension
    assert kronecker(-4, 2) == 0
    assert kronecker(8, 2) == 0
    assert kronecker(5, 2) == -1
    assert kronecker(-7, 2) == 1
    assert kronecker(-7, 6) == -1


def test_is_fundamental():
    fund = [D for D in range(-30, 31) if is_fundamental(D)]
    assert fund == [-24, -23, -20, -19, -15, -11, -8, -7, -4, -3, 1, 5, 8,
                    12, 13, 17, 21, 24, 28, 29]


def test_gen_bernoulli_against_oracle():
    for D in (-3, -4, -7, -8, 5, 8):
        f = abs(D)
        chi = [kronecker(D, a) for a in range(f)]
        for n in (1, 2, 3):
            assert gen_bernoulli(n, D) == oracles.gen_bernoulli_oracle(n, chi)


def test_hurwitz_known_values():
    known = {0: F(-1, 12), 3: F(1, 3), 4: F(1, 2), 7: F(1), 8: F(1),
             11: F(1), 12: F(4, 3), 15: F(2), 16: F(3, 2), 19: F(1),
             20: F(2), 23: F(3), 24: F(2)}
    for M, v in known.items():
        assert hurwitz(M) == v
    assert hurwitz(1) == 0 and hurwitz(2) == 0


def test_hurwitz_against_bruteforce():
    for M in range(0, 120):
        assert hurwitz(M) == oracles.hurwitz_bruteforce(M)


def test_cohen_numbers_match_zeta_boundary():
    # H(r, 0) = zeta(1 - 2r)
    for r in (2, 3, 4, 5):
        assert cohen_number(r, 0) == -bernoulli(2 * r) / (2 * r)


def test_cohen_r1_column_is_hurwitz():
    for M in range(0, 60):
        assert cohen_number(1, M) == hurwitz(M)


def test_cohen_r2_fundamental_values():
    # for fundamental D > 0, H(2, D) = L(-1, chi_D) = -B_{2, chi_D}/2
    for D in (5, 8, 12, 13, 17):
        chi = [kronecker(D, a) for a in range(D)]
        assert cohen_number(2, D) == -oracles.gen_bernoulli_oracle(2, chi) / 2
    # vanishing off the discriminant classes
    for M in (2, 3, 6, 7, 10, 11):
        assert cohen_number(2, M) == 0


def test_eisenstein_2k_q_expansions():
    E4 = eisenstein_2k(2, 6)
    E6 = eisenstein_2k(3, 6)
    assert E4.coefficient(0, 0) == rational(1)
    for n in range(1, 6):
        assert E4.coefficient(n, 0) == rational(240 * oracles.sigma_sum(3, n))
        assert E6.coefficient(n, 0) == rational(-504 * oracles.sigma_sum(5, n))
    # E8 = E4^2
    E8 = eisenstein_2k(4, 5)
    assert (E4 * E4).equal_to_order(E8, 5)


def test_g2_normalization():
    A = g2(5)
    assert A.coefficient(0, 0) == rational(F(-1, 24))
    for n in range(1, 5):
        assert A.coefficient(n, 0) == rational(oracles.sigma_sum(1, n))


def test_jacobi_eisenstein_1_rows():
    E41 = jacobi_eisenstein_1(4, 3)
    assert E41.coefficient(0, 0) == rational(1)
    assert E41.coefficient(1, 2) == rational(1)
    assert E41.coefficient(1, 1) == rational(56)
    assert E41.coefficient(1, 0) == rational(126)
    E61 = jacobi_eisenstein_1(6, 2)
    assert E61.coefficient(1, 2) == rational(1)
    assert E61.coefficient(1, 1) == rational(-88)
    assert E61.coefficient(1, 0) == rational(-330)


def test_hecke_V_basics():
    E41 = jacobi_eisenstein_1(4, 8)
    meta = FormMeta(4, 1)
    assert hecke_V(E41, meta, 1) == E41
    V2 = hecke_V(E41, meta, 2)
    assert V2.coefficient(0, 0) == rational(oracles.sigma_sum(3, 2))
    assert V2.coefficient(1, 4).is_zero()
    # the plain index-4 lift picks up a second singular class at l = 4
    V4 = hecke_V(E41, meta, 4)
    assert V4.coefficient(1, 4) == rational(1)


def test_dimension_one_product_identity():
    # the weight-8 index-1 space is one dimensional, so the index-1 series
    # of weight 8 must factor through the weight-4 ones exactly
    E81 = jacobi_eisenstein_1(8, 6)
    prod = eisenstein_2k(2, 6) * jacobi_eisenstein_1(4, 6)
    assert E81.equal_to_order(prod, 6)


def test_jacobi_eisenstein_normalization_and_singular_support():
    for k, m in ((4, 2), (4, 3), (6, 2), (4, 4), (6, 4)):
        E = jacobi_eisenstein(k, m, 3)
        assert E.coefficient(0, 0) == rational(1)
        # singular part is supported on l = 0 mod 2m only
        for (n, l), c in E.terms.items():
            n_q = F(n, E.q_den)
            l_z = F(l, E.z_den)
            if 4 * m * n_q - l_z * l_z < 0:
                assert l_z % (2 * m) == 0, (k, m, n_q, l_z)


def test_jacobi_eisenstein_1_restricts_to_elliptic():
    for k in (4, 6, 8):
        E = jacobi_eisenstein_1(k, 5).eval_z_zero()
        assert E.equal_to_order(eisenstein_2k(k // 2, 5), 5)


def test_e21p_anchor_rows():
    A = e21p(2, 3)
    row = {l: A.coefficient(1, l) for l in range(-2, 3)}
    assert A.coefficient(0, 0) == rational(F(1, 12))
    assert row == {-2: rational(F(1, 12)), -1: rational(F(2, 3)),
                   0: rational(F(1, 2)), 1: rational(F(2, 3)),
                   2: rational(F(1, 12))}
    with pytest.raises(BadParameter):
        e21p(6, 3)


def test_index_four_lift_kills_inner_singular_class():
    E = jacobi_eisenstein(4, 4, 3)
    assert E.coefficient(1, 4).is_zero()
    assert E.coefficient(0, 0) == rational(1)
    # squarefree index lifts keep the plain Hecke normalization
    E2 = jacobi_eisenstein(4, 2, 3)
    V2 = hecke_V(jacobi_eisenstein_1(4, 6), FormMeta(4, 1), 2)
    assert V2.scale(F(1, oracles.sigma_sum(3, 2))).equal_to_order(E2, 3)
