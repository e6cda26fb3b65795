"""Torsion specializations: elliptic products, derivatives, class numbers."""

from fractions import Fraction

from thetaorbit.applications import (
    TorsionPoint,
    theta_shifted,
    verify_class_number_identities,
    verify_derivative_formulas,
    verify_special_values,
    verify_wp_products,
)
from thetaorbit.cyclotomic import e_frac, root_of_unity
from thetaorbit.thetas import HALF, theta, theta_char

F = Fraction


def test_torsion_point_arithmetic():
    v = TorsionPoint(F(1, 3), F(1, 2))
    w = TorsionPoint(F(2, 3), F(1, 2))
    assert (v + w).is_lattice()
    assert (v - v).is_lattice()
    assert not v.is_lattice()
    assert (-v).a == F(-1, 3)


def test_theta_shifted_at_origin():
    # the lattice point reproduces the odd characteristic (1/2, 1/2)
    prec = 4
    A = theta_shifted(TorsionPoint(0, 0), prec)
    assert A == theta_char(HALF, HALF, prec)
    assert A.scale(root_of_unity(3, 4)) == theta(prec)


def test_theta_shifted_lattice_translation_phase():
    prec = 3
    v = TorsionPoint(F(1, 3), F(1, 4))
    A = theta_shifted(v, prec)
    B = theta_shifted(TorsionPoint(v.a, v.b + 1), prec)
    assert B == A.scale(e_frac(v.a + HALF))
    C = theta_shifted(TorsionPoint(v.a + 1, v.b), prec)
    assert C == A


def test_derivative_formulas():
    rep = verify_derivative_formulas(prec=8)
    assert rep.passed, rep.summary()


def test_special_values():
    rep = verify_special_values(prec=6)
    assert rep.passed, rep.summary()


def test_class_number_identities():
    rep = verify_class_number_identities(prec=8, n_max=40)
    assert rep.passed, rep.summary()


def test_wp_products_even_level():
    rep = verify_wp_products(2, 3)
    assert rep.passed, rep.summary()
    consts = [i.value for i in rep.items if i.value]
    assert consts == ["-4", "-1/4"]


def test_wp_products_odd_level():
    rep = verify_wp_products(3, 3)
    assert rep.passed, rep.summary()
    consts = [i.value for i in rep.items if i.value]
    assert consts == ["-19683", "1/531441"]


def test_wp_constants_stable_across_precision():
    a = [i.value for i in verify_wp_products(2, 3).items if i.value]
    b = [i.value for i in verify_wp_products(2, 4).items if i.value]
    assert a == b
