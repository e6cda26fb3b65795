"""Property-based invariants for the arithmetic kernels."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from thetaorbit.cyclotomic import CycNum, e_frac, rational, root_of_unity
from thetaorbit.series import FJSeries

F = Fraction

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=6)

orders = st.sampled_from([1, 2, 3, 4, 6, 8, 12, 24])


@st.composite
def cyc_numbers(draw):
    L = draw(orders)
    x = rational(0)
    for _ in range(draw(st.integers(1, 3))):
        x = x + root_of_unity(draw(st.integers(0, L - 1)), L) * \
            draw(rationals)
    return x


@st.composite
def fj_series(draw):
    q_den = draw(st.sampled_from([1, 2, 4, 8]))
    z_den = draw(st.sampled_from([1, 2]))
    prec = F(draw(st.integers(2, 5)))
    terms = {}
    for _ in range(draw(st.integers(1, 5))):
        n = draw(st.integers(0, int(prec * q_den) - 1))
        l = draw(st.integers(-3, 3))
        c = rational(draw(rationals))
        if not c.is_zero():
            terms[(n, l)] = c
    return FJSeries(q_den, z_den, prec, terms)


@given(cyc_numbers(), cyc_numbers(), cyc_numbers())
@settings(max_examples=80, deadline=None)
def test_cyc_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(cyc_numbers())
@settings(max_examples=80, deadline=None)
def test_cyc_inverse_round_trip(a):
    if not a.is_zero():
        assert a * a.inv() == rational(1)
        assert (rational(1) / a) * a == rational(1)


@given(rationals, rationals)
@settings(max_examples=80, deadline=None)
def test_e_frac_is_a_homomorphism(x, y):
    assert e_frac(x) * e_frac(y) == e_frac(x + y)


@given(cyc_numbers())
@settings(max_examples=60, deadline=None)
def test_cyc_json_round_trip(a):
    assert CycNum.from_json(a.to_json()) == a


@given(fj_series(), fj_series())
@settings(max_examples=60, deadline=None)
def test_series_commutativity(A, B):
    assert A + B == B + A
    assert A * B == B * A


@given(fj_series(), fj_series(), fj_series())
@settings(max_examples=40, deadline=None)
def test_series_distributivity(A, B, C):
    lhs = A * (B + C)
    rhs = A * B + A * C
    assert lhs.equal_to_order(rhs, min(lhs.prec, rhs.prec))


@given(fj_series(), fj_series())
@settings(max_examples=40, deadline=None)
def test_series_leibniz(A, B):
    assert (A * B).d_z() == A.d_z() * B + A * B.d_z()


@given(fj_series())
@settings(max_examples=60, deadline=None)
def test_series_json_round_trip(A):
    B = FJSeries.from_json(A.to_json())
    assert A == B
    assert A.to_json() == B.to_json()


@given(fj_series(), st.sampled_from([2, 3, 4]))
@settings(max_examples=40, deadline=None)
def test_subs_z_multiple_is_multiplicative_on_products(A, m):
    lhs = (A * A).subs_z_multiple(m)
    rhs = A.subs_z_multiple(m) * A.subs_z_multiple(m)
    assert lhs == rhs
