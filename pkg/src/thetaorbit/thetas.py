"""Theta functions with rational characteristic, the Dedekind eta function,
and the Heisenberg group action used to build orbit sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .cyclotomic import ONE, CycNum, e_frac, rational
from .errors import BadParameter
from .series import FJSeries, FormMeta, _frac, _lcm

HALF = Fraction(1, 2)

THETA_META = FormMeta(HALF, HALF, eta_power=3, heis_parity=1)
ETA_META = FormMeta(HALF, 0, eta_power=1, heis_parity=0)


@dataclass(frozen=True)
class Characteristic:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))


@dataclass(frozen=True)
class HeisenbergElement:
    x: Fraction
    y: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))
        object.__setattr__(self, "r", _frac(self.r))

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return HeisenbergElement(
            self.x + other.x,
            self.y + other.y,
            self.r + other.r + self.x * other.y - other.x * self.y,
        )

    def inverse(self) -> "HeisenbergElement":
        return HeisenbergElement(-self.x, -self.y, -self.r)


@dataclass(frozen=True)
class OrbitSet:
    N: int
    points: tuple[Characteristic, ...]


def _isqrt_ceil_2prec(prec: Fraction) -> int:
    # least integer bound B with B^2/2 >= prec
    v = 2 * prec
    return isqrt(v.numerator // v.denominator) + 2


@lru_cache(maxsize=None)
def theta_char(a, b, prec) -> FJSeries:
    """Sum over n of q^((n+a)^2/2) * zeta^(n+a) with coefficient e((n+a)b)."""
    a, b, prec = _frac(a), _frac(b), _frac(prec)
    da = a.denominator
    q_den = 2 * da * da
    terms = {}
    B = _isqrt_ceil_2prec(prec)
    for n in range(-B - 1, B + 2):
        m = n + a
        qe = m * m / 2
        if qe >= prec:
            continue
        c = e_frac(m * b)
        terms[(int(qe * q_den), int(m * da))] = c
    return FJSeries(q_den, da, prec, terms)


@lru_cache(maxsize=None)
def theta(prec) -> FJSeries:
    """The odd Jacobi theta function, -i * theta_char(1/2, 1/2)."""
    prec = _frac(prec)
    terms = {}
    B = _isqrt_ceil_2prec(prec)
    for n in range(-B - 1, B + 2):
        m = 2 * n + 1
        qe = Fraction(m * m, 8)
        if qe >= prec:
            continue
        terms[(m * m, m)] = rational((-1) ** (n % 2))
    return FJSeries(8, 2, prec, terms)


def theta_triple_product(prec) -> FJSeries:
    """q^(1/8)(zeta^(1/2)-zeta^(-1/2)) * prod (1-q^n zeta)(1-q^n/zeta)(1-q^n)."""
    prec = _frac(prec)
    one = FJSeries.one(prec)
    prod = one
    n = 1
    while n < prec:
        qn_z = FJSeries.monomial(Fraction(n), Fraction(1), prec=prec)
        qn_zi = FJSeries.monomial(Fraction(n), Fraction(-1), prec=prec)
        qn = FJSeries.monomial(Fraction(n), Fraction(0), prec=prec)
        prod = prod * (one - qn_z) * (one - qn_zi) * (one - qn)
        n += 1
    head = FJSeries.monomial(Fraction(1, 8), HALF) - FJSeries.monomial(
        Fraction(1, 8), -HALF
    )
    return head * prod


@lru_cache(maxsize=None)
def eta(prec) -> FJSeries:
    """q^(1/24) * prod (1-q^n), by the pentagonal number expansion."""
    prec = _frac(prec)
    terms = {}
    k = 0
    while True:
        hit = False
        for kk in ([0] if k == 0 else [k, -k]):
            e = Fraction(kk * (3 * kk - 1), 2) + Fraction(1, 24)
            if e < prec:
                terms[(e.numerator * (24 // e.denominator), 0)] = rational(
                    (-1) ** (kk % 2)
                )
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return FJSeries(24, 1, prec, terms)


@lru_cache(maxsize=None)
def eta_power(m: int, prec) -> FJSeries:
    if m < 0:
        raise BadParameter("eta_power expects a nonnegative exponent")
    prec = _frac(prec)
    if m == 0:
        return FJSeries.one(prec)
    if m % 2 == 0:
        half = eta_power(m // 2, prec)
        return half * half
    return eta_power(m - 1, prec) * eta(prec)


def slash_heisenberg(A: FJSeries, meta: FormMeta, h: HeisenbergElement, m0=None) -> FJSeries:
    """Action of [x,y;r] on a series of index t = meta.index.

    Maps the term (n, l, c) to (n + l*x + t*x^2, l + 2*t*x, c*e(l*y + t*(x*y + r))).
    """
    t = meta.index
    x, y, r = h.x, h.y, h.r
    if m0 is None:
        # valid for weak forms; holomorphic forms only get a weaker bound
        m0 = -(t * t)
        if A.terms:
            m0 = min(m0, A.hyperbolic_order(t))
    prec, heuristic = A._shift_prec(x, t * x * x, t, m0)
    q_den = _lcm(_lcm(A.q_den, A.z_den * x.denominator), (t * x * x).denominator)
    z_den = _lcm(A.z_den, (2 * t * x).denominator)
    out: dict[tuple[int, int], CycNum] = {}
    for (n, l), c in A.terms.items():
        nq = Fraction(n, A.q_den)
        lz = Fraction(l, A.z_den)
        n2 = nq + lz * x + t * x * x
        if n2 >= prec:
            continue
        l2 = lz + 2 * t * x
        phase = e_frac(lz * y + t * (x * y + r))
        key = (int(n2 * q_den), int(l2 * z_den))
        cur = out.get(key)
        val = c * phase
        out[key] = val if cur is None else cur + val
    return FJSeries(q_den, z_den, prec, out,
                    prec_heuristic=heuristic or A.prec_heuristic)


def slash_T(A: FJSeries, meta: FormMeta | None = None) -> FJSeries:
    """tau -> tau + 1 up to the eta character: multiply each term by e(n)."""
    out = {}
    for (n, l), c in A.terms.items():
        out[(n, l)] = c * e_frac(Fraction(n, A.q_den))
    return FJSeries(A.q_den, A.z_den, A.prec, out,
                    prec_heuristic=A.prec_heuristic)


def slash_check_T(A: FJSeries, meta: FormMeta) -> bool:
    """Check every q-exponent lies in D/24 + Z for D = meta.eta_power."""
    target = Fraction(meta.eta_power, 24)
    return all(
        (Fraction(n, A.q_den) - target).denominator == 1 for n, _ in A.terms
    )


@lru_cache(maxsize=None)
def orbit_set(N: int) -> OrbitSet:
    if N < 2:
        raise BadParameter("orbit sets need N >= 2")
    pts = tuple(
        Characteristic(Fraction(u, N), Fraction(v, N))
        for u in range(N)
        for v in range(N)
        if (u, v) != (0, 0)
    )
    return OrbitSet(N, pts)


@lru_cache(maxsize=None)
def orbit_theta(Y: Characteristic, prec) -> FJSeries:
    """The slash of the odd theta by [a,b;0], via its closed phase formula:
    e(-(ab + a + 1/2)/2) * theta_char(a + 1/2, b + 1/2)."""
    a, b = Y.a, Y.b
    phase = e_frac(-(a * b + a + HALF) / 2)
    return theta_char(a + HALF, b + HALF, _frac(prec)).scale(phase)


_XI_CHARS = {"00": (0, 0), "01": (0, HALF), "10": (HALF, 0)}


@lru_cache(maxsize=None)
def theta_constant(ab: str, prec) -> FJSeries:
    """theta_ab(tau, 0) for one of the even characteristics 00, 01, 10."""
    if ab not in _XI_CHARS:
        raise BadParameter(f"unknown even characteristic {ab!r}")
    a, b = _XI_CHARS[ab]
    return theta_char(_frac(a), _frac(b), _frac(prec)).eval_z_zero()


@lru_cache(maxsize=None)
def xi_char(a, b, prec) -> FJSeries:
    """theta_{a,b}(tau, z) / theta_{a,b}(tau, 0) for any characteristic with
    a nonvanishing theta constant."""
    num = theta_char(_frac(a), _frac(b), _frac(prec))
    return num.div(num.eval_z_zero())


@lru_cache(maxsize=None)
def xi(ab: str, prec) -> FJSeries:
    """theta_ab(tau, z) / theta_ab(tau, 0) for ab in {00, 01, 10}."""
    if ab not in _XI_CHARS:
        raise BadParameter(f"unknown even characteristic {ab!r}")
    a, b = _XI_CHARS[ab]
    prec = _frac(prec)
    num = theta_char(_frac(a), _frac(b), prec)
    return num.div(num.eval_z_zero())
