"""Exact Eisenstein-series constructors: Bernoulli numbers, Cohen and
Hurwitz class numbers, elliptic E_2k (and quasi-modular E_2/G_2),
index-1 Jacobi-Eisenstein series, the index-raising operator V_m,
and the level-p series built from H(p^2 D) - p H(D)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

from .cyclotomic import rational
from .errors import BadParameter
from .series import FJSeries, FormMeta, _frac


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise BadParameter("Bernoulli numbers need n >= 0")
    if n == 0:
        return Fraction(1)
    if n % 2 == 1:
        return Fraction(1, -2) if n == 1 else Fraction(0)
    # sum_{k<n} C(n+1,k) B_k = 0
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli(k)
    return -acc / (n + 1)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _squarefree_part(n: int) -> tuple[int, int]:
    """n = s * f^2 with s squarefree; returns (s, f).  n > 0."""
    s, f = 1, 1
    for p, e in _factorize(n).items():
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, f


def is_fundamental(D: int) -> bool:
    if D == 1:
        return True
    if D % 4 == 1:
        s, f = _squarefree_part(abs(D))
        return f == 1
    if D % 4 == 0:
        m = D // 4
        if m % 4 in (2, 3):
            s, f = _squarefree_part(abs(m))
            return f == 1
    return False


@lru_cache(maxsize=None)
def kronecker(D: int, m: int) -> int:
    """The Kronecker symbol (D|m)."""
    if m == 0:
        return 1 if D in (1, -1) else 0
    if m < 0:
        return kronecker(D, -m) * (1 if D >= 0 else -1)
    result = 1
    if m % 2 == 0:
        if D % 2 == 0:
            return 0
        two = (-1) ** (((D * D - 1) // 8) % 2)
        while m % 2 == 0:
            result *= two
            m //= 2
    a = D % m if m > 1 else 0
    # Jacobi symbol (a|m) for odd m via reciprocity
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    if m != 1:
        return 0
    return result


def _bernoulli_poly(n: int, x: Fraction) -> Fraction:
    return sum(
        comb(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1)
    )


@lru_cache(maxsize=None)
def gen_bernoulli(n: int, D0: int) -> Fraction:
    """Generalized Bernoulli number B_{n,chi} for chi the Kronecker symbol of
    a fundamental discriminant D0."""
    if not is_fundamental(D0):
        raise BadParameter(f"{D0} is not a fundamental discriminant")
    if D0 == 1:
        return bernoulli(n) if n != 1 else -bernoulli(1)
    m = abs(D0)
    acc = Fraction(0)
    for a in range(1, m + 1):
        chi = kronecker(D0, a)
        if chi:
            acc += chi * _bernoulli_poly(n, Fraction(a, m))
    return m ** (n - 1) * acc


def _sigma(k: int, n: int) -> int:
    acc = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            acc += d ** k
            if d * d != n:
                acc += (n // d) ** k
    return acc


def _mu(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return (-1) ** (len(f) % 2)


@lru_cache(maxsize=None)
def cohen_number(r: int, M: int) -> Fraction:
    """Cohen's function H(r, M)."""
    if r < 1 or M < 0:
        raise BadParameter("cohen_number needs r >= 1 and M >= 0")
    if M == 0:
        return -bernoulli(2 * r) / (2 * r)
    DM = M if r % 2 == 0 else -M
    if DM % 4 not in (0, 1):
        return Fraction(0)
    s, f = _squarefree_part(M)
    Dsf = s if DM > 0 else -s
    if Dsf % 4 == 1:
        D0 = Dsf
    else:
        # DM = 0 mod 4 forces f even here
        D0 = 4 * Dsf
        f //= 2
    L = -gen_bernoulli(r, D0) / r
    acc = Fraction(0)
    for d in range(1, f + 1):
        if f % d == 0:
            acc += _mu(d) * kronecker(D0, d) * d ** (r - 1) * _sigma(2 * r - 1, f // d)
    return L * acc


def hurwitz(M: int) -> Fraction:
    """Hurwitz class number, with H(0) = -1/12."""
    return cohen_number(1, M)


def hp(p: int, D: int) -> Fraction:
    """H^(p)(D) = H(p^2 D) - p H(D)."""
    return hurwitz(p * p * D) - p * hurwitz(D)


E2_META = FormMeta(2, 0, quasi=True)


@lru_cache(maxsize=None)
def eisenstein_2k(k: int, prec) -> FJSeries:
    """E_2k = 1 - (4k/B_2k) * sum sigma_{2k-1}(n) q^n.  k = 1 gives the
    quasi-modular E_2."""
    if k < 1:
        raise BadParameter("eisenstein_2k needs k >= 1")
    prec = _frac(prec)
    factor = Fraction(-4 * k) / bernoulli(2 * k)
    terms = {(0, 0): rational(1)}
    n = 1
    while n < prec:
        terms[(n, 0)] = rational(factor * _sigma(2 * k - 1, n))
        n += 1
    return FJSeries(1, 1, prec, terms)


@lru_cache(maxsize=None)
def g2(prec) -> FJSeries:
    """G_2 = -1/24 + sum sigma_1(n) q^n; E_2 = -24 G_2."""
    prec = _frac(prec)
    terms = {(0, 0): rational(Fraction(-1, 24))}
    n = 1
    while n < prec:
        terms[(n, 0)] = rational(_sigma(1, n))
        n += 1
    return FJSeries(1, 1, prec, terms)


@lru_cache(maxsize=None)
def jacobi_eisenstein_1(k: int, prec) -> FJSeries:
    """E_{k,1} with f(n, r) = H(k-1, 4n-r^2) / H(k-1, 0)."""
    if k < 4 or k % 2:
        raise BadParameter("jacobi_eisenstein_1 needs even k >= 4")
    prec = _frac(prec)
    H0 = cohen_number(k - 1, 0)
    terms = {}
    n = 0
    while n < prec:
        rmax = isqrt(4 * n)
        for r in range(-rmax, rmax + 1):
            M = 4 * n - r * r
            if M < 0:
                continue
            c = cohen_number(k - 1, M) / H0
            if c:
                terms[(n, r)] = rational(c)
        n += 1
    return FJSeries(1, 1, prec, terms)


def hecke_V(A: FJSeries, meta: FormMeta, m: int) -> FJSeries:
    """Index-raising operator: c'(n,r) = sum over d | gcd(n,r,m) of
    d^(k-1) c(nm/d^2, r/d), with gcd(0,0,m) = m."""
    if m < 1:
        raise BadParameter("hecke_V needs m >= 1")
    if A.q_den != 1 or A.z_den != 1 or meta.index.denominator != 1:
        raise BadParameter("hecke_V expects integral exponents and index")
    if m == 1:
        return A
    k = meta.weight
    if k.denominator != 1:
        raise BadParameter("hecke_V expects integral weight")
    k = int(k)
    prec = A.prec / m
    out = {}
    n = 0
    while n < prec:
        t = int(meta.index) * m
        rmax = isqrt(4 * n * t) + 2 * t  # generous bound on the support row
        for r in range(-rmax, rmax + 1):
            g = gcd(gcd(n, r), m)
            if g == 0:
                g = m
            acc = None
            for d in range(1, g + 1):
                if g % d:
                    continue
                c = A.terms.get((n * m // (d * d), r // d))
                if c is not None:
                    v = c * (d ** (k - 1))
                    acc = v if acc is None else acc + v
            if acc is not None and not acc.is_zero():
                out[(n, r)] = acc
        n += 1
    return FJSeries(1, 1, prec, out)


@lru_cache(maxsize=None)
def jacobi_eisenstein(k: int, m: int, prec) -> FJSeries:
    """Index-m Eisenstein series with constant term 1 and singular support
    on r = 0 mod 2m only.

    For squarefree m this is V_m(E_{k,1}) / sigma_{k-1}(m).  For m = 4 the
    plain V_4 lift also picks up the r = 4 mod 8 singular class (through the
    image of z -> 2z on index 1), so that class is projected out first:
    E_{k,4} = (V_4(E_{k,1}) - E_{k,1}(tau, 2z)) / (sigma_{k-1}(4) - 1).
    """
    prec = _frac(prec)
    base = jacobi_eisenstein_1(k, prec * m)
    lifted = hecke_V(base, FormMeta(k, 1), m)
    if m == 4:
        return (lifted - base.subs_z_multiple(2)).scale(
            Fraction(1, _sigma(k - 1, 4) - 1))
    return lifted.scale(Fraction(1, _sigma(k - 1, m)))


@lru_cache(maxsize=None)
def e21p(p: int, prec) -> FJSeries:
    """Level-p series sum over 4n >= r^2 of H^(p)(4n-r^2) q^n zeta^r."""
    if p < 2 or any(p % q == 0 for q in range(2, isqrt(p) + 1)):
        raise BadParameter("e21p needs a prime p")
    prec = _frac(prec)
    terms = {}
    n = 0
    while n < prec:
        rmax = isqrt(4 * n)
        for r in range(-rmax, rmax + 1):
            M = 4 * n - r * r
            if M < 0:
                continue
            c = hp(p, M)
            if c:
                terms[(n, r)] = rational(c)
        n += 1
    return FJSeries(1, 1, prec, terms)
