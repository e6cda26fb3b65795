"""Exact arithmetic in cyclotomic fields Q(zeta_L).

Elements are represented canonically in the power basis of Q[x]/Phi_L(x),
which makes zero-testing (and hence identity verification) exact.  Two
internal layouts are used:

* a "monomial" layout r * zeta_L^e (rational r, minimal order L) with O(1)
  multiplication -- almost every coefficient produced by theta constructors
  is of this shape;
* a dense vector of phi(L) rationals, the general case, entered only when
  additions genuinely mix phases.

Both layouts describe the same canonical residue; `coeffs` always exposes
the reduced power-basis vector.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

from .errors import IncompatibleOrder

__all__ = [
    "CycNum",
    "root_of_unity",
    "rational",
    "e_frac",
    "lift",
    "cyclotomic_polynomial",
    "euler_phi",
]


def euler_phi(n: int) -> int:
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients), den monic."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    assert all(c == 0 for c in num), "cyclotomic division must be exact"
    return out


_seen_orders: set[int] = set()


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Phi_L as a tuple of integer coefficients in ascending order (monic)."""
    _seen_orders.add(L)
    if L == 1:
        return (-1, 1)
    poly = [-1] + [0] * (L - 1) + [1]  # x^L - 1
    for d in range(1, L):
        if L % d == 0:
            poly = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(L: int) -> tuple[tuple[int, ...], ...]:
    """x^e mod Phi_L for e = 0..L-1, as integer vectors of length phi(L)."""
    phi_poly = cyclotomic_polynomial(L)
    deg = len(phi_poly) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(L):
        rows.append(tuple(cur))
        # multiply by x and reduce
        lead = cur[-1]
        nxt = [0] + cur[:-1]
        if lead:
            for j in range(deg):
                nxt[j] -= lead * phi_poly[j]
        cur = nxt
    return tuple(rows)


def instantiated_orders() -> list[int]:
    """Orders whose cyclotomic polynomial has been computed so far."""
    return sorted(_seen_orders)


_ZERO = mpq(0)
_ONE = mpq(1)


def _to_mpq(x) -> mpq:
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        # gmpy2 rejects Fractions whose internals are mpz
        return mpq(int(x.numerator), int(x.denominator))
    if isinstance(x, type(_ZERO)):
        return x
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class CycNum:
    """An element of Q(zeta_L), canonically reduced modulo Phi_L."""

    __slots__ = ("order", "_e", "_r", "_vec")

    def __init__(self, order, e=None, r=None, vec=None):
        self.order = order
        self._e = e
        self._r = r
        self._vec = vec

    # -- constructors -------------------------------------------------

    @staticmethod
    def _mono(L: int, e: int, r: mpq) -> "CycNum":
        if r == 0:
            return CycNum(1, 0, _ZERO)
        e %= L
        g = gcd(e, L)
        if g > 1:
            L //= g
            e //= g
        if L == 2:  # zeta_2 = -1
            return CycNum(1, 0, -r if e else r)
        return CycNum(L, e, r)

    @staticmethod
    def from_rational(x) -> "CycNum":
        return CycNum(1, 0, _to_mpq(x))

    @staticmethod
    def _from_vec(L: int, vec: list[mpq]) -> "CycNum":
        # demote to a monomial when only one basis coordinate survives
        nz = [j for j, c in enumerate(vec) if c]
        if not nz:
            return CycNum(1, 0, _ZERO)
        if len(nz) == 1:
            return CycNum._mono(L, nz[0], vec[nz[0]])
        return CycNum(L, vec=tuple(vec))

    # -- views ---------------------------------------------------------

    @property
    def is_mono(self) -> bool:
        return self._vec is None

    @property
    def coeffs(self) -> tuple[mpq, ...]:
        """Power-basis coordinates (length phi(order))."""
        if self._vec is not None:
            return self._vec
        deg = len(cyclotomic_polynomial(self.order)) - 1
        if self.order == 1:
            return (self._r,)
        row = _power_table(self.order)[self._e]
        return tuple(self._r * c for c in row)

    def _vec_at(self, L: int) -> list[mpq]:
        """Coordinates of this value lifted to Q(zeta_L); order must divide L."""
        if L % self.order:
            raise IncompatibleOrder(f"order {self.order} does not divide {L}")
        step = L // self.order
        deg = len(cyclotomic_polynomial(L)) - 1
        if self._vec is None:
            if self._r == 0:
                return [_ZERO] * deg
            row = _power_table(L)[(self._e * step) % L]
            return [self._r * c for c in row]
        table = _power_table(L)
        out = [_ZERO] * deg
        for j, c in enumerate(self._vec):
            if c:
                row = table[(j * step) % L]
                for k in range(deg):
                    if row[k]:
                        out[k] += c * row[k]
        return out

    def to_json(self) -> dict:
        """{"order": L, "coeffs": ["p/q", ...]} with phi(L) power-basis
        coordinates; rationals are always fraction strings."""
        return {
            "order": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "CycNum":
        L = int(data["order"])
        vec = tuple(mpq(s) for s in data["coeffs"])
        deg = len(cyclotomic_polynomial(L)) - 1
        if len(vec) != deg:
            raise ValueError(f"expected {deg} coordinates for order {L}")
        if all(c == 0 for c in vec):
            return CycNum(1, 0, _ZERO)
        if L == 1:
            return CycNum(1, 0, vec[0])
        return CycNum(L, vec=vec)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        if self._vec is None:
            return self._r == 0
        return False  # dense vectors are only created nonzero

    def is_rational(self) -> bool:
        return self._vec is None and self.order == 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(int(self._r.numerator), int(self._r.denominator))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "CycNum":
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other)
        if self._vec is None and other._vec is None:
            if self._r == 0:
                return other
            if other._r == 0:
                return self
            if self.order == other.order and self._e == other._e:
                return CycNum._mono(self.order, self._e, self._r + other._r)
        L = self.order * other.order // gcd(self.order, other.order)
        a = self._vec_at(L)
        b = other._vec_at(L)
        return CycNum._from_vec(L, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        if self._vec is None:
            return CycNum(self.order, self._e, -self._r)
        return CycNum(self.order, vec=tuple(-c for c in self._vec))

    def __sub__(self, other) -> "CycNum":
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "CycNum":
        return CycNum.from_rational(other) + (-self)

    def __mul__(self, other) -> "CycNum":
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other)
        a, b = self, other
        if a._vec is None and b._vec is None:
            if a._r == 0 or b._r == 0:
                return CycNum(1, 0, _ZERO)
            L = a.order * b.order // gcd(a.order, b.order)
            e = a._e * (L // a.order) + b._e * (L // b.order)
            return CycNum._mono(L, e, a._r * b._r)
        if b._vec is None:
            a, b = b, a
        if a._vec is None:  # monomial times vector
            if a._r == 0:
                return CycNum(1, 0, _ZERO)
            L = a.order * b.order // gcd(a.order, b.order)
            bv = b._vec_at(L)
            table = _power_table(L)
            deg = len(table[0])
            e = a._e * (L // a.order)
            out = [_ZERO] * deg
            for j, c in enumerate(bv):
                if c:
                    row = table[(j + e) % L]
                    rc = a._r * c
                    for k in range(deg):
                        if row[k]:
                            out[k] += rc * row[k]
            return CycNum._from_vec(L, out)
        # dense times dense
        L = a.order * b.order // gcd(a.order, b.order)
        av = a._vec_at(L)
        bv = b._vec_at(L)
        table = _power_table(L)
        deg = len(table[0])
        out = [_ZERO] * deg
        for i, ci in enumerate(av):
            if not ci:
                continue
            for j, cj in enumerate(bv):
                if not cj:
                    continue
                e = i + j
                c = ci * cj
                if e < deg:
                    out[e] += c
                else:
                    row = table[e % L]
                    for k in range(deg):
                        if row[k]:
                            out[k] += c * row[k]
        return CycNum._from_vec(L, out)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self._vec is None:
            return CycNum._mono(self.order, -self._e, 1 / self._r)
        # extended Euclid against Phi_L over the rationals
        L = self.order
        phi_poly = [mpq(c) for c in cyclotomic_polynomial(L)]
        a = list(self._vec)
        r0, r1 = phi_poly, a
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                vec = [x / c for x in s1]
                deg = len(phi_poly) - 1
                vec += [_ZERO] * (deg - len(vec))
                return CycNum._from_vec(L, vec[:deg])
            q, rem = _poly_divmod_q(r0, r1)
            s_new = _poly_sub_q(s0, _poly_mul_q(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_new

    def __truediv__(self, other) -> "CycNum":
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other)
        return self * other.inv()

    def __rtruediv__(self, other) -> "CycNum":
        return CycNum.from_rational(other) * self.inv()

    def __pow__(self, m: int) -> "CycNum":
        if m < 0:
            return self.inv() ** (-m)
        result = CycNum.from_rational(1)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base if m > 1 else base
            m >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycNum):
            if isinstance(other, (int, Fraction)):
                other = CycNum.from_rational(other)
            else:
                return NotImplemented
        if (
            self._vec is None
            and other._vec is None
            and self.order == other.order
            and self._e == other._e
        ):
            return self._r == other._r
        L = self.order * other.order // gcd(self.order, other.order)
        return self._vec_at(L) == other._vec_at(L)

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._r.numerator, self._r.denominator))
        L = self.order
        return hash((L, tuple(self.coeffs)))

    # -- conversions ---------------------------------------------------

    def to_complex(self) -> tuple[float, float]:
        """Floating evaluation at zeta_L = e^{2 pi i / L} (diagnostics only)."""
        z = 0j
        zeta = cmath.exp(2j * cmath.pi / self.order)
        for j, c in enumerate(self.coeffs):
            if c:
                z += float(c) * zeta**j
        return (z.real, z.imag)

    def __repr__(self):
        if self.is_rational():
            return f"CycNum({self._r})"
        if self._vec is None:
            return f"CycNum({self._r}*z{self.order}^{self._e})"
        return f"CycNum(order={self.order}, coeffs={[str(c) for c in self._vec]})"


def _poly_divmod_q(num: list[mpq], den: list[mpq]):
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        return [_ZERO], num
    out = [_ZERO] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            c = c / lead
            out[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    return out, num[:dn] if dn else []


def _poly_mul_q(a: list[mpq], b: list[mpq]) -> list[mpq]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub_q(a: list[mpq], b: list[mpq]) -> list[mpq]:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def root_of_unity(numer: int, denom: int) -> CycNum:
    """zeta_denom^numer = e^{2 pi i numer/denom}, at its minimal order."""
    if denom < 1:
        raise ValueError("denominator must be positive")
    return CycNum._mono(denom, numer % denom, _ONE)


def rational(x) -> CycNum:
    return CycNum.from_rational(x)


def e_frac(x: Fraction) -> CycNum:
    """e(x) = e^{2 pi i x} for a rational x."""
    x = Fraction(x)
    return root_of_unity(x.numerator % x.denominator, x.denominator)


def lift(a: CycNum, L2: int) -> CycNum:
    """The same value, explicitly represented in Q(zeta_{L2})."""
    if L2 % a.order:
        raise IncompatibleOrder(f"order {a.order} does not divide {L2}")
    return CycNum(L2, vec=tuple(a._vec_at(L2)))


ZERO = CycNum(1, 0, _ZERO)
ONE = CycNum(1, 0, _ONE)
MINUS_ONE = CycNum(1, 0, -_ONE)
