"""Truncated Fourier-Jacobi series with exact cyclotomic coefficients.

A series is a finite sum of terms c * q^(n/D) * zeta^(l/E) together with a
precision bound: every term with q-exponent strictly below `prec` is exactly
represented, nothing is asserted at or above it.  All ring operations
propagate the guaranteed bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .cyclotomic import ONE, ZERO, CycNum, e_frac, rational
from .errors import BadParameter, EmptySeries, InsufficientPrecision, NotDivisible

INF = float("inf")

QLike = int | Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _sqrt_upper(v: Fraction) -> Fraction:
    """A rational upper bound for sqrt(v), v >= 0."""
    if v <= 0:
        return Fraction(0)
    n, d = v.numerator, v.denominator
    return Fraction(isqrt(n * d) + 1, d)


@dataclass(frozen=True)
class FormMeta:
    """Weight, index and character data (eta power mod 24, Heisenberg parity).

    `quasi` marks quasi-modular objects (E_2, G_2) that must be refused as
    members of Jacobi-form bases.
    """

    weight: Fraction
    index: Fraction
    eta_power: int = 0
    heis_parity: int = 0
    quasi: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weight", _frac(self.weight))
        object.__setattr__(self, "index", _frac(self.index))
        object.__setattr__(self, "eta_power", self.eta_power % 24)
        object.__setattr__(self, "heis_parity", self.heis_parity % 2)
        if self.index < 0:
            raise BadParameter("index must be nonnegative")
        if (2 * self.weight).denominator != 1 or (2 * self.index).denominator != 1:
            raise BadParameter("weight and index must be half-integers")
        if int(2 * self.index) % 2 != 0 and self.heis_parity != 1:
            # half-integral index forces the odd Heisenberg character
            raise BadParameter("heis_parity must be 1 for half-integral index")


class FJSeries:
    """Sparse truncated Fourier-Jacobi expansion.

    terms maps integer pairs (n, l) to nonzero CycNum coefficients of
    q^(n/q_den) * zeta^(l/z_den).
    """

    __slots__ = ("q_den", "z_den", "prec", "terms", "prec_heuristic")

    def __init__(self, q_den, z_den, prec, terms, *, allow_neg_q=True, prec_heuristic=False):
        if q_den < 1 or z_den < 1:
            raise BadParameter("exponent denominators must be positive")
        self.q_den = q_den
        self.z_den = z_den
        self.prec = prec if prec == INF else _frac(prec)
        self.prec_heuristic = prec_heuristic
        clean = {}
        for (n, l), c in terms.items():
            if c.is_zero():
                continue
            if Fraction(n, q_den) >= self.prec:
                continue
            if n < 0 and not allow_neg_q:
                raise BadParameter("negative q-exponent in a constructor context")
            clean[(n, l)] = c
        self.terms = clean

    # -- basic constructors -------------------------------------------

    @staticmethod
    def zero(prec=INF) -> "FJSeries":
        return FJSeries(1, 1, prec, {})

    @staticmethod
    def one(prec=INF) -> "FJSeries":
        return FJSeries(1, 1, prec, {(0, 0): ONE})

    @staticmethod
    def constant(c, prec=INF) -> "FJSeries":
        if not isinstance(c, CycNum):
            c = rational(c)
        return FJSeries(1, 1, prec, {(0, 0): c})

    @staticmethod
    def monomial(qexp: Fraction, zexp: Fraction, c=ONE, prec=INF) -> "FJSeries":
        qexp, zexp = _frac(qexp), _frac(zexp)
        if not isinstance(c, CycNum):
            c = rational(c)
        return FJSeries(
            qexp.denominator,
            zexp.denominator,
            prec,
            {(qexp.numerator, zexp.numerator): c},
        )

    # -- views ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def q_order(self):
        """Least q-exponent in the support (INF for the zero series)."""
        if not self.terms:
            return INF
        return Fraction(min(n for n, _ in self.terms), self.q_den)

    def support(self):
        """Sorted list of (q-exponent, zeta-exponent, coefficient)."""
        items = sorted(self.terms.items())
        return [
            (Fraction(n, self.q_den), Fraction(l, self.z_den), c) for (n, l), c in items
        ]

    def to_json(self) -> dict:
        """{"q_den", "z_den", "prec", "terms"} with terms in (n, l) order and
        the precision as a fraction string ("inf" for exact polynomials)."""
        prec = "inf" if self.prec == INF else f"{_frac(self.prec).numerator}/{_frac(self.prec).denominator}"
        return {
            "q_den": self.q_den,
            "z_den": self.z_den,
            "prec": prec,
            "terms": [
                {"n": n, "l": l, "c": self.terms[(n, l)].to_json()}
                for n, l in sorted(self.terms)
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "FJSeries":
        prec = INF if data["prec"] == "inf" else Fraction(data["prec"])
        terms = {
            (int(t["n"]), int(t["l"])): CycNum.from_json(t["c"])
            for t in data["terms"]
        }
        return FJSeries(int(data["q_den"]), int(data["z_den"]), prec, terms)

    def coefficient(self, n, l) -> CycNum:
        n, l = _frac(n), _frac(l)
        if n >= self.prec:
            raise InsufficientPrecision(f"coefficient at q^{n} beyond precision {self.prec}")
        if self.q_den % n.denominator or self.z_den % l.denominator:
            return ZERO
        key = (n.numerator * (self.q_den // n.denominator), l.numerator * (self.z_den // l.denominator))
        return self.terms.get(key, ZERO)

    def leading_term(self):
        """(q-exponent, zeta-exponent, coefficient) of the least term, lex order."""
        if not self.terms:
            raise EmptySeries("leading term of the zero series")
        n, l = min(self.terms)
        return (Fraction(n, self.q_den), Fraction(l, self.z_den), self.terms[(n, l)])

    def max_abs_zeta(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return Fraction(max(abs(l) for _, l in self.terms), self.z_den)

    def hyperbolic_order(self, t) -> Fraction:
        """min of 4*n*t - l^2 over the support."""
        if not self.terms:
            raise EmptySeries("hyperbolic order of the zero series")
        t = _frac(t)
        return min(
            4 * Fraction(n, self.q_den) * t - Fraction(l, self.z_den) ** 2
            for n, l in self.terms
        )

    # -- lattice handling ----------------------------------------------

    def rescaled(self, q_den: int, z_den: int) -> "FJSeries":
        if q_den == self.q_den and z_den == self.z_den:
            return self
        fq = q_den // self.q_den
        fz = z_den // self.z_den
        if fq * self.q_den != q_den or fz * self.z_den != z_den:
            raise BadParameter("target lattice must refine the current one")
        return FJSeries(
            q_den,
            z_den,
            self.prec,
            {(n * fq, l * fz): c for (n, l), c in self.terms.items()},
            prec_heuristic=self.prec_heuristic,
        )

    def compress(self) -> "FJSeries":
        """Shrink exponent denominators to the gcd of the actual support."""
        if not self.terms:
            return FJSeries(1, 1, self.prec, {}, prec_heuristic=self.prec_heuristic)
        gq = self.q_den
        gz = self.z_den
        for n, l in self.terms:
            gq = gcd(gq, n)
            gz = gcd(gz, l)
        gq = gq or self.q_den
        gz = gz or self.z_den
        if gq == 1 and gz == 1:
            return self
        return FJSeries(
            self.q_den // gq,
            self.z_den // gz,
            self.prec,
            {(n // gq, l // gz): c for (n, l), c in self.terms.items()},
            prec_heuristic=self.prec_heuristic,
        )

    @staticmethod
    def _common(a: "FJSeries", b: "FJSeries"):
        D = _lcm(a.q_den, b.q_den)
        E = _lcm(a.z_den, b.z_den)
        return a.rescaled(D, E), b.rescaled(D, E)

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "FJSeries":
        if not isinstance(other, FJSeries):
            return NotImplemented
        a, b = FJSeries._common(self, other)
        prec = min(a.prec, b.prec)
        terms = dict(a.terms)
        for key, c in b.terms.items():
            cur = terms.get(key)
            terms[key] = c if cur is None else cur + c
        return FJSeries(
            a.q_den, a.z_den, prec, terms,
            prec_heuristic=a.prec_heuristic or b.prec_heuristic,
        )

    def __neg__(self) -> "FJSeries":
        return FJSeries(
            self.q_den, self.z_den, self.prec,
            {k: -c for k, c in self.terms.items()},
            prec_heuristic=self.prec_heuristic,
        )

    def __sub__(self, other) -> "FJSeries":
        return self + (-other)

    def scale(self, c) -> "FJSeries":
        if not isinstance(c, CycNum):
            c = rational(c)
        if c.is_zero():
            return FJSeries(1, 1, self.prec, {}, prec_heuristic=self.prec_heuristic)
        return FJSeries(
            self.q_den, self.z_den, self.prec,
            {k: c * v for k, v in self.terms.items()},
            prec_heuristic=self.prec_heuristic,
        )

    def __mul__(self, other) -> "FJSeries":
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        if not isinstance(other, FJSeries):
            return NotImplemented
        a, b = FJSeries._common(self, other)
        prec = min(a.prec + b.q_order(), b.prec + a.q_order())
        if a.is_zero() or b.is_zero():
            return FJSeries(1, 1, prec, {},
                            prec_heuristic=a.prec_heuristic or b.prec_heuristic)
        if len(a.terms) > len(b.terms):
            a, b = b, a
        D = a.q_den
        cutoff = INF if prec == INF else prec * D
        b_items = sorted(b.terms.items())
        out: dict[tuple[int, int], CycNum] = {}
        for (n1, l1), c1 in a.terms.items():
            limit = cutoff - n1
            for (n2, l2), c2 in b_items:
                if n2 >= limit:
                    break
                key = (n1 + n2, l1 + l2)
                prod = c1 * c2
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
        return FJSeries(D, a.z_den, prec, out,
                        prec_heuristic=a.prec_heuristic or b.prec_heuristic)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "FJSeries":
        if m < 0:
            raise BadParameter("negative series powers are not defined; use div")
        if m == 0:
            return FJSeries.one()
        result = self
        for _ in range(m - 1):
            result = result * self
        return result

    def div(self, other: "FJSeries") -> "FJSeries":
        """Exact quotient; raises NotDivisible if no Fourier-Jacobi quotient exists."""
        if not isinstance(other, FJSeries):
            raise TypeError("can only divide by an FJSeries")
        if other.is_zero():
            raise ZeroDivisionError("division by the zero series")
        a, b = FJSeries._common(self, other)
        D, E = a.q_den, a.z_den
        beta = min(n for n, _ in b.terms)
        prec = min(a.prec, b.prec) - Fraction(beta, D)
        cutoff = INF if prec == INF else prec * D + beta  # bound on remainder rows we must honor
        b0 = {l: c for (n, l), c in b.terms.items() if n == beta}
        b_rest = sorted(((n, l, c) for (n, l), c in b.terms.items() if n > beta))
        rem: dict[tuple[int, int], CycNum] = dict(a.terms)
        quot: dict[tuple[int, int], CycNum] = {}
        while rem:
            n_min = min(n for n, _ in rem)
            if n_min >= cutoff:
                break
            row = {l: c for (n, l), c in rem.items() if n == n_min}
            q_row = _laurent_div(row, b0, Fraction(n_min - beta, D))
            nq = n_min - beta
            for l, c in q_row.items():
                quot[(nq, l)] = c
            # subtract q_row * b from the remainder
            for l1, c1 in q_row.items():
                for l2, c2 in b0.items():
                    _acc_sub(rem, (nq + beta, l1 + l2), c1 * c2)
                for n2, l2, c2 in b_rest:
                    if nq + n2 >= cutoff:
                        break
                    _acc_sub(rem, (nq + n2, l1 + l2), c1 * c2)
            rem = {k: c for k, c in rem.items() if not c.is_zero()}
        return FJSeries(D, E, prec, quot,
                        prec_heuristic=a.prec_heuristic or b.prec_heuristic)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            c = other if isinstance(other, CycNum) else rational(other)
            return self.scale(c.inv())
        return self.div(other)

    # -- structural operations -----------------------------------------

    def subs_z_multiple(self, m: int) -> "FJSeries":
        """z -> m*z, i.e. (n, l) -> (n, m*l).  The index scales by m^2."""
        if m < 1:
            raise BadParameter("m must be a positive integer")
        if m == 1:
            return self
        return FJSeries(
            self.q_den, self.z_den, self.prec,
            {(n, m * l): c for (n, l), c in self.terms.items()},
            prec_heuristic=self.prec_heuristic,
        )

    def eval_z_zero(self) -> "FJSeries":
        """Set z = 0: sum the zeta-coefficients of every q-row."""
        out: dict[tuple[int, int], CycNum] = {}
        for (n, _), c in self.terms.items():
            _acc_add(out, (n, 0), c)
        out = {k: c for k, c in out.items() if not c.is_zero()}
        return FJSeries(self.q_den, 1, self.prec, out,
                        prec_heuristic=self.prec_heuristic)

    def _shift_prec(self, r: Fraction, extra: Fraction, t, m0):
        """Guaranteed precision after the exponent map n -> n + l*r + extra.

        Unseen terms have n >= prec and l^2 <= 4nt - m0; the image exponent
        n + l*r + extra is then bounded below by the returned value.
        """
        if r == 0:
            return self.prec + extra, self.prec_heuristic
        if self.prec == INF:
            return INF, self.prec_heuristic
        heuristic = self.prec_heuristic
        if t is None:
            lmax = self.max_abs_zeta()
            return self.prec - abs(r) * lmax + extra, True
        t = _frac(t)
        if m0 is None:
            m0 = self.hyperbolic_order(t) if self.terms else Fraction(0)
            heuristic = True
        # n - |r|*sqrt(4nt - m0) is convex in n; its minimum over n >= prec
        # sits at max(prec, vertex) with vertex = r^2*t + m0/4
        candidates = [self.prec]
        vertex = _frac(r) ** 2 * t + m0 / 4
        if vertex > self.prec:
            candidates.append(vertex)
        best = None
        for n in candidates:
            v = 4 * n * t - m0
            val = n if v <= 0 else n - abs(_frac(r)) * _sqrt_upper(v)
            best = val if best is None else min(best, val)
        return best + extra, heuristic

    def specialize_z(self, r, s, t=None, m0=None) -> "FJSeries":
        """Set z = r*tau + s; returns a pure q-series.

        Supply the form's index t (and optionally a lower bound m0 for its
        hyperbolic order) to get a rigorous precision bound when r != 0.
        """
        r, s = _frac(r), _frac(s)
        prec, heuristic = self._shift_prec(r, Fraction(0), t, m0)
        D = _lcm(self.q_den, self.z_den * r.denominator)
        out: dict[tuple[int, int], CycNum] = {}
        for (n, l), c in self.terms.items():
            lz = Fraction(l, self.z_den)
            qe = Fraction(n, self.q_den) + lz * r
            if qe >= prec:
                continue
            phase = e_frac(lz * s)
            _acc_add(out, (qe.numerator * (D // qe.denominator), 0), c * phase)
        out = {k: c for k, c in out.items() if not c.is_zero()}
        return FJSeries(D, 1, prec, out, prec_heuristic=heuristic)

    def d_z(self) -> "FJSeries":
        """Normalized z-derivative (2 pi i)^{-1} d/dz: multiplies terms by l."""
        out = {}
        for (n, l), c in self.terms.items():
            if l:
                out[(n, l)] = c * Fraction(l, self.z_den)
        return FJSeries(self.q_den, self.z_den, self.prec, out,
                        prec_heuristic=self.prec_heuristic)

    # -- comparison ----------------------------------------------------

    def equal_to_order(self, other: "FJSeries", Q) -> bool:
        Q = Q if Q == INF else _frac(Q)
        if Q > self.prec or Q > other.prec:
            raise InsufficientPrecision(
                f"comparison to order {Q} exceeds precision {min(self.prec, other.prec)}"
            )
        return self.first_difference(other, Q) is None

    def first_difference(self, other: "FJSeries", Q):
        """First (n, l, lhs, rhs) below order Q where the series differ, or None."""
        Q = Q if Q == INF else _frac(Q)
        a, b = FJSeries._common(self, other)
        keys = set(a.terms) | set(b.terms)
        for key in sorted(keys):
            n, l = key
            if Fraction(n, a.q_den) >= Q:
                continue
            ca = a.terms.get(key, ZERO)
            cb = b.terms.get(key, ZERO)
            if ca != cb:
                return (Fraction(n, a.q_den), Fraction(l, a.z_den), ca, cb)
        return None

    def __eq__(self, other):
        if not isinstance(other, FJSeries):
            return NotImplemented
        Q = min(self.prec, other.prec)
        return self.first_difference(other, Q) is None

    def __hash__(self):
        return hash((self.q_den, self.z_den, len(self.terms)))

    def __repr__(self):
        return (
            f"FJSeries(q_den={self.q_den}, z_den={self.z_den}, "
            f"prec={self.prec}, nterms={len(self.terms)})"
        )


def _acc_add(d, key, c):
    cur = d.get(key)
    d[key] = c if cur is None else cur + c


def _acc_sub(d, key, c):
    cur = d.get(key)
    d[key] = -c if cur is None else cur - c


def _laurent_div(row, b0, q_order):
    """Exact division of Laurent polynomials in zeta given as {exponent: coeff}."""
    if not row:
        return {}
    lo_b = min(b0)
    hi_b = max(b0)
    lead = b0[hi_b]
    lead_inv = lead.inv()
    rem = dict(row)
    quot = {}
    while rem:
        hi_r = max(rem)
        lo_r = min(rem)
        if hi_r - lo_r < hi_b - lo_b:
            raise NotDivisible(q_order)
        e = hi_r - hi_b
        c = rem[hi_r] * lead_inv
        quot[e] = c
        for eb, cb in b0.items():
            _acc_sub(rem, (e + eb), cb * c)
        rem = {k: v for k, v in rem.items() if not v.is_zero()}
    return quot
