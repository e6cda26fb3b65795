"""Orbit operators over the sets R_N, the identity registry with its
verifier, and a parameter-space search for theta relations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycNum, rational
from .errors import (
    BadParameter,
    Inconsistent,
    InsufficientPrecision,
    Underdetermined,
    UnknownIdentity,
)
from .series import FJSeries, FormMeta, _frac
from .thetas import (
    Characteristic,
    HeisenbergElement,
    THETA_META,
    eta_power,
    orbit_set,
    orbit_theta,
    slash_check_T,
    slash_heisenberg,
    theta,
    theta_char,
    xi_char,
)
from .eisenstein import eisenstein_2k, jacobi_eisenstein, jacobi_eisenstein_1
from . import spaces

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TrParams:
    N: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.N < 2:
            raise BadParameter("N must be at least 2")
        if min(self.a, self.b, self.c, self.d) < 0:
            raise BadParameter("exponents must be nonnegative")
        if (self.a + self.b + self.c + self.d) % (2 * self.N):
            raise BadParameter("a+b+c+d must be divisible by 2N")
        if (self.b + 2 * self.c) % self.N:
            raise BadParameter("b+2c must be divisible by N")

    @property
    def meta(self) -> FormMeta:
        s = self.a + self.b + self.c + self.d
        return FormMeta(
            Fraction(s, 2),
            Fraction(self.b + 4 * self.c + self.N * self.N * self.d, 2),
            eta_power=(3 * s) % 24,
            heis_parity=(self.b + self.N * self.d) % 2,
        )


@lru_cache(maxsize=None)
def _orbit_pow(N: int, u: int, v: int, mult: int, e: int, prec) -> FJSeries:
    """(theta | Y)^e at z, 2z, Nz (mult) or z=0 (mult=0) for Y=(u/N, v/N)."""
    Y = Characteristic(Fraction(u, N), Fraction(v, N))
    base = orbit_theta(Y, prec)
    if mult == 0:
        base = base.eval_z_zero()
    elif mult > 1:
        base = base.subs_z_multiple(mult)
    return base ** e


def tr(p: TrParams, prec) -> tuple[FJSeries, FormMeta]:
    """Sum over Y in R_N of (t|Y)^a(0) (t|Y)^b(z) (t|Y)^c(2z) (t|Y)^d(Nz)."""
    prec = _frac(prec)
    total = FJSeries.zero()
    for Y in orbit_set(p.N).points:
        u, v = Y.a.numerator * (p.N // Y.a.denominator), Y.b.numerator * (p.N // Y.b.denominator)
        term = None
        for mult, e in ((0, p.a), (1, p.b), (2, p.c), (p.N, p.d)):
            if e == 0:
                continue
            f = _orbit_pow(p.N, u, v, mult, e, prec)
            term = f if term is None else term * f
        if term is None:
            term = FJSeries.constant(1, prec)
        total = total + term
    return total, p.meta


def w_form(N: int, a: int, b: int, c: int, prec) -> tuple[FJSeries, FormMeta]:
    """Sum over Y in R_N of xi_Y^a(z) xi_Y^b(2z) xi_Y^c(Nz), where xi_Y is
    the theta quotient at the shifted characteristic; the orbit phases cancel
    between numerator and denominator."""
    if (a + 2 * b) % N:
        raise BadParameter("a+2b must be divisible by N")
    prec = _frac(prec)
    total = FJSeries.zero()
    for Y in orbit_set(N).points:
        # build with headroom: the theta-constant division costs up to 1/8
        x = xi_char(Y.a + HALF, Y.b + HALF, prec + 1)
        term = None
        for mult, e in ((1, a), (2, b), (N, c)):
            if e == 0:
                continue
            f = (x.subs_z_multiple(mult) if mult > 1 else x) ** e
            term = f if term is None else term * f
        if term is None:
            term = FJSeries.constant(1, prec)
        total = total + term
    t = Fraction(a + N * N * c, 2) + 2 * b
    meta = FormMeta(0, t, heis_parity=int(2 * t) % 2)
    return total, meta


_X_POINTS = (
    Characteristic(HALF, Fraction(0)),
    Characteristic(Fraction(0), HALF),
    Characteristic(HALF, HALF),
)


def a_form(i: int, a: int, b: int, c: int, prec) -> tuple[FJSeries, FormMeta]:
    """Antisymmetric combinations of the orbit of theta at the three
    two-torsion points X1, X2, X3."""
    if i not in (1, 2, 3):
        raise BadParameter("i must be 1, 2 or 3")
    if b % 2 or (a + b + c) % 4:
        raise BadParameter("need b even and a+b+c divisible by 4")
    prec = _frac(prec)
    F = []
    f0 = []
    for X in _X_POINTS:
        t = orbit_theta(X, prec)
        t0 = t.eval_z_zero()
        term = None
        for s, e in ((t0, a), (t, b), (t.subs_z_multiple(2), c)):
            if e == 0:
                continue
            p = s ** e
            term = p if term is None else term * p
        F.append(term if term is not None else FJSeries.constant(1, prec))
        f0.append(t0 ** (a + b + c))
    S = {(i_, j): F[i_ - 1] - F[j - 1] for i_ in (1, 2, 3) for j in (1, 2, 3) if i_ < j}
    s = {(i_, j): f0[i_ - 1] - f0[j - 1] for i_ in (1, 2, 3) for j in (1, 2, 3) if i_ < j}
    if i == 1:
        out = (
            S[(1, 2)] * s[(1, 3)] * s[(2, 3)]
            + S[(1, 3)] * s[(1, 2)] * s[(2, 3)]
            + S[(2, 3)] * s[(1, 3)] * s[(1, 2)]
        ).scale(Fraction(1, 6))
    elif i == 2:
        out = (
            S[(1, 2)] * S[(1, 3)] * s[(2, 3)]
            + S[(1, 3)] * s[(1, 2)] * S[(2, 3)]
            + S[(2, 3)] * s[(1, 3)] * S[(1, 2)]
        ).scale(Fraction(1, 6))
    else:
        out = (S[(1, 2)] * S[(1, 3)] * S[(2, 3)]).scale(HALF)
    D = 12 if (a + b + c) % 8 == 0 else 0
    meta = FormMeta(
        Fraction(3 * (a + b + c), 2),
        2 * i * c + Fraction(i * b, 2),
        eta_power=D,
        heis_parity=(i * b) % 2,
    )
    return out, meta


def product_orbit(N: int, prec) -> FJSeries:
    """Product over 0 <= u,v < N, (u,v) != (0,0) of theta_char(u/N+1/2, v/N+1/2)."""
    prec = _frac(prec)
    out = None
    for Y in orbit_set(N).points:
        f = theta_char(Y.a + HALF, Y.b + HALF, prec)
        out = f if out is None else out * f
    return out


def product_reduced(N: int, prec) -> FJSeries:
    """The same product with characteristics reduced mod 1, as printed in the
    displayed corollaries; reduction of b shifts the product by a root of
    unity relative to product_orbit."""
    prec = _frac(prec)
    out = None
    for Y in orbit_set(N).points:
        f = theta_char((Y.a + HALF) % 1, (Y.b + HALF) % 1, prec)
        out = f if out is None else out * f
    return out


@dataclass(frozen=True)
class Prop01Report:
    N: int
    prec: Fraction
    z_identity: bool
    z0_identity: bool
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.z_identity and self.z0_identity


def verify_prop01(N: int, prec) -> Prop01Report:
    """Denominator-cleared check of the two product formulas: the full
    product times theta(z) against (-1)^(N-1) eta^(N^2-1) theta(Nz), and its
    z = 0 specialization."""
    prec = _frac(prec)
    P = prec + 1
    sign = (-1) ** (N - 1)
    prod = product_orbit(N, P)
    lhs = prod * theta(P)
    rhs = (eta_power(N * N - 1, P) * theta(P).subs_z_multiple(N)).scale(sign)
    Q = min(lhs.prec, rhs.prec)
    d1 = lhs.first_difference(rhs, Q)
    lhs0 = prod.eval_z_zero()
    rhs0 = eta_power(N * N - 1, P).scale(sign * N)
    Q0 = min(lhs0.prec, rhs0.prec)
    d0 = lhs0.first_difference(rhs0, Q0)
    detail = "; ".join(
        s for s in (
            f"z-identity differs at {d1[:2]}" if d1 else "",
            f"z=0 identity differs at {d0[:2]}" if d0 else "",
        ) if s
    )
    return Prop01Report(N, min(Q, Q0), d1 is None, d0 is None, detail)


@dataclass(frozen=True)
class AxiomReport:
    t_congruence: bool
    zeta_parity: bool
    ellipticity: bool | None
    holomorphy: bool
    detail: str = ""

    @property
    def passed(self) -> bool:
        return (
            self.t_congruence
            and self.zeta_parity
            and self.ellipticity in (True, None)
            and self.holomorphy
        )


def check_form_axioms(A: FJSeries, meta: FormMeta) -> AxiomReport:
    """Definition-level checks: q-exponent congruence mod 1, zeta-exponent
    parity, ellipticity under [1,0;0], and the holomorphy bound."""
    notes = []
    ok_t = slash_check_T(A, meta)
    if not ok_t:
        notes.append("q-exponents off the D/24 class")
    target = Fraction(meta.heis_parity, 2)
    ok_par = all(
        (Fraction(l, A.z_den) - target).denominator == 1 for _, l in A.terms
    )
    if not ok_par:
        notes.append("zeta-exponent parity mismatch")
    ok_ell = None
    if (2 * meta.index).denominator == 1:
        # coefficient form of invariance under [1,0;0]:
        # f(n,l) = (-1)^eps f(n+l+t, l+2t), checked on the support in both
        # shift directions wherever the partner exponent stays below prec
        sign = -1 if meta.heis_parity else 1
        t = meta.index
        ok_ell = True
        for (n, l), c in A.terms.items():
            qe, ze = Fraction(n, A.q_den), Fraction(l, A.z_den)
            for step in (1, -1):
                qe2 = qe + step * ze + t
                ze2 = ze + 2 * step * t
                if qe2 >= A.prec:
                    continue
                n2, l2 = qe2 * A.q_den, ze2 * A.z_den
                if n2.denominator != 1 or l2.denominator != 1:
                    ok_ell = False
                    break
                if A.terms.get((int(n2), int(l2))) != sign * c:
                    ok_ell = False
                    break
            if not ok_ell:
                break
        if not ok_ell:
            notes.append("ellipticity symmetry fails")
    t = meta.index
    ok_hol = True
    if A.terms and t > 0:
        ok_hol = A.hyperbolic_order(t) >= 0
    elif A.terms:
        ok_hol = all(l == 0 for _, l in A.terms) and A.q_order() >= 0
    if not ok_hol:
        notes.append("holomorphy bound 4nt-l^2 >= 0 fails")
    return AxiomReport(ok_t, ok_par, ok_ell, ok_hol, "; ".join(notes))


# --------------------------------------------------------------------------
# identity registry


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    group: str
    lhs: object
    rhs: object
    default_prec: Fraction
    note: str = ""
    variants: tuple = ()


@dataclass(frozen=True)
class VerificationReport:
    id: str
    passed: bool
    prec: Fraction
    detail: str = ""


def _theta01(P):
    return theta_char(Fraction(0), HALF, P)


def _theta10(P):
    return theta_char(HALF, Fraction(0), P)


def _theta00(P):
    return theta_char(Fraction(0), Fraction(0), P)


def _const(ab, P):
    return {"00": _theta00, "01": _theta01, "10": _theta10}[ab](P).eval_z_zero()


def _tr_lhs(N, a, b, c, d):
    p = TrParams(N, a, b, c, d)
    return lambda P: tr(p, P)[0]


def _zero(P):
    return FJSeries.zero(_frac(P))


def _gen(name, P):
    return spaces.generator(name, P)[0]


def _th(P):
    return theta(P)


def _build_registry() -> dict[str, IdentityRecord]:
    R = {}

    def add(id, group, lhs, rhs, prec, note="", variants=()):
        R[id] = IdentityRecord(id, group, lhs, rhs, _frac(prec), note, variants)

    # ---- products of all shifted characteristics (N = 2, 3) ----
    add("ap01", "prop01",
        lambda P: product_reduced(2, P) * _th(P),
        lambda P: eta_power(3, P) * _th(P).subs_z_multiple(2),
        5, note="cleared by theta(z)")
    add("c1", "prop01",
        lambda P: product_reduced(2, P).eval_z_zero(),
        lambda P: eta_power(3, P).scale(2),
        6)
    add("prod3_z", "prop01",
        lambda P: product_reduced(3, P) * _th(P),
        lambda P: (eta_power(8, P) * _th(P).subs_z_multiple(3)).scale(-1),
        6, note="cleared by theta(z)")
    add("prod3_0", "prop01",
        lambda P: product_reduced(3, P).eval_z_zero(),
        lambda P: eta_power(8, P).scale(-3),
        6)

    # ---- order-2 classics ----
    add("tr2_4_0_0_0", "coro1", _tr_lhs(2, 4, 0, 0, 0), _zero, 6)
    add("tr2_2_2_0_0", "coro1", _tr_lhs(2, 2, 2, 0, 0), _zero, 5)
    add("tr2_0_4_0_0", "coro1", _tr_lhs(2, 0, 4, 0, 0),
        lambda P: _th(P) ** 4, 6)
    add("tr2_3_0_1_0", "coro1", _tr_lhs(2, 3, 0, 1, 0),
        lambda P: (_th(P) ** 4).scale(-2), 6)
    add("tr2_1_2_1_0", "coro1", _tr_lhs(2, 1, 2, 1, 0), _zero, 7)
    add("tr2_8_0_0_0", "coro1", _tr_lhs(2, 8, 0, 0, 0),
        lambda P: eisenstein_2k(2, P).scale(2), 6)

    # ---- order-2 Eisenstein identities ----
    def e(k, m):
        if m == 1:
            return lambda P: jacobi_eisenstein_1(k, P).scale(2)
        return lambda P: jacobi_eisenstein(k, m, P).scale(2)

    def e_plus(k, m, coeff, tail):
        base = e(k, m)
        return lambda P: base(P) + tail(P).scale(coeff)

    def eta12_theta4(P):
        return eta_power(12, P) * _th(P) ** 4

    add("tr2_6_2_0_0", "coro2", _tr_lhs(2, 6, 2, 0, 0), e(4, 1), 5)
    add("tr2_10_2_0_0", "coro2", _tr_lhs(2, 10, 2, 0, 0),
        lambda P: (eta_power(12, P) * _gen("phi_0_1", P)).scale(-4), 5)
    add("tr2_14_2_0_0", "coro2", _tr_lhs(2, 14, 2, 0, 0), e(8, 1), 5)
    add("tr2_4_4_0_0", "coro2", _tr_lhs(2, 4, 4, 0, 0), e(4, 2), 6)
    add("tr2_2_6_0_0", "coro2", _tr_lhs(2, 2, 6, 0, 0), e(4, 3), 7)
    add("tr2_0_8_0_0", "coro2", _tr_lhs(2, 0, 8, 0, 0),
        e_plus(4, 4, 1, lambda P: _th(P) ** 8), 8,
        note="E_{4,4} via the normalized index raising of E_{4,1}")
    add("tr2_7_0_1_0", "coro2", _tr_lhs(2, 7, 0, 1, 0), e(4, 2), 6)
    add("tr2_6_0_2_0", "coro2", _tr_lhs(2, 6, 0, 2, 0),
        e_plus(4, 4, 2, lambda P: _th(P) ** 8), 8,
        note="E_{4,4} via the normalized index raising of E_{4,1}")
    add("tr2_12_4_0_0", "coro2", _tr_lhs(2, 12, 4, 0, 0),
        e_plus(8, 2, Fraction(272, 43), eta12_theta4), 6)
    add("tr2_15_0_1_0", "coro2", _tr_lhs(2, 15, 0, 1, 0),
        e_plus(8, 2, Fraction(2336, 43), eta12_theta4), 6)
    add("tr2_10_6_0_0", "coro2", _tr_lhs(2, 10, 6, 0, 0),
        e_plus(8, 3, Fraction(-28, 547),
               lambda P: eta12_theta4(P) * _gen("phi_0_1", P)), 7,
        note="phi_01 in the source read as phi_{0,1}")
    add("tr2_8_8_0_0", "coro2", _tr_lhs(2, 8, 8, 0, 0),
        e_plus(8, 4, Fraction(-73, 43),
               lambda P: eta12_theta4(P) * _gen("phi_0_2", P)), 8,
        note="E_{8,4} via the normalized index raising of E_{8,1}")
    add("tr2_13_2_1_0", "coro2", _tr_lhs(2, 13, 2, 1, 0),
        e_plus(8, 3, Fraction(2160, 547),
               lambda P: eta12_theta4(P) * _gen("phi_0_1", P)), 7,
        note="phi_01 in the source read as phi_{0,1}")
    add("tr2_5_2_1_0", "coro2", _tr_lhs(2, 5, 2, 1, 0), e(4, 3), 7)

    def _printed_11_4_1_0(P):
        out = FJSeries.zero()
        for ab, sgn, ex in (("01", 1, 11), ("10", 1, 11), ("00", 1, 12)):
            tc = {"00": _theta00, "01": _theta01, "10": _theta10}[ab](P)
            out = out + (
                _const(ab, P) ** ex * tc ** 4 * tc.subs_z_multiple(2)
            ).scale(sgn)
        return out

    add("tr2_11_4_1_0", "coro2", _tr_lhs(2, 11, 4, 1, 0),
        e_plus(8, 4, Fraction(271, 43),
               lambda P: eta12_theta4(P) * _gen("phi_0_2", P)), 8,
        note=("printed with theta_00^12 where the orbit sum has theta_00^11; "
              "both readings are checked"),
        variants=(("as_printed", _printed_11_4_1_0),))

    # ---- order-3 identities ----
    def th2_over_th(power):
        # RHS shape f * (theta(2z)/theta(z))^power, cleared by theta^power
        def clear(lhs_builder, f_builder):
            def lhs(P):
                return lhs_builder(P) * _th(P) ** power
            def rhs(P):
                return f_builder(P) * _th(P).subs_z_multiple(2) ** power
            return lhs, rhs
        return clear

    def add_cleared(id, group, lhs0, f, power, prec, mult=2, note=""):
        def lhs(P):
            return lhs0(P) * _th(P) ** power
        def rhs(P):
            return f(P) * _th(P).subs_z_multiple(mult) ** power
        R[id] = IdentityRecord(id, group, lhs, rhs, _frac(prec),
                               note or f"cleared by theta(z)^{power}")

    add("tr3_0_6_0_0", "coro3", _tr_lhs(3, 0, 6, 0, 0),
        lambda P: (_th(P) ** 6).scale(2), 7)
    add("tr3_6_0_0_0", "coro3", _tr_lhs(3, 6, 0, 0, 0), _zero, 6)
    add("tr3_3_3_0_0", "coro3", _tr_lhs(3, 3, 3, 0, 0), _zero, 6)
    add("tr3_12_0_0_0", "coro3", _tr_lhs(3, 12, 0, 0, 0),
        lambda P: eta_power(12, P).scale(-72), 6)
    add_cleared("tr3_9_3_0_0", "coro3", _tr_lhs(3, 9, 3, 0, 0),
                lambda P: eta_power(12, P).scale(-36), 1, 6)
    add_cleared("tr3_6_6_0_0", "coro3", _tr_lhs(3, 6, 6, 0, 0),
                lambda P: eta_power(12, P).scale(-18), 2, 7)
    add_cleared("tr3_3_9_0_0", "coro3", _tr_lhs(3, 3, 9, 0, 0),
                lambda P: eta_power(12, P).scale(-9), 3, 9)

    def tr3_0_12_lhs(P):
        return tr(TrParams(3, 0, 12, 0, 0), P)[0] * _th(P).subs_z_multiple(2)

    def tr3_0_12_rhs(P):
        return (eta_power(12, P) * _th(P).subs_z_multiple(4)).scale(-36) + (
            _th(P) ** 12 * _th(P).subs_z_multiple(2)
        ).scale(2)

    add("tr3_0_12_0_0", "coro3", tr3_0_12_lhs, tr3_0_12_rhs, 10,
        note="cleared by theta(2z)")
    add_cleared("tr3_21_3_0_0", "coro3", _tr_lhs(3, 21, 3, 0, 0),
                lambda P: eta_power(24, P).scale(756), 1, 6)
    add("tr3_24_0_0_0", "coro3", _tr_lhs(3, 24, 0, 0, 0),
        lambda P: eta_power(24, P).scale(1512), 6)
    add("tr3_4_1_1_0", "coro3", _tr_lhs(3, 4, 1, 1, 0), _zero, 6)
    add("tr3_1_4_1_0", "coro3", _tr_lhs(3, 1, 4, 1, 0), _zero, 8)
    add("tr3_2_2_2_0", "coro3", _tr_lhs(3, 2, 2, 2, 0), _zero, 9)
    add("tr3_0_3_3_0", "coro3", _tr_lhs(3, 0, 3, 3, 0),
        lambda P: (_th(P) ** 3 * _th(P).subs_z_multiple(2) ** 3).scale(2), 12)
    add("tr3_5_0_0_1", "coro3", _tr_lhs(3, 5, 0, 0, 1),
        lambda P: (_th(P) ** 5 * _th(P).subs_z_multiple(2)).scale(-3), 9)
    add("tr3_3_1_1_1", "coro3", _tr_lhs(3, 3, 1, 1, 1), _zero, 11)
    add("tr3_2_3_0_1", "coro3", _tr_lhs(3, 2, 3, 0, 1),
        lambda P: (_th(P) ** 4 * _th(P).subs_z_multiple(2) ** 2).scale(-3), 10)
    add("tr3_0_4_1_1", "coro3", _tr_lhs(3, 0, 4, 1, 1),
        lambda P: (
            _th(P) ** 4 * _th(P).subs_z_multiple(2) * _th(P).subs_z_multiple(3)
        ).scale(-1), 13)
    add_cleared("tr3_10_1_1_0", "coro3", _tr_lhs(3, 10, 1, 1, 0),
                lambda P: (eta_power(12, P) * _gen("phi_0_1", P)).scale(-3), 1, 7)
    add_cleared("tr3_11_0_0_1", "coro3", _tr_lhs(3, 11, 0, 0, 1),
                lambda P: (eta_power(12, P) * (
                    _gen("phi_0_1", P) * _gen("phi_0_2", P)
                    - _gen("phi_0_3", P).scale(15)
                )).scale(-3), 1, 9)
    add("tr3_1_1_4_0", "coro3", _tr_lhs(3, 1, 1, 4, 0),
        lambda P: (
            _th(P) ** 4 * _th(P).subs_z_multiple(2) * _th(P).subs_z_multiple(3)
        ).scale(3), 13)
    add("tr3_1_2_2_1", "coro3", _tr_lhs(3, 1, 2, 2, 1), _zero, 14)
    add_cleared("tr3_7_4_1_0", "coro3", _tr_lhs(3, 7, 4, 1, 0),
                lambda P: eta_power(12, P).scale(-24), 1, 9, mult=3)
    add_cleared("tr3_15_3_0_0", "coro3", _tr_lhs(3, 15, 3, 0, 0),
                lambda P: (eta_power(6, P) * eisenstein_2k(3, P)).scale(3), 1, 6)
    add("tr3_18_0_0_0", "coro3", _tr_lhs(3, 18, 0, 0, 0),
        lambda P: (eta_power(6, P) * eisenstein_2k(3, P)).scale(6), 6)
    add_cleared("tr3_27_3_0_0", "coro3", _tr_lhs(3, 27, 3, 0, 0),
                lambda P: (eta_power(18, P) * eisenstein_2k(3, P)).scale(-90), 1, 6)
    add("tr3_30_0_0_0", "coro3", _tr_lhs(3, 30, 0, 0, 0),
        lambda P: (eta_power(18, P) * eisenstein_2k(3, P)).scale(-180), 6)
    add("tr5_10_0_0_0", "coro3", _tr_lhs(5, 10, 0, 0, 0), _zero, 5)
    add("tr7_14_0_0_0", "coro3", _tr_lhs(7, 14, 0, 0, 0), _zero, 5)

    # ---- antisymmetric A-combinations ----
    def a1_2_2_0_printed(P):
        t01, t10 = _const("01", P), _const("10", P)
        v01, v10 = _theta01(P), _theta10(P)
        return (
            (t01 ** 10 * 2 + t01 ** 6 * t10 ** 4 * 2 - t01 ** 2 * t10 ** 8)
            * v01 ** 2
            + (t10 ** 10 * (-2) - t01 ** 4 * t10 ** 6 * 2 + t01 ** 8 * t10 ** 2)
            * v10 ** 2
        )

    def a2_2_2_0_printed(P):
        t01, t10 = _const("01", P), _const("10", P)
        v01, v10 = _theta01(P), _theta10(P)
        return (
            (t01 ** 8 * 2 + t01 ** 4 * t10 ** 4) * v01 ** 4
            + (t01 ** 6 * t10 ** 2 * 2 - t01 ** 2 * t10 ** 6 * 2) * v01 ** 2 * v10 ** 2
            - (t10 ** 8 * 2 + t01 ** 4 * t10 ** 4) * v10 ** 4
        )

    def a3_2_2_0_printed(P):
        t01, t10 = _const("01", P), _const("10", P)
        v01, v10 = _theta01(P), _theta10(P)
        return (
            v01 ** 6 * t01 ** 6 * 2
            + t01 ** 4 * t10 ** 2 * v01 ** 4 * v10 ** 2 * 3
            - t01 ** 2 * t10 ** 4 * v01 ** 2 * v10 ** 4 * 3
            - t10 ** 6 * v10 ** 6 * 2
            - (eta_power(6, P) * _th(P) ** 6).scale(Fraction(44, 61))
        )

    def a3_4_0_0_printed(P):
        t01, t10 = _const("01", P), _const("10", P)
        return t01 ** 12 * 2 + t01 ** 8 * t10 ** 4 * 3 - t01 ** 4 * t10 ** 8 * 3 - t10 ** 12 * 2

    add("a1_2_2_0", "a_corollary", a1_2_2_0_printed, e(6, 1), 5)
    add("a2_2_2_0", "a_corollary", a2_2_2_0_printed, e(6, 2), 6)
    add("a3_2_2_0", "a_corollary", a3_2_2_0_printed, e(6, 3), 7)
    add("a3_4_0_0", "a_corollary", a3_4_0_0_printed,
        lambda P: eisenstein_2k(3, P).scale(2), 6)

    # ---- weight-0 weak combinations ----
    add("w2_2_0_0", "cor_weak",
        lambda P: w_form(2, 2, 0, 0, P)[0].scale(4),
        lambda P: _gen("phi_0_1", P), 5)
    add("w2_0_1_0", "cor_weak",
        lambda P: w_form(2, 0, 1, 0, P)[0].scale(2),
        lambda P: _gen("phi_0_2", P), 6)
    add_cleared("w3_3_0_0", "cor_weak",
                lambda P: w_form(3, 3, 0, 0, P)[0],
                lambda P: FJSeries.constant(4, _frac(P) + 2), 1, 6)
    add_cleared("w3_0_0_1", "cor_weak",
                lambda P: w_form(3, 0, 0, 1, P)[0],
                lambda P: FJSeries.one(_frac(P) + 2), 3, 7)
    add_cleared("w3_1_1_0", "cor_weak",
                lambda P: w_form(3, 1, 1, 0, P)[0],
                lambda P: _gen("phi_0_1", P).scale(Fraction(1, 3)), 1, 7)

    # ---- further theta relations used in the derivative section ----
    add("theta_sq_quotient", "misc",
        lambda P: _th(P) ** 2 * _const("00", P) ** 2,
        lambda P: _const("01", P) ** 2 * _theta10(P) ** 2
        - _const("10", P) ** 2 * _theta01(P) ** 2,
        6, note="cleared by theta_00^2")

    return R


@lru_cache(maxsize=1)
def registry() -> dict[str, IdentityRecord]:
    return _build_registry()


def registry_count(group=None) -> int:
    return sum(1 for r in registry().values() if group is None or r.group == group)


# short tags for often-cited records, usable wherever an id is accepted
ID_ALIASES = {
    "c00": "tr2_4_0_0_0",
    "c01": "tr2_2_2_0_0",
    "c02": "tr2_6_2_0_0",
    "c03": "tr3_0_6_0_0",
    "ap05": "tr2_4_4_0_0",
    "ap06": "tr2_0_8_0_0",
}


def verify_identity(id: str, prec=None) -> VerificationReport:
    id = ID_ALIASES.get(id, id)
    rec = registry().get(id)
    if rec is None:
        raise UnknownIdentity(f"no identity registered under {id!r}")
    P0 = _frac(prec) if prec is not None else rec.default_prec
    candidates = [("orbit", rec.lhs)] + list(rec.variants)
    results = []
    passed_any = False
    used_prec = P0
    for name, lhs_builder in candidates:
        ok = True
        where = ""
        for Q in (P0, P0 + 2):
            lhs = lhs_builder(Q)
            rhs = rec.rhs(Q)
            Qc = min(lhs.prec, rhs.prec, Q)
            if Qc < min(Q, P0):
                raise InsufficientPrecision(
                    f"{id}: sides reach only order {Qc} < {Q}"
                )
            diff = lhs.first_difference(rhs, Qc)
            used_prec = Qc
            if diff is not None:
                ok = False
                where = f"first difference at q^{diff[0]} zeta^{diff[1]}"
                break
        results.append((name, ok, where))
        passed_any = passed_any or ok
    detail = "; ".join(
        f"{name}: {'PASS' if ok else 'FAIL ' + where}" for name, ok, where in results
    )
    if len(results) == 1:
        detail = results[0][2]
    return VerificationReport(id, passed_any, used_prec, detail)


def run_registry(group=None, prec=None) -> list[VerificationReport]:
    out = []
    for id in sorted(registry()):
        rec = registry()[id]
        if group is not None and rec.group != group:
            continue
        out.append(verify_identity(id, prec))
    return out


# --------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class SearchFinding:
    params: TrParams
    status: str  # ZERO | DECOMPOSED | INCONSISTENT | UNDETERMINED
    coefficients: tuple = ()
    labels: tuple = ()
    detail: str = ""


def search_relations(N: int, max_weight, max_index, prec=None) -> list[SearchFinding]:
    """Enumerate admissible Tr parameters within the bounds; report zero
    orbit sums (theta relations) and decompositions in the holomorphic
    space of the predicted meta."""
    max_weight = _frac(max_weight)
    max_index = _frac(max_index)
    findings = []
    smax = int(2 * max_weight)
    for s in range(2 * N, smax + 1, 2 * N):
        for a in range(s + 1):
            for b in range(s - a + 1):
                for c in range(s - a - b + 1):
                    d = s - a - b - c
                    if (b + 2 * c) % N:
                        continue
                    t = Fraction(b + 4 * c + N * N * d, 2)
                    if t > max_index:
                        continue
                    p = TrParams(N, a, b, c, d)
                    findings.append(_classify(p, prec))
    return findings


def _classify(p: TrParams, prec=None) -> SearchFinding:
    meta = p.meta
    Q = _frac(prec) if prec is not None else meta.index + 4
    series, _ = tr(p, Q)
    if series.is_zero():
        again, _ = tr(p, Q + 4)
        if again.is_zero():
            return SearchFinding(p, "ZERO")
        return SearchFinding(p, "UNDETERMINED",
                             detail="vanishes to low order only")
    try:
        basis = spaces.weak_basis(meta, Q)
        holo = spaces.holomorphic_subspace(basis)
        co = spaces.decompose(series, holo)
    except Inconsistent:
        return SearchFinding(p, "INCONSISTENT",
                             detail="outside the holomorphic space at this precision")
    except (Underdetermined, InsufficientPrecision) as exc:
        return SearchFinding(p, "UNDETERMINED", detail=str(exc))
    labels = tuple(e.label for e in holo.elements)
    return SearchFinding(p, "DECOMPOSED", tuple(co), labels)
