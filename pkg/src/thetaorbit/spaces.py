"""Weak Jacobi form ring generators, bases of the finite-dimensional spaces
J_{k,t} with eta character, and exact decomposition in such a basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycNum, ZERO, rational
from .errors import BadParameter, Inconsistent, InsufficientPrecision, Underdetermined
from .series import FJSeries, FormMeta, _frac, _lcm
from .thetas import eta_power, theta, xi
from .eisenstein import eisenstein_2k, jacobi_eisenstein_1

HALF = Fraction(1, 2)

GENERATOR_NAMES = (
    "phi_0_1",
    "phi_0_2",
    "phi_0_3",
    "phi_0_4",
    "phi_m2_1",
    "phi_m1_2",
    "phi_0_3/2",
    "phi_m1_1/2",
)


@lru_cache(maxsize=None)
def generator(name: str, prec) -> tuple[FJSeries, FormMeta]:
    """Named weak Jacobi form generators, built from their closed formulas."""
    prec = _frac(prec)
    P = prec + 1
    if name == "phi_0_1":
        E4 = eisenstein_2k(2, P)
        E6 = eisenstein_2k(3, P)
        num = E4 * E4 * jacobi_eisenstein_1(4, P) - E6 * jacobi_eisenstein_1(6, P)
        s = num.div(eta_power(24, P)).scale(Fraction(1, 144))
        return s, FormMeta(0, 1)
    if name == "phi_0_2":
        x00, x01, x10 = xi("00", P), xi("01", P), xi("10", P)
        s = ((x00 * x01) ** 2 + (x00 * x10) ** 2 + (x10 * x01) ** 2).scale(2)
        return s, FormMeta(0, 2)
    if name == "phi_0_3":
        th = theta(P)
        s = (th.subs_z_multiple(2) ** 2).div(th ** 2)
        return s, FormMeta(0, 3)
    if name == "phi_0_4":
        th = theta(P)
        s = th.subs_z_multiple(3).div(th)
        return s, FormMeta(0, 4)
    if name == "phi_m2_1":
        th = theta(P)
        s = (th ** 2).div(eta_power(6, P))
        return s, FormMeta(-2, 1)
    if name == "phi_m1_2":
        s = theta(P).subs_z_multiple(2).div(eta_power(3, P))
        return s, FormMeta(-1, 2)
    if name == "phi_0_3/2":
        th = theta(P)
        s = th.subs_z_multiple(2).div(th)
        return s, FormMeta(0, HALF * 3, heis_parity=1)
    if name == "phi_m1_1/2":
        s = theta(P).div(eta_power(3, P))
        return s, FormMeta(-1, HALF, heis_parity=1)
    raise BadParameter(f"unknown generator {name!r}")


@dataclass(frozen=True)
class BasisElement:
    series: FJSeries
    meta: FormMeta
    monomial: tuple[tuple[str, int], ...]
    label_override: str = ""

    @property
    def label(self) -> str:
        if self.label_override:
            return self.label_override
        if not self.monomial:
            return "1"
        return "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in self.monomial
        )


@dataclass(frozen=True)
class SpaceBasis:
    meta: FormMeta
    elements: tuple[BasisElement, ...]
    prec: Fraction
    kind: str

    @property
    def dim(self) -> int:
        return len(self.elements)


def _monomials(k1: int, t: int):
    """Exponents (a, b, alpha, beta) with phi_0_1^a phi_m2_1^b E4^alpha E6^beta
    of weight k1 and index t (k1 even, t >= 0)."""
    out = []
    for b in range(t + 1):
        a = t - b
        w = k1 + 2 * b
        if w < 0:
            continue
        for beta in range(w // 6 + 1):
            rest = w - 6 * beta
            if rest % 4 == 0:
                out.append((a, b, rest // 4, beta))
    return sorted(out)


def weak_basis(meta: FormMeta, prec) -> SpaceBasis:
    """Basis of the weak space of the given weight/index/character, obtained
    by stripping the eta factor, odd-weight and half-index cofactors, and
    enumerating monomials in phi_0_1, phi_m2_1 over C[E4, E6]."""
    prec = _frac(prec)
    if meta.quasi:
        raise BadParameter("quasi-modular meta cannot index a Jacobi form space")
    D = meta.eta_power
    tw = int(2 * meta.index)
    if meta.heis_parity != tw % 2:
        raise BadParameter("Heisenberg parity must match the index mod 1")
    k1 = meta.weight - Fraction(D, 2)
    if k1.denominator != 1:
        raise BadParameter("weight minus D/2 must be integral")
    k1 = int(k1)
    t = meta.index
    cofactors: list[str] = []
    if t.denominator == 2:
        if k1 % 2 == 0:
            if t < Fraction(3, 2):
                return SpaceBasis(meta, (), prec, "weak")
            cofactors.append("phi_0_3/2")
            t -= Fraction(3, 2)
        else:
            cofactors.append("phi_m1_1/2")
            k1 += 1
            t -= HALF
    if k1 % 2:
        if t < 2:
            return SpaceBasis(meta, (), prec, "weak")
        cofactors.append("phi_m1_2")
        k1 += 1
        t -= 2
    t = int(t)
    P = prec + 1
    head = FJSeries.one() if D == 0 else eta_power(D, P)
    for name in cofactors:
        head = head * generator(name, P)[0]
    p01, _ = generator("phi_0_1", P)
    pm21, _ = generator("phi_m2_1", P)
    E4 = eisenstein_2k(2, P)
    E6 = eisenstein_2k(3, P)
    elements = []
    for a, b, alpha, beta in _monomials(k1, t):
        s = head
        for f, e in ((p01, a), (pm21, b), (E4, alpha), (E6, beta)):
            if e:
                s = s * f ** e
        mono = []
        if D:
            mono.append(("eta", D))
        mono += [(name, 1) for name in cofactors]
        mono += [
            (n, e)
            for n, e in (("phi_0_1", a), ("phi_m2_1", b), ("E4", alpha), ("E6", beta))
            if e
        ]
        elements.append(BasisElement(s, meta, tuple(mono)))
    bprec = min([prec] + [e.series.prec for e in elements])
    basis = SpaceBasis(meta, tuple(elements), bprec, "weak")
    if elements and _rank(_matrix(basis)[0]) < len(elements):
        raise InsufficientPrecision("basis elements not separated at this precision")
    return basis


def _matrix(B: SpaceBasis, keys=None):
    """Rational coefficient matrix of the basis, rows indexed by (n, l)."""
    if not B.elements:
        return [], []
    qd = 1
    zd = 1
    for e in B.elements:
        qd = _lcm(qd, e.series.q_den)
        zd = _lcm(zd, e.series.z_den)
    lifted = [e.series.rescaled(qd, zd) for e in B.elements]
    if keys is None:
        keys = set()
        for s in lifted:
            keys |= {k for k in s.terms if Fraction(k[0], qd) < B.prec}
        keys = sorted(keys)
    rows = []
    for key in keys:
        row = []
        for s in lifted:
            c = s.terms.get(key, ZERO)
            if not c.is_rational():
                raise BadParameter("basis series must have rational coefficients")
            row.append(c.as_rational())
        rows.append(row)
    return rows, [(Fraction(n, qd), Fraction(l, zd)) for n, l in keys]


def _rank(rows) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def _nullspace(rows, ncols):
    """Reduced basis of the rational null space of the given rows."""
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def holomorphic_subspace(B: SpaceBasis) -> SpaceBasis:
    """Combinations of the basis whose visible coefficients all satisfy
    4nt - l^2 >= 0."""
    t = B.meta.index
    if B.prec < t + 1:
        raise InsufficientPrecision(
            f"holomorphy cut needs prec >= {t + 1}, have {B.prec}"
        )
    if not B.elements:
        return SpaceBasis(B.meta, (), B.prec, "holomorphic")
    rows, keys = _matrix(B)
    bad_rows = [
        row for row, (n, l) in zip(rows, keys) if 4 * n * t - l * l < 0
    ]
    null = _nullspace(bad_rows, len(B.elements))
    elements = []
    for v in null:
        s = FJSeries.zero()
        for c, e in zip(v, B.elements):
            if c:
                s = s + e.series.scale(c)
        parts = [
            B.elements[j].label if v[j] == 1 else f"({v[j]})*{B.elements[j].label}"
            for j in range(len(v))
            if v[j] != 0
        ]
        elements.append(
            BasisElement(s, B.meta, (), label_override=" + ".join(parts))
        )
    return SpaceBasis(B.meta, tuple(elements), B.prec, "holomorphic")


def decompose(A: FJSeries, B: SpaceBasis) -> list[CycNum]:
    """Exact coefficients expressing A in the basis B.

    The matched system must be consistent and strictly overdetermined.
    Raises Inconsistent if A is outside the span, Underdetermined if the
    precision cannot separate the basis elements.
    """
    if A.prec < B.prec:
        raise InsufficientPrecision(
            f"series precision {A.prec} below basis precision {B.prec}"
        )
    n_el = len(B.elements)
    if n_el == 0:
        if any(Fraction(n, A.q_den) < B.prec for n, _ in A.terms):
            raise Inconsistent("nonzero series against an empty basis")
        return []
    qd, zd = A.q_den, A.z_den
    for e in B.elements:
        qd = _lcm(qd, e.series.q_den)
        zd = _lcm(zd, e.series.z_den)
    lifted = [e.series.rescaled(qd, zd) for e in B.elements]
    Al = A.rescaled(qd, zd)
    keys = set()
    for s in lifted + [Al]:
        keys |= {k for k in s.terms if Fraction(k[0], qd) < B.prec}
    keys = sorted(keys)
    if len(keys) <= n_el:
        raise Underdetermined("not enough matched coefficients")
    # augmented elimination over the cyclotomic field
    rows = []
    for key in keys:
        row = [s.terms.get(key, ZERO) for s in lifted]
        row.append(Al.terms.get(key, ZERO))
        rows.append(row)
    rank = 0
    for col in range(n_el):
        piv = next((i for i in range(rank, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    if rank < n_el:
        raise Underdetermined("basis not separated by the matched coefficients")
    for i in range(rank, len(rows)):
        if not rows[i][-1].is_zero():
            raise Inconsistent("series is not in the span of the basis")
    return [rows[i][-1] for i in range(n_el)]
