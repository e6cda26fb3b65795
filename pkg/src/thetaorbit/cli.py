"""Command line surface: expansion printing, identity verification, space
queries, decomposition, relation search, and a persistent expansion cache.

Exit codes: 0 success, 1 verification failure, 2 usage error.  All JSON
output is canonically ordered so identical invocations are byte-identical;
rationals are rendered as "p/q" strings, never floats.
"""

import argparse
import hashlib
import json
import os
import re
import sys
from fractions import Fraction

from .cyclotomic import CycNum
from .eisenstein import e21p, eisenstein_2k, g2, jacobi_eisenstein, jacobi_eisenstein_1
from .errors import ThetaOrbitError
from .series import FJSeries, FormMeta, INF
from .spaces import (
    GENERATOR_NAMES,
    decompose,
    generator,
    holomorphic_subspace,
    weak_basis,
)
from .thetas import eta, eta_power, theta, theta_char, theta_constant, xi
from . import applications as apps
from . import relations as rel

CACHE_VERSION = 1


def _frac_str(x) -> str:
    if x == INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s: str) -> Fraction:
    return Fraction(s)


# --------------------------------------------------------------------------
# named series

_TR_ID = re.compile(r"^tr(\d+)_(\d+)_(\d+)_(\d+)_(\d+)$")
_EKM = re.compile(r"^E(\d+),(\d+)$")
_E21P = re.compile(r"^E2,1,p=(\d+)$")
_ETA_POW = re.compile(r"^eta\^(\d+)$")
_THETA_AB = re.compile(r"^theta_([0-9/-]+),([0-9/-]+)$")


def resolve_series(name: str, prec):
    """Series registered under a stable name, with its meta when known.

    Accepted shapes: theta, eta, eta^k, delta, theta00/theta01/theta10,
    xi00/xi01/xi10, theta_a,b with rational a and b, E2, E4, E6, ...,
    Ek,m (e.g. E4,2), E2,1,p=2, the phi generators, and trN_a_b_c_d.
    """
    prec = Fraction(prec)
    if name == "theta":
        from .thetas import THETA_META
        return theta(prec), THETA_META
    if name == "eta":
        from .thetas import ETA_META
        return eta(prec), ETA_META
    if name == "delta":
        return eta_power(24, prec), FormMeta(12, 0)
    m = _ETA_POW.match(name)
    if m:
        k = int(m.group(1))
        return eta_power(k, prec), FormMeta(Fraction(k, 2), 0, eta_power=k)
    if name in ("theta00", "theta01", "theta10"):
        return theta_constant(name[-2:], prec), None
    if name in ("xi00", "xi01", "xi10"):
        return xi(name[-2:], prec), None
    m = _THETA_AB.match(name)
    if m:
        return theta_char(Fraction(m.group(1)), Fraction(m.group(2)), prec), None
    m = _E21P.match(name)
    if m:
        return e21p(int(m.group(1)), prec), FormMeta(2, 1)
    m = _EKM.match(name)
    if m:
        k, idx = int(m.group(1)), int(m.group(2))
        s = jacobi_eisenstein_1(k, prec) if idx == 1 else jacobi_eisenstein(k, idx, prec)
        return s, FormMeta(k, idx)
    if name == "E2":
        return eisenstein_2k(1, prec), FormMeta(2, 0, quasi=True)
    if name == "G2":
        return g2(prec), FormMeta(2, 0, quasi=True)
    if re.match(r"^E(\d+)$", name):
        k = int(name[1:])
        if k % 2 or k < 4:
            raise KeyError(name)
        return eisenstein_2k(k // 2, prec), FormMeta(k, 0)
    if name in GENERATOR_NAMES:
        return generator(name, prec)
    m = _TR_ID.match(name)
    if m:
        p = rel.TrParams(*(int(g) for g in m.groups()))
        return rel.tr(p, prec)
    raise KeyError(name)


# --------------------------------------------------------------------------
# pretty printing

def _coef_str(c: CycNum) -> str:
    if c.is_rational():
        r = c.as_rational()
        return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    L = c.order
    parts = []
    for j, v in enumerate(c.coeffs):
        if v == 0:
            continue
        num, den = v.numerator, v.denominator
        s = str(num) if den == 1 else f"{num}/{den}"
        if j == 0:
            parts.append(s)
        else:
            root = f"zeta_{L}" if j == 1 else f"zeta_{L}^{j}"
            if s == "1":
                parts.append(root)
            elif s == "-1":
                parts.append(f"-{root}")
            else:
                parts.append(f"{s}*{root}")
    joined = " + ".join(parts).replace("+ -", "- ")
    return f"({joined})" if len(parts) > 1 else joined


def _wrap(label: str) -> str:
    return f"({label})" if " + " in label else label


def _zeta_str(l: Fraction) -> str:
    if l == 0:
        return ""
    if l == 1:
        return "zeta"
    return f"zeta^{{{l}}}"


def pretty(A: FJSeries) -> str:
    rows = {}
    for (n, l), c in sorted(A.terms.items()):
        rows.setdefault(Fraction(n, A.q_den), []).append((Fraction(l, A.z_den), c))
    chunks = []
    for qe in sorted(rows):
        parts = []
        for l, c in rows[qe]:
            cs = _coef_str(c)
            zs = _zeta_str(l)
            if not zs:
                parts.append(cs)
            elif cs == "1":
                parts.append(zs)
            elif cs == "-1":
                parts.append(f"-{zs}")
            else:
                parts.append(f"{cs}{zs}")
        body = " + ".join(parts).replace("+ -", "- ")
        if qe == 0:
            chunks.append(body)
        else:
            qs = "q" if qe == 1 else f"q^{{{qe}}}"
            chunks.append(f"{qs}({body})" if len(parts) > 1 else f"{qs}*{body}")
    if A.prec != INF:
        chunks.append("O(q)" if A.prec == 1 else f"O(q^{{{Fraction(A.prec)}}})")
    return " + ".join(chunks).replace("+ -", "- ") if chunks else "0"


# --------------------------------------------------------------------------
# cache

def _cache_dir() -> str:
    return os.environ.get("THETA_ORBIT_CACHE", "./.theta_cache")


def _cache_key(name: str, prec) -> str:
    raw = f"{name}|{_frac_str(prec)}|v{CACHE_VERSION}"
    return hashlib.sha256(raw.encode()).hexdigest()


def _payload_checksum(payload: dict) -> str:
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()


def cache_load(name: str, prec):
    path = os.path.join(_cache_dir(), _cache_key(name, prec) + ".json")
    try:
        with open(path) as fh:
            entry = json.load(fh)
        if entry.get("version") != CACHE_VERSION:
            return None
        if entry.get("checksum") != _payload_checksum(entry["payload"]):
            return None
        return FJSeries.from_json(entry["payload"])
    except (OSError, ValueError, KeyError):
        return None


def cache_store(name: str, prec, A: FJSeries) -> None:
    d = _cache_dir()
    os.makedirs(d, exist_ok=True)
    payload = A.to_json()
    entry = {
        "version": CACHE_VERSION,
        "name": name,
        "prec": _frac_str(prec),
        "payload": payload,
        "checksum": _payload_checksum(payload),
    }
    path = os.path.join(d, _cache_key(name, prec) + ".json")
    tmp = path + f".tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        json.dump(entry, fh, sort_keys=True)
    os.replace(tmp, path)


# --------------------------------------------------------------------------
# commands

def cmd_expand(args) -> int:
    try:
        A = cache_load(args.name, args.prec)
        if A is None:
            A, _ = _resolved(args.name, args.prec)
            cache_store(args.name, args.prec, A)
    except KeyError:
        print(f"unknown series name: {args.name}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(A.to_json(), sort_keys=True))
    else:
        print(pretty(A))
    return 0


def _resolved(name, prec):
    return resolve_series(name, prec)


def _verify_one(ident, prec):
    try:
        rep = rel.verify_identity(ident, prec)
        return (rep.id, rep.passed, _frac_str(rep.prec), rep.detail)
    except ThetaOrbitError as exc:
        return (ident, False, "?", f"{type(exc).__name__}: {exc}")


def _section5_reports(args):
    out = []
    suites = [
        (f"wp_products_N{args.wp_N}",
         lambda: apps.verify_wp_products(args.wp_N, args.prec or 3)),
        ("derivative_formulas",
         lambda: apps.verify_derivative_formulas(args.prec or 10)),
        ("special_values", lambda: apps.verify_special_values(args.prec or 8)),
        ("class_numbers",
         lambda: apps.verify_class_number_identities(args.prec or 8, args.nmax)),
    ]
    for name, run in suites:
        report = run()
        for item in report.items:
            out.append((f"{name}: {item.label}", item.passed, "-", item.detail))
    return out


def cmd_verify(args) -> int:
    prec = Fraction(args.prec) if args.prec else None
    if args.section == 5:
        results = _section5_reports(args)
    elif args.all:
        ids = sorted(rel.registry())
        if args.jobs > 1:
            import multiprocessing as mp

            with mp.Pool(args.jobs) as pool:
                results = pool.starmap(_verify_one, [(i, prec) for i in ids])
        else:
            results = [_verify_one(i, prec) for i in ids]
    elif args.id:
        unknown = [
            i for i in args.id
            if rel.ID_ALIASES.get(i, i) not in rel.registry()
        ]
        if unknown:
            print(f"unknown identity ids: {', '.join(unknown)}", file=sys.stderr)
            return 2
        results = [_verify_one(i, prec) for i in args.id]
    else:
        print("verify needs --all, --id, or --section 5", file=sys.stderr)
        return 2
    if args.json:
        rows = []
        for ident, passed, used, detail in results:
            row = {"id": ident, "status": "PASS" if passed else "FAIL", "prec_used": used}
            if not passed and detail:
                row["locus"] = detail
            elif detail:
                row["note"] = detail
            rows.append(row)
        print(json.dumps(rows, sort_keys=True))
    else:
        for ident, passed, used, detail in results:
            line = f"{'PASS' if passed else 'FAIL'}  {ident}"
            if detail:
                line += f"  [{detail}]"
            print(line)
        n_fail = sum(1 for r in results if not r[1])
        print(f"{len(results) - n_fail}/{len(results)} passed")
    return 0 if all(r[1] for r in results) else 1


def _meta_from_args(args) -> FormMeta:
    return FormMeta(
        Fraction(args.weight),
        Fraction(args.index),
        eta_power=args.eta,
        heis_parity=args.parity,
    )


def _basis_json(B) -> dict:
    return {
        "dimension": B.dim,
        "kind": B.kind,
        "prec": _frac_str(B.prec),
        "elements": [
            {"label": el.label, "series": el.series.to_json()} for el in B.elements
        ],
    }


def cmd_spaces(args) -> int:
    meta = _meta_from_args(args)
    prec = Fraction(args.prec) if args.prec else meta.index + 4
    B = weak_basis(meta, prec)
    if args.holomorphic:
        B = holomorphic_subspace(B)
    if args.json:
        print(json.dumps(_basis_json(B), sort_keys=True))
    else:
        print(f"dimension {B.dim} ({B.kind})")
        for el in B.elements:
            print(f"  {el.label}")
    return 0


def cmd_decompose(args) -> int:
    prec = Fraction(args.prec) if args.prec else None
    m = _TR_ID.match(args.target)
    if m:
        params = rel.TrParams(*(int(g) for g in m.groups()))
        meta = params.meta
        P = prec if prec is not None else meta.index + 4
        A, meta = rel.tr(params, P)
    else:
        try:
            P = prec if prec is not None else Fraction(6)
            A, meta = _resolved(args.target, P)
        except KeyError:
            print(f"unknown target: {args.target}", file=sys.stderr)
            return 2
        if meta is None:
            print("target has no associated weight/index", file=sys.stderr)
            return 2
    B = weak_basis(meta, A.prec)
    if args.holomorphic:
        B = holomorphic_subspace(B)
    try:
        coeffs = decompose(A, B)
    except ThetaOrbitError as exc:
        print(f"decomposition failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    pairs = [
        (el.label, c) for el, c in zip(B.elements, coeffs) if not c.is_zero()
    ]
    if args.json:
        print(json.dumps(
            {
                "target": args.target,
                "weight": _frac_str(meta.weight),
                "index": _frac_str(meta.index),
                "coefficients": [
                    {"label": lbl, "c": c.to_json()} for lbl, c in pairs
                ],
            },
            sort_keys=True,
        ))
    else:
        if not pairs:
            print("0")
        for lbl, c in pairs:
            print(f"{_coef_str(c)} * {_wrap(lbl)}")
    return 0


def cmd_search(args) -> int:
    prec = Fraction(args.prec) if args.prec else None
    findings = rel.search_relations(args.N, args.max_weight, args.max_index, prec)
    if args.json:
        rows = []
        for f in findings:
            p = f.params
            rows.append({
                "params": [p.N, p.a, p.b, p.c, p.d],
                "status": f.status,
                "labels": list(f.labels),
                "coefficients": [c.to_json() for c in f.coefficients],
                "detail": f.detail,
            })
        print(json.dumps(rows, sort_keys=True))
    else:
        for f in findings:
            p = f.params
            desc = f"Tr^({p.N})_{p.a},{p.b},{p.c},{p.d}"
            line = f"{f.status:13s} {desc}"
            if f.status == "DECOMPOSED":
                line += "  =  " + " + ".join(
                    f"{_coef_str(c)}*{_wrap(lbl)}"
                    for c, lbl in zip(f.coefficients, f.labels)
                    if not c.is_zero()
                )
            if f.detail:
                line += f"  [{f.detail}]"
            print(line)
    return 0


def cmd_cache(args) -> int:
    d = _cache_dir()
    if args.action == "clear":
        n = 0
        if os.path.isdir(d):
            for fn in os.listdir(d):
                if fn.endswith(".json"):
                    os.unlink(os.path.join(d, fn))
                    n += 1
        print(f"removed {n} entries")
        return 0
    entries = [fn for fn in os.listdir(d)] if os.path.isdir(d) else []
    size = sum(os.path.getsize(os.path.join(d, fn)) for fn in entries)
    print(f"{len(entries)} entries, {size} bytes in {d}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="thetaorbit",
        description="exact Fourier-Jacobi expansions, theta relations, and searches",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print a named expansion")
    p.add_argument("name")
    p.add_argument("--prec", type=_parse_frac, default=Fraction(4))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="verify registered identities")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id", action="append")
    p.add_argument("--section", type=int, choices=[5])
    p.add_argument("--wp-N", type=int, default=3, dest="wp_N")
    p.add_argument("--nmax", type=int, default=50)
    p.add_argument("--prec", type=_parse_frac)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spaces", help="weak/holomorphic space bases")
    p.add_argument("--weight", required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--eta", type=int, default=0)
    p.add_argument("--parity", type=int, default=0)
    p.add_argument("--holomorphic", action="store_true")
    p.add_argument("--prec", type=_parse_frac)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spaces)

    p = sub.add_parser("decompose", help="express a form in a space basis")
    p.add_argument("--target", required=True)
    p.add_argument("--holomorphic", action="store_true")
    p.add_argument("--prec", type=_parse_frac)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("search", help="enumerate orbit relations")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-weight", type=_parse_frac, required=True)
    p.add_argument("--max-index", type=_parse_frac, required=True)
    p.add_argument("--prec", type=_parse_frac)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("cache", help="expansion cache maintenance")
    p.add_argument("action", choices=["clear", "stats"])
    p.set_defaults(func=cmd_cache)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ThetaOrbitError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
