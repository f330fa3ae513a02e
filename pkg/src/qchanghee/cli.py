"""Command-line front end.

    qchanghee compute changhee --n 4
    qchanghee verify all --max-n 10 --d 1,3,5 --max-r 3
    qchanghee expand changhee --n 4
    qchanghee padic --p 5 --q0 6 --N 4 --M 8 --integrand bracket_power:n=2
    qchanghee table stirling1 --max-n 4 --format csv

Exit codes: 0 success, 1 computation error or failed verification,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import factorial

from . import padic, suite
from .changhee import (
    changhee_gf,
    changhee_q_higher,
    changhee_q_poly_direct,
    gf_check_poly,
    binomial_gf,
)
from .combinat import stirling_table
from .exact import (
    PoleError,
    encode_bigrat,
    encode_qseries,
    encode_ratfn,
    encode_tseries,
    encode_ypoly,
    ratfn_limit_q1,
)
from .qeuler import (
    classical_changhee_poly,
    classical_euler_poly,
    euler_q_higher,
    euler_q_number,
    euler_q_poly,
    euler_q_poly_rebased,
)

COMPUTE_OBJECTS = (
    "changhee", "changhee-direct", "euler", "euler-number", "euler-rebased",
    "classical-euler", "classical-changhee",
)
TABLE_KINDS = (
    "stirling1", "stirling2", "changhee-numbers", "changhee-limits",
    "euler-numbers", "euler-limits", "classical-euler", "classical-changhee",
)
EXPAND_KINDS = ("changhee", "binomial", "qseries")


class UsageError(Exception):
    pass


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _limit_or_none(f):
    try:
        return encode_bigrat(ratfn_limit_q1(f))
    except PoleError:
        return None


def _odd_list(text):
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")
    if not vals or any(v < 1 or v % 2 == 0 for v in vals):
        raise argparse.ArgumentTypeError(f"--d needs odd positive integers, got {text!r}")
    return vals


def _prime_list(text):
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of primes, got {text!r}")
    if not vals or any(v % 2 == 0 or not padic.is_prime(v) for v in vals):
        raise argparse.ArgumentTypeError(f"--p needs odd primes, got {text!r}")
    return vals


def _common(sub):
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qchanghee",
        description="Exact Carlitz-type q-Changhee / q-Euler engine and verifier.",
    )
    cmds = parser.add_subparsers(dest="command", required=True)

    c = cmds.add_parser("compute", help="compute one object")
    c.add_argument("object", choices=COMPUTE_OBJECTS)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--d", type=int, default=1)
    c.add_argument("--a", type=int, default=0)
    c.add_argument("--form", choices=("closed", "double_sum"), default="closed")
    _common(c)

    v = cmds.add_parser("verify", help="run identity checks")
    v.add_argument("identity", choices=("all",) + suite.IDENTITIES)
    v.add_argument("--max-n", type=int, default=12)
    v.add_argument("--max-r", type=int, default=4)
    v.add_argument("--d", type=_odd_list, default=(1, 3, 5))
    v.add_argument("--K", type=int, default=40)
    v.add_argument("--M", type=int, default=60)
    v.add_argument("--p", type=_prime_list, default=(3, 5, 7))
    v.add_argument("--N", type=int, default=5)
    v.add_argument("--precision", type=int, default=10)
    _common(v)

    e = cmds.add_parser("expand", help="expand a generating function")
    e.add_argument("kind", choices=EXPAND_KINDS)
    e.add_argument("--n", type=int, required=True, help="t-order, or degree for qseries")
    e.add_argument("--r", type=int, default=1)
    e.add_argument("--x0", type=int, default=0)
    e.add_argument("--K", type=int, default=20)
    e.add_argument("--M", type=int, default=None)
    _common(e)

    p = cmds.add_parser("padic", help="approximate a fermionic p-adic q-integral")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q0", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--integrand", required=True,
                   help="kind[:key=value,...], e.g. bracket_power:n=2,x0=1")
    p.add_argument("--r", type=int, default=1, help="fold count (bracket_power only)")
    _common(p)

    t = cmds.add_parser("table", help="emit a table")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--min-n", type=int, default=0)
    _common(t)
    return parser


def _validate(args):
    def need(cond, msg):
        if not cond:
            raise UsageError(msg)

    for name in ("n", "max_n", "min_n", "x0", "K", "M", "N", "a"):
        val = getattr(args, name, None)
        if val is not None:
            need(val >= 0, f"--{name.replace('_', '-')} must be >= 0")
    for name in ("r", "max_r", "precision"):
        val = getattr(args, name, None)
        if val is not None:
            need(val >= 1, f"--{name.replace('_', '-')} must be >= 1")
    if args.command == "compute":
        need(args.d >= 1 and args.d % 2 == 1, "--d must be odd and positive")
        need(0 <= args.a < args.d, "--a must lie in [0, d-1]")
    if args.command == "padic":
        need(args.p % 2 == 1 and padic.is_prime(args.p), "--p must be an odd prime")
        need(args.M >= 1, "--M must be >= 1")
        need((1 - args.q0) % args.p == 0, "--q0 must satisfy q0 = 1 mod p")
        try:
            args.integrand = padic.IntegrandSpec.parse(args.integrand)
        except (padic.PadicError, ValueError, TypeError) as exc:
            raise UsageError(f"bad --integrand: {exc}")
        if args.r > 1:
            need(args.integrand.kind == "bracket_power", "--r > 1 needs a bracket_power integrand")
    if args.command == "expand" and args.kind == "qseries" and args.M is not None:
        need(args.M >= args.K, "insufficient truncation: --M must be >= --K")


def _compute(args):
    n, r = args.n, args.r
    obj = args.object
    if obj == "changhee":
        val = changhee_q_higher(n, r)
        return {"object": obj, "n": n, "r": r, "poly": encode_ypoly(val.poly),
                "number": encode_ratfn(val.number), "limit_q1": _limit_or_none(val.number)}
    if obj == "changhee-direct":
        val = changhee_q_poly_direct(n, args.form)
        return {"object": obj, "n": n, "form": args.form, "poly": encode_ypoly(val.poly),
                "number": encode_ratfn(val.number)}
    if obj == "euler":
        poly = euler_q_poly(n) if r == 1 else euler_q_higher(n, r)
        number = poly.at_one()
        return {"object": obj, "n": n, "r": r, "poly": encode_ypoly(poly),
                "number": encode_ratfn(number), "limit_q1": _limit_or_none(number)}
    if obj == "euler-number":
        val = euler_q_number(n)
        return {"object": obj, "n": n, "value": encode_ratfn(val), "limit_q1": _limit_or_none(val)}
    if obj == "euler-rebased":
        poly = euler_q_poly_rebased(n, args.d, args.a)
        return {"object": obj, "n": n, "d": args.d, "a": args.a, "poly": encode_ypoly(poly)}
    if obj == "classical-euler":
        return {"object": obj, "n": n,
                "coeffs": [encode_bigrat(c) for c in classical_euler_poly(n).coeffs]}
    return {"object": obj, "n": n,
            "coeffs": [encode_bigrat(c) for c in classical_changhee_poly(n).coeffs]}


def _verify(args):
    ranges = suite.Ranges(
        max_n=args.max_n, ds=args.d, max_r=args.max_r, K=args.K, M=max(args.M, args.K),
        primes=args.p, N_max=args.N, precision=args.precision,
    )
    names = "all" if args.identity == "all" else (args.identity,)
    results = suite.run(names, ranges)
    ok = all(r["zero"] for r in results)
    return {"ok": ok, "results": results}, ok


def _expand(args):
    if args.kind == "changhee":
        return {"object": "changhee_gf", "r": args.r, "series": encode_tseries(changhee_gf(args.n, args.r))}
    if args.kind == "binomial":
        return {"object": "binomial_gf", "series": encode_tseries(binomial_gf(args.n))}
    M = args.M if args.M is not None else args.K
    a, b = gf_check_poly(args.n, args.x0, M, args.K)
    return {"object": "qseries_check", "n": args.n, "x0": args.x0, "K": args.K, "M": M,
            "series_side": encode_qseries(a), "exact_side": encode_qseries(b), "equal": a == b}


def _padic(args):
    f = args.integrand
    if args.r == 1:
        approx = padic.fermionic_integral(f, args.p, args.q0, args.N, args.M)
    else:
        approx = padic.multivariate_integral(f.n, args.r, args.p, args.q0, args.N, args.M, f.x0)
    target = padic.exact_target(f, args.q0, args.r)
    vval = None
    if target is not None:
        goal = padic.target_residue(target, args.p, args.q0, args.M)
        vval = padic.valuation((approx.residue - goal) % approx.modulus, args.p, args.M)
    return {"p": args.p, "q0": args.q0, "M": args.M, "N": args.N, "r": args.r,
            "integrand": str(f), "residue": str(approx.residue),
            "valuation_vs_target": vval, "backend": padic.BACKEND}


def emit_table(kind, min_n, max_n, fmt):
    """Serialize a table deterministically; CSV rows are sorted by n."""
    rows = []
    if kind in ("stirling1", "stirling2"):
        header = ("n", "k", "value")
        if max_n >= min_n:
            table = stirling_table("first" if kind == "stirling1" else "second", max_n)
            for n in range(min_n, max_n + 1):
                for k in range(n + 1):
                    rows.append((n, k, table[n, k]))
        if fmt == "json":
            return _dumps([{"n": n, "k": k, "value": str(v)} for n, k, v in rows])
    else:
        header = ("n", "object", "json_value")
        for n in range(min_n, max_n + 1):
            rows.append((n, kind, _dumps(_table_value(kind, n))))
        if fmt == "json":
            return _dumps([{"n": n, "object": obj, "value": json.loads(v)} for n, obj, v in rows])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _table_value(kind, n):
    if kind == "changhee-numbers":
        return encode_ratfn(changhee_q_higher(n, 1).number)
    if kind == "changhee-limits":
        return encode_bigrat(ratfn_limit_q1(changhee_q_higher(n, 1).number))
    if kind == "euler-numbers":
        return encode_ratfn(euler_q_number(n))
    if kind == "euler-limits":
        return encode_bigrat(ratfn_limit_q1(euler_q_number(n)))
    if kind == "classical-euler":
        return [encode_bigrat(c) for c in classical_euler_poly(n).coeffs]
    return [encode_bigrat(c) for c in classical_changhee_poly(n).coeffs]


def _csv_single(obj):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("n", "object", "json_value"))
    w.writerow((obj.get("n", ""), obj.get("object", obj.get("identity", "")), _dumps(obj)))
    return buf.getvalue().rstrip("\n")


def _verify_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("identity", "params", "zero"))
    for r in report["results"]:
        w.writerow((r["identity"], _dumps(r["params"]), str(r["zero"]).lower()))
    return buf.getvalue().rstrip("\n")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qchanghee: error: {exc}", file=sys.stderr)
        return 2

    status = 0
    try:
        if args.command == "compute":
            obj = _compute(args)
            text = _dumps(obj) if args.format == "json" else _csv_single(obj)
        elif args.command == "verify":
            report, ok = _verify(args)
            status = 0 if ok else 1
            text = _dumps(report) if args.format == "json" else _verify_csv(report)
        elif args.command == "expand":
            obj = _expand(args)
            text = _dumps(obj) if args.format == "json" else _csv_single(obj)
        elif args.command == "padic":
            obj = _padic(args)
            text = _dumps(obj) if args.format == "json" else _csv_single(obj)
        else:
            text = emit_table(args.kind, args.min_n, args.max_n, args.format)
    except (ArithmeticError, ValueError) as exc:
        print(f"qchanghee: error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text + "\n")
        else:
            sys.stdout.write(text + "\n")
    except OSError as exc:
        print(f"qchanghee: error: {exc}", file=sys.stderr)
        return 1
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
