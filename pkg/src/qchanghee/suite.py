"""Verification sweeps over the identity catalogue.

Each check yields a JSON-ready record ``{"identity", "params", "zero",
"residual"}``; the p-adic checks carry ``"valuations"`` instead of a
residual polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .changhee import (
    changhee_q_poly,
    gf_check,
    gf_check_poly,
    verify_binomial_moment,
    verify_distribution,
    verify_higher_reduction,
    verify_path_equality,
    verify_recurrence,
    verify_round_trip,
    verify_shift_gf,
)
from .combinat import stirling1, stirling2
from .exact import QPoly, QRatFn, YPoly, encode_ypoly, ratfn_limit_q1, ratfn_reduce
from .padic import (
    IntegrandSpec,
    check_functional_equation,
    convergence_profile,
    exact_target,
    max_level,
    profile_ok,
)
from .qeuler import (
    classical_changhee_poly,
    classical_euler_poly,
    euler_q_higher,
    euler_q_number,
    euler_q_poly,
)

IDENTITIES = (
    "theorem1", "theorem2", "theorem3", "theorem4", "theorem5", "theorem6",
    "shift_gf", "binomial_moment", "higher_reduction", "higher_round_trip",
    "carlitz", "stirling", "classical", "padic",
)


@dataclass
class Ranges:
    max_n: int = 12
    gf_max_n: int = 8
    gf_poly_max_n: int = 6
    dist_max_n: int = 8
    higher_max_n: int = 8
    ds: tuple = (1, 3, 5)
    max_r: int = 4
    K: int = 40
    M: int = 60
    K_poly: int = 30
    M_poly: int = 50
    x0s: tuple = (0, 1, 2)
    stirling_max_n: int = 14
    primes: tuple = (3, 5, 7)
    N_max: int = 5
    precision: int = 10


def _record(identity, params, residual: YPoly):
    return {
        "identity": identity,
        "params": params,
        "zero": residual.is_zero(),
        "residual": encode_ypoly(residual),
    }


def _const(value):
    return YPoly((value,))


def _theorem1(rg):
    for n in range(rg.max_n + 1):
        yield verify_path_equality(n, "closed").to_json()


def _theorem5(rg):
    for n in range(rg.max_n + 1):
        yield verify_path_equality(n, "double_sum").to_json()


def _theorem2(rg):
    for n in range(rg.max_n + 1):
        yield verify_round_trip(n, 1).to_json()


def _higher_round_trip(rg):
    for r in range(2, rg.max_r + 1):
        for n in range(min(rg.max_n, rg.higher_max_n) + 1):
            yield verify_round_trip(n, r).to_json()


def _higher_reduction(rg):
    for n in range(rg.max_n + 1):
        yield verify_higher_reduction(n).to_json()


def _theorem3(rg):
    for n in range(min(rg.max_n, rg.gf_max_n) + 1):
        a, b = gf_check(n, rg.M, rg.K)
        yield _record("theorem3", {"n": n, "x0": 0, "M": rg.M, "K": rg.K},
                      _const(_series_diff(a, b)))
    K, M = min(rg.K, rg.K_poly), max(min(rg.M, rg.M_poly), min(rg.K, rg.K_poly))
    for n in range(min(rg.max_n, rg.gf_poly_max_n) + 1):
        for x0 in rg.x0s:
            if x0 == 0:
                continue
            a, b = gf_check_poly(n, x0, M, K)
            yield _record("theorem3", {"n": n, "x0": x0, "M": M, "K": K},
                          _const(_series_diff(a, b)))


def _series_diff(a, b):
    return ratfn_reduce(QPoly((a - b).coeffs), QPoly((1,)))


def _theorem4(rg):
    for n in range(rg.max_n + 1):
        yield verify_recurrence(n).to_json()


def _theorem6(rg):
    for d in rg.ds:
        for n in range(min(rg.max_n, rg.dist_max_n) + 1):
            yield verify_distribution(n, d).to_json()


def _shift_gf(rg):
    yield verify_shift_gf(min(rg.max_n, rg.gf_max_n)).to_json()


def _binomial_moment(rg):
    for n in range(rg.max_n + 1):
        yield verify_binomial_moment(n).to_json()


def carlitz_residual(n: int) -> QRatFn:
    """q sum_k C(n,k) q^k E_{k,q} + E_{n,q} - [2]_q [n = 0]."""
    acc = QRatFn(0)
    for k in range(n + 1):
        acc = acc + euler_q_number(k) * QRatFn.q_power(k) * comb(n, k)
    acc = acc * QRatFn.q() + euler_q_number(n)
    if n == 0:
        acc = acc - QRatFn.from_int_poly((1, 1))
    return acc


def _carlitz(rg):
    for n in range(rg.max_n + 1):
        yield _record("carlitz", {"n": n}, _const(carlitz_residual(n)))


def _stirling(rg):
    top = rg.stirling_max_n
    for n in range(top + 1):
        for m in range(n + 1):
            delta = 1 if n == m else 0
            a = sum(stirling2(n, k) * stirling1(k, m) for k in range(m, n + 1)) - delta
            b = sum(stirling1(n, k) * stirling2(k, m) for k in range(m, n + 1)) - delta
            yield _record("stirling", {"n": n, "m": m}, _const(QRatFn(a)) + YPoly.monomial(1, b))


def _classical(rg):
    for n in range(rg.max_n + 1):
        for x0 in range(6):
            ch = ratfn_limit_q1(changhee_q_poly(n).poly.at_x(x0)) - classical_changhee_poly(n)(x0)
            eu = ratfn_limit_q1(euler_q_poly(n).at_x(x0)) - classical_euler_poly(n)(x0)
            yield _record("classical", {"n": n, "x0": x0}, YPoly((ch, eu)))
        closed = QRatFn((-1) ** n * factorial(n)) / 2**n
        number = ratfn_limit_q1(changhee_q_poly(n).number)
        yield _record("classical", {"n": n, "number": True}, _const(number - closed))


def _padic_cases(rg):
    for p in rg.primes:
        q0 = 1 + p
        for n in range(4):
            for x0 in (0, 1):
                yield p, q0, IntegrandSpec("bracket_power", n=n, x0=x0), 1
                if n < p:
                    yield p, q0, IntegrandSpec("bracket_binom", n=n, x0=x0), 1
                yield p, 1, IntegrandSpec("falling", n=n, x0=x0), 1
        for l in range(3):
            yield p, q0, IntegrandSpec("q_power", l=l), 1
        yield p, q0, IntegrandSpec("constant", c=3), 1
        for n in range(3):
            yield p, q0, IntegrandSpec("bracket_power", n=n), 2


def _padic(rg):
    for p, q0, f, r in _padic_cases(rg):
        N_max = rg.N_max if r == 1 else min(rg.N_max, max_level(p, r))
        if r == 1:
            target = exact_target(f, q0)
        else:
            target = euler_q_higher(f.n, r)
        vals = convergence_profile(f, target, p, q0, N_max, rg.precision, r=r)
        ok = profile_ok(vals)
        if r == 1:
            fe = [check_functional_equation(f, p, q0, N, rg.precision)
                  for N in range(1, rg.N_max + 1)]
            ok = ok and all(v >= N for N, v in enumerate(fe, start=1))
        else:
            fe = None
        yield {
            "identity": "padic",
            "params": {"p": p, "q0": q0, "integrand": str(f), "r": r,
                       "M": rg.precision, "N_max": N_max},
            "zero": ok,
            "valuations": vals,
            "functional_equation": fe,
            "residual": None,
        }


_CHECKS = {
    "theorem1": _theorem1, "theorem2": _theorem2, "theorem3": _theorem3,
    "theorem4": _theorem4, "theorem5": _theorem5, "theorem6": _theorem6,
    "shift_gf": _shift_gf, "binomial_moment": _binomial_moment,
    "higher_reduction": _higher_reduction, "higher_round_trip": _higher_round_trip,
    "carlitz": _carlitz, "stirling": _stirling, "classical": _classical,
    "padic": _padic,
}


def run(identities, ranges: Ranges | None = None) -> list:
    rg = ranges or Ranges()
    if identities == "all":
        identities = IDENTITIES
    out = []
    for name in identities:
        try:
            check = _CHECKS[name]
        except KeyError:
            raise ValueError(f"unknown identity {name!r}") from None
        out.extend(check(rg))
    return out
