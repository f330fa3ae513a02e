"""Carlitz-type q-Changhee numbers and polynomials, and exact identity checks.

Every identity check returns a :class:`Residual` holding the full difference
of the two sides, so a failure points at the offending coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .combinat import q_bracket_x, stirling1, stirling2
from .exact import (
    QRatFn,
    QSeries,
    TSeries,
    YPoly,
    encode_ypoly,
    ratfn_qseries,
)
from .qeuler import euler_q_higher, euler_q_number, euler_q_poly, euler_q_poly_rebased

_ONE_MINUS_Q = QRatFn.from_int_poly((1, -1))
_TWO_Q = QRatFn.from_int_poly((1, 1))


def _check_n(n):
    if n < 0:
        raise ValueError(f"degree index must be nonnegative, got {n}")


def _check_r(r):
    if r < 1:
        raise ValueError(f"order r must be >= 1, got {r}")


@dataclass(frozen=True)
class ChangheeQValue:
    n: int
    r: int
    poly: YPoly

    @property
    def number(self) -> QRatFn:
        # Always read off the polynomial, never a second formula.
        return self.poly.at_one()


@dataclass(frozen=True)
class Residual:
    identity: str
    params: dict = field(hash=False)
    residual: YPoly

    @property
    def is_zero(self) -> bool:
        return self.residual.is_zero()

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "zero": self.is_zero,
            "residual": encode_ypoly(self.residual),
        }


@lru_cache(maxsize=None)
def _changhee_poly(n: int) -> YPoly:
    acc = YPoly()
    for k in range(n + 1):
        s = stirling1(n, k)
        if s:
            acc = acc + euler_q_poly(k) * s
    return acc


def changhee_q_poly(n: int) -> ChangheeQValue:
    """Ch_{n,q}(x) = sum_k S1(n,k) E_{k,q}(x)."""
    _check_n(n)
    return ChangheeQValue(n, 1, _changhee_poly(n))


def changhee_q_number(n: int, r: int = 1) -> QRatFn:
    return changhee_q_higher(n, r).number


def _closed_form(n):
    # [2]_q sum_k sum_l (1-q)^-k C(k,l) q^(lx) (-1)^l S1(n,k) / (1 + q^(l+1))
    coeffs = [QRatFn(0)] * (n + 1)
    inv = _ONE_MINUS_Q.inverse()
    for k in range(n + 1):
        s = stirling1(n, k)
        if not s:
            continue
        scale = inv ** k * s
        for l in range(k + 1):
            den = QRatFn.from_int_poly((1,) + (0,) * l + (1,))
            coeffs[l] = coeffs[l] + scale * comb(k, l) * (-1) ** l / den
    return YPoly(c * _TWO_Q for c in coeffs)


def _double_sum(n):
    # sum_k sum_l C(k,l) S1(n,k) [x]_q^(k-l) q^(lx) E_{l,q}
    bracket = q_bracket_x()
    acc = YPoly()
    for k in range(n + 1):
        s = stirling1(n, k)
        if not s:
            continue
        for l in range(k + 1):
            coeff = euler_q_number(l) * (comb(k, l) * s)
            acc = acc + bracket ** (k - l) * YPoly.monomial(l, coeff)
    return acc


_DIRECT_FORMS = {"closed": _closed_form, "double_sum": _double_sum}


def changhee_q_poly_direct(n: int, form: str = "closed") -> ChangheeQValue:
    """Ch_{n,q}(x) from a closed double sum instead of the Stirling transform.

    ``form="closed"`` expands every q-Euler moment down to [2]_q/(1+q^(l+1));
    ``form="double_sum"`` keeps the Euler numbers and the binomial in [x]_q.
    """
    _check_n(n)
    try:
        build = _DIRECT_FORMS[form]
    except KeyError:
        raise ValueError(f"unknown form {form!r}; expected one of {sorted(_DIRECT_FORMS)}") from None
    return ChangheeQValue(n, 1, build(n))


@lru_cache(maxsize=None)
def _changhee_higher(n, r):
    acc = YPoly()
    for k in range(n + 1):
        s = stirling1(n, k)
        if s:
            acc = acc + euler_q_higher(k, r) * s
    return acc


def changhee_q_higher(n: int, r: int) -> ChangheeQValue:
    """Ch^(r)_{n,q}(x) = sum_k S1(n,k) E^(r)_{k,q}(x)."""
    _check_n(n)
    _check_r(r)
    if r == 1:
        return changhee_q_poly(n)
    return ChangheeQValue(n, r, _changhee_higher(n, r))


def euler_from_changhee(n: int, r: int = 1) -> YPoly:
    """sum_k Ch^(r)_{k,q}(x) S2(n,k); inverts the Stirling-S1 transform."""
    _check_n(n)
    _check_r(r)
    acc = YPoly()
    for k in range(n + 1):
        s = stirling2(n, k)
        if s:
            acc = acc + changhee_q_higher(k, r).poly * s
    return acc


def verify_path_equality(n: int, form: str = "closed") -> Residual:
    residual = changhee_q_poly(n).poly - changhee_q_poly_direct(n, form).poly
    tag = "theorem1" if form == "closed" else "theorem5"
    return Residual(tag, {"n": n, "form": form}, residual)


def verify_round_trip(n: int, r: int = 1) -> Residual:
    target = euler_q_poly(n) if r == 1 else euler_q_higher(n, r)
    return Residual("theorem2" if r == 1 else "higher_round_trip", {"n": n, "r": r},
                    euler_from_changhee(n, r) - target)


def verify_higher_reduction(n: int) -> Residual:
    """Order one of the higher-order family is the plain family."""
    res = changhee_q_poly(n).poly - _changhee_higher(n, 1)
    res = res + (euler_q_higher(n, 1) - euler_q_poly(n))
    return Residual("higher_reduction", {"n": n, "r": 1}, res)


def verify_recurrence(n: int) -> Residual:
    """q Ch_{n,q}(x+1) + Ch_{n,q}(x) - [2]_q sum_l S1(n,l) [x]_q^l."""
    _check_n(n)
    ch = changhee_q_poly(n).poly
    lhs = ch.shift_x(1) * QRatFn.q() + ch
    bracket = q_bracket_x()
    rhs = YPoly()
    for l in range(n + 1):
        s = stirling1(n, l)
        if s:
            rhs = rhs + bracket ** l * s
    return Residual("theorem4", {"n": n}, lhs - rhs * _TWO_Q)


def verify_distribution(n: int, d: int) -> Residual:
    """Ch_{n,q}(x) against its expansion through base q^d for odd d."""
    _check_n(n)
    if d < 1 or d % 2 == 0:
        raise ValueError(f"distribution relation needs an odd positive d, got {d}")
    d_int = QRatFn.from_int_poly((1,) * d)
    prefactor = _TWO_Q / _TWO_Q.subs_q_power(d)
    rhs = YPoly()
    for k in range(n + 1):
        s = stirling1(n, k)
        if not s:
            continue
        inner = YPoly()
        for a in range(d):
            inner = inner + euler_q_poly_rebased(k, d, a) * QRatFn.q_power(a) * (-1) ** a
        rhs = rhs + inner * (d_int ** k * s)
    residual = changhee_q_poly(n).poly - rhs * prefactor
    return Residual("theorem6", {"n": n, "d": d}, residual)


def _q_integer_series(m, K):
    return QSeries([1] * min(m, K + 1), K)


def _gf_side(n, M, K, x0):
    bracket_x0 = _q_integer_series(x0, K)
    total = QSeries.zero(K)
    for m in range(M + 1):
        if m > K:
            break  # (-q)^m pushes the whole term past q^K
        z = _q_integer_series(m, K) + bracket_x0.shift(m)
        falling = QSeries([1], K)
        for i in range(n):
            falling = falling * (z - i)
        # n! * binom(z, n) is the falling factorial itself.
        total = total + falling.shift(m) * (-1) ** m
    return total * QSeries([1, 1], K)


def _check_gf_args(n, M, K):
    _check_n(n)
    if K < 0:
        raise ValueError("series order K must be nonnegative")
    if M < K:
        raise ValueError("insufficient truncation: need M >= K")


def gf_check(n: int, M: int, K: int):
    """(series side, exact side) of the generating function at x = 0."""
    return gf_check_poly(n, 0, M, K)


def gf_check_poly(n: int, x0: int, M: int, K: int):
    """Compare n! [t^n] of [2]_q sum_m (-q)^m (1+t)^[m+x0]_q with Ch_{n,q}(x0)."""
    _check_gf_args(n, M, K)
    if x0 < 0:
        raise ValueError("x0 must be nonnegative")
    series_side = _gf_side(n, M, K, x0)
    exact_side = ratfn_qseries(changhee_q_poly(n).poly.at_x(x0), K)
    return series_side, exact_side


def changhee_gf(T: int, r: int = 1) -> TSeries:
    """sum_{n<=T} Ch^(r)_{n,q}(x) t^n / n! as a truncated series."""
    return TSeries([changhee_q_higher(n, r).poly / factorial(n) for n in range(T + 1)])


def binomial_gf(T: int) -> TSeries:
    """(1+t)^[x]_q = sum_n binom([x]_q, n) t^n."""
    from .combinat import gen_binom

    bracket = q_bracket_x()
    return TSeries([gen_binom(bracket, n) for n in range(T + 1)])


def verify_shift_gf(T: int) -> Residual:
    """q G(x+1) + G(x) - [2]_q (1+t)^[x]_q, flattened over t^0..t^T."""
    g = changhee_gf(T)
    diff = g.shift_x(1) * QRatFn.q() + g - binomial_gf(T) * _TWO_Q
    # Report the first nonzero t-coefficient (or zero).
    for c in diff.coeffs:
        if not c.is_zero():
            return Residual("shift_gf", {"T": T}, c)
    return Residual("shift_gf", {"T": T}, YPoly())


def verify_binomial_moment(n: int) -> Residual:
    """Ch_{n,q}(x)/n! against the moment expansion of binom([x+y]_q, n).

    The expansion coefficients come from multiplying out the falling
    factorial, not from the Stirling table, so this ties the two together.
    """
    from .combinat import gen_binom

    _check_n(n)
    weights = gen_binom(YPoly.y(), n).coeffs
    rhs = YPoly()
    for k, w in enumerate(weights):
        if not w.is_zero():
            rhs = rhs + euler_q_poly(k) * w
    return Residual("binomial_moment", {"n": n}, changhee_q_poly(n).poly / factorial(n) - rhs)


def clear_caches():
    for fn in (_changhee_poly, _changhee_higher):
        fn.cache_clear()
