"""Carlitz q-Euler numbers and polynomials, and their classical limits.

Polynomials in x are :class:`~qchanghee.exact.YPoly` values in y = q^x.
Everything is memoized; all returned values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .combinat import q_bracket_x, stirling1
from .exact import QRatFn, YPoly

_ONE_MINUS_Q = QRatFn.from_int_poly((1, -1))
_TWO_Q = QRatFn.from_int_poly((1, 1))


def _check_n(n):
    if n < 0:
        raise ValueError(f"degree index must be nonnegative, got {n}")


def _one_plus_q_power(k):
    return QRatFn.from_int_poly((1,) + (0,) * (k - 1) + (1,))


@lru_cache(maxsize=None)
def euler_q_number(n: int) -> QRatFn:
    """E_{n,q} = [2]_q (1-q)^-n sum_l C(n,l) (-1)^l / (1 + q^(l+1))."""
    _check_n(n)
    acc = QRatFn(0)
    for l in range(n + 1):
        term = _one_plus_q_power(l + 1).inverse() * ((-1) ** l * comb(n, l))
        acc = acc + term
    return _TWO_Q * acc / _ONE_MINUS_Q ** n


@lru_cache(maxsize=None)
def _bracket_power(j: int) -> YPoly:
    return q_bracket_x() ** j


@lru_cache(maxsize=None)
def euler_q_poly(n: int) -> YPoly:
    """E_{n,q}(x) = sum_l C(n,l) [x]_q^(n-l) q^(lx) E_{l,q}."""
    _check_n(n)
    acc = YPoly()
    for l in range(n + 1):
        coeff = euler_q_number(l) * comb(n, l)
        acc = acc + _bracket_power(n - l) * YPoly.monomial(l, coeff)
    return acc


@lru_cache(maxsize=None)
def euler_q_poly_rebased(n: int, d: int, a: int) -> YPoly:
    """E_{n,Q}((a + x)/d) with Q = q^d, written in y = q^x.

    Q^((a+x)/d) = q^a y, so only integer powers of q appear.
    """
    _check_n(n)
    if d < 1 or d % 2 == 0:
        raise ValueError(f"rebasing needs an odd positive d, got {d}")
    if not 0 <= a < d:
        raise ValueError(f"offset a must lie in [0, {d - 1}], got {a}")
    qa = QRatFn.q_power(a)
    inv = (QRatFn.q_power(d) - 1).inverse()
    bracket = YPoly((-inv, qa * inv))
    acc = YPoly()
    for l in range(n + 1):
        coeff = euler_q_number(l).subs_q_power(d) * qa ** l * comb(n, l)
        acc = acc + bracket ** (n - l) * YPoly.monomial(l, coeff)
    return acc


@lru_cache(maxsize=None)
def euler_q_higher(n: int, r: int) -> YPoly:
    """Order-r q-Euler polynomial.

    Each of the r fermionic integrals maps q^(l x_i) to [2]_q / (1 + q^(l+1)),
    so E^(r)_{n,q}(x) = (1-q)^-n sum_l C(n,l) (-1)^l y^l ([2]_q/(1+q^(l+1)))^r.
    """
    _check_n(n)
    if r < 1:
        raise ValueError(f"order r must be >= 1, got {r}")
    scale = _ONE_MINUS_Q.inverse() ** n
    coeffs = []
    for l in range(n + 1):
        moment = (_TWO_Q / _one_plus_q_power(l + 1)) ** r
        coeffs.append(moment * scale * ((-1) ** l * comb(n, l)))
    return YPoly(coeffs)


@dataclass(frozen=True)
class EulerQValue:
    n: int
    r: int
    poly: YPoly

    @property
    def number(self) -> QRatFn:
        return self.poly.at_one()


def euler_q_value(n: int, r: int = 1) -> EulerQValue:
    poly = euler_q_poly(n) if r == 1 else euler_q_higher(n, r)
    return EulerQValue(n, r, poly)


@dataclass(frozen=True)
class ClassicalPoly:
    """Polynomial in x with rational coefficients, ascending in x."""

    n: int
    coeffs: tuple

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def classical_euler_number(n: int) -> Fraction:
    """E_n from sum_k C(n,k) E_k + E_n = 2 [n = 0]."""
    _check_n(n)
    acc = Fraction(2 if n == 0 else 0)
    for k in range(n):
        acc -= comb(n, k) * classical_euler_number(k)
    return acc / 2


def classical_euler_poly(n: int) -> ClassicalPoly:
    _check_n(n)
    coeffs = tuple(comb(n, j) * classical_euler_number(n - j) for j in range(n + 1))
    return ClassicalPoly(n, coeffs)


def classical_changhee_poly(n: int) -> ClassicalPoly:
    """Ch_n(x) = sum_k S1(n,k) E_k(x)."""
    _check_n(n)
    acc = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        s = stirling1(n, k)
        if s:
            for j, c in enumerate(classical_euler_poly(k).coeffs):
                acc[j] += s * c
    return ClassicalPoly(n, tuple(acc))
