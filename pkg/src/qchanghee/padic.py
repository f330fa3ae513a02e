"""Finite-level approximation of the fermionic p-adic q-integral.

The level-N integral of f is

    I_N(f) = (1 / [p^N]_{-q}) * sum_{x < p^N} f(x) (-q)^x,
    [p^N]_{-q} = (1 - (-q)^(p^N)) / (1 + q),

computed modulo p^M for a rational integer q0 with v_p(1 - q0) >= 1 (or
q0 = 1). Since q0^(p^N) = 1 mod p^(N+1), the truncation error of I_N has
valuation of order N, so the convergence diagnostics below expect
valuations >= N - 1.

The summation kernels come from the compiled extension when it is
importable, otherwise from :mod:`qchanghee._padic_py`. Setting
``QCHANGHEE_PURE_PYTHON=1`` forces the Python kernels.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _padic_py
from .exact import QRatFn, YPoly, ratfn_eval_q
from .qeuler import classical_changhee_poly, classical_euler_poly, euler_q_higher, euler_q_poly

try:
    if os.environ.get("QCHANGHEE_PURE_PYTHON"):
        raise ImportError("pure Python kernels requested")
    from . import _padic_ext as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
DEFAULT_BUDGET = 10**7

KINDS = ("constant", "q_power", "bracket_power", "bracket_binom", "falling")
_KIND_CODES = dict(zip(KINDS, range(5)))


class PadicError(ValueError):
    pass


def kernels(name=None):
    """Kernel module by name ("compiled" or "python"); the active one by default."""
    name = name or BACKEND
    if name == "python":
        return _padic_py
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def _active(mod):
    if _compiled is not None and mod < _compiled.MAX_MODULUS:
        return _compiled
    return _padic_py


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def valuation(a: int, p: int, cap: int) -> int:
    """v_p(a), capped at ``cap`` (zero has valuation ``cap``)."""
    if a == 0:
        return cap
    v = 0
    while v < cap and a % p == 0:
        a //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicApprox:
    """Residue modulo p^M."""

    p: int
    M: int
    residue: int

    def __post_init__(self):
        if self.p % 2 == 0 or not is_prime(self.p):
            raise PadicError(f"p must be an odd prime, got {self.p}")
        if self.M < 1:
            raise PadicError("precision M must be >= 1")
        if not 0 <= self.residue < self.p ** self.M:
            raise PadicError("residue out of range")

    @property
    def modulus(self):
        return self.p ** self.M

    @classmethod
    def from_rational(cls, value, p, M):
        value = Fraction(value)
        mod = p**M
        if value.denominator % p == 0:
            raise PadicError(f"{value} is not a {p}-adic integer")
        return cls(p, M, value.numerator * pow(value.denominator, -1, mod) % mod)

    def __sub__(self, other):
        if (self.p, self.M) != (other.p, other.M):
            raise PadicError("mismatched p-adic precision")
        return PadicApprox(self.p, self.M, (self.residue - other.residue) % self.modulus)

    def valuation(self):
        return valuation(self.residue, self.p, self.M)


@dataclass(frozen=True)
class IntegrandSpec:
    """One of the closed set of integrands with exact targets.

    constant(c): c;  q_power(l): q^(l(x+x0));  bracket_power(n): [x+x0]_q^n;
    bracket_binom(n): binom([x+x0]_q, n);  falling(n): (x+x0)_n.
    """

    kind: str
    n: int = 0
    l: int = 0
    x0: int = 0
    c: int = 1

    def __post_init__(self):
        if self.kind not in _KIND_CODES:
            raise PadicError(f"unknown integrand kind {self.kind!r}")
        if self.n < 0 or self.l < 0 or self.x0 < 0:
            raise PadicError("integrand parameters must be nonnegative")

    def shifted(self, a=1):
        """The integrand x -> f(x + a)."""
        if self.kind == "constant":
            return self
        return IntegrandSpec(self.kind, self.n, self.l, self.x0 + a, self.c)

    @classmethod
    def parse(cls, text: str) -> "IntegrandSpec":
        """Parse ``kind[:key=value,...]``, e.g. ``bracket_power:n=2,x0=1``."""
        kind, _, rest = text.partition(":")
        params = {}
        if rest:
            for item in rest.split(","):
                key, eq, value = item.partition("=")
                key = key.strip()
                if not eq or key not in ("n", "l", "x0", "c"):
                    raise PadicError(f"bad integrand parameter {item!r}")
                params[key] = int(value)
        return cls(kind.strip(), **params)

    def __str__(self):
        return f"{self.kind}:n={self.n},l={self.l},x0={self.x0},c={self.c}"


def _check_setup(p, q0, N, M):
    if p % 2 == 0 or not is_prime(p):
        raise PadicError(f"p must be an odd prime, got {p}")
    if M < 1:
        raise PadicError("precision M must be >= 1")
    if N < 0:
        raise PadicError("level N must be >= 0")
    if (1 - q0) % p != 0:
        raise PadicError(f"need v_p(1 - q0) >= 1, got q0 = {q0} for p = {p}")


def normalizer(p, q0, N, M):
    """[p^N]_{-q0} mod p^M, asserted to be 1 mod p."""
    mod = p**M
    count = p**N
    # (-q)^(p^N) = -q^(p^N) since p^N is odd; 1 + q divides 1 + q^(p^N) exactly.
    top = (1 + pow(q0, count, mod * (1 + q0))) % (mod * (1 + q0))
    norm = (top // (1 + q0)) % mod
    if norm % p != 1 % p:
        raise PadicError("normalizer is not a p-adic unit")
    return norm


def _f_at_zero(f: IntegrandSpec, p, q0, M):
    mod = p**M
    return _raw_sum(f, q0, 1, mod, p)


def _raw_sum(f, q0, count, mod, p):
    scale = 0
    if f.kind == "bracket_binom":
        if f.n >= p:
            raise PadicError("bracket_binom needs n < p so that n! is a unit")
        scale = pow(factorial(f.n), -1, mod)
    k = _active(mod)
    return k.fermionic_sum(_KIND_CODES[f.kind], f.n, f.l, f.x0, f.c, scale, q0, count, mod)


def fermionic_integral(f: IntegrandSpec, p: int, q0: int, N: int, M: int) -> PadicApprox:
    """Level-N approximation of the fermionic q-integral of f, mod p^M."""
    _check_setup(p, q0, N, M)
    mod = p**M
    norm = normalizer(p, q0, N, M)
    total = _raw_sum(f, q0, p**N, mod, p)
    return PadicApprox(p, M, total * pow(norm, -1, mod) % mod)


def multivariate_integral(n: int, r: int, p: int, q0: int, N: int, M: int,
                          x0: int = 0, budget: int = DEFAULT_BUDGET) -> PadicApprox:
    """r-fold level-N approximation of the integral of [x_1+...+x_r+x0]_q^n."""
    _check_setup(p, q0, N, M)
    if r < 1:
        raise PadicError("fold count r must be >= 1")
    if n < 0 or x0 < 0:
        raise PadicError("n and x0 must be nonnegative")
    if p ** (r * N) > budget:
        raise PadicError(f"truncation budget exceeded: p^(rN) = {p}^{r * N} > {budget}")
    mod = p**M
    norm = pow(normalizer(p, q0, N, M), r, mod)
    total = _active(mod).multivariate_sum(n, r, x0, q0, p**N, mod)
    return PadicApprox(p, M, total * pow(norm, -1, mod) % mod)


def max_level(p: int, r: int, budget: int = DEFAULT_BUDGET) -> int:
    """Largest N with p^(rN) within the budget."""
    N = 0
    while p ** (r * (N + 1)) <= budget:
        N += 1
    return N


def check_functional_equation(f: IntegrandSpec, p: int, q0: int, N: int, M: int) -> int:
    """Valuation of q I_N(f(x+1)) + I_N(f) - [2]_q f(0), capped at M."""
    _check_setup(p, q0, N, M)
    mod = p**M
    shifted = fermionic_integral(f.shifted(1), p, q0, N, M).residue
    plain = fermionic_integral(f, p, q0, N, M).residue
    rhs = (1 + q0) * _f_at_zero(f, p, q0, M)
    return valuation((q0 * shifted + plain - rhs) % mod, p, M)


def target_residue(target, p, q0, M, x0=0) -> int:
    """Reduce an exact target into Z/p^M.

    ``target`` may be a rational, a QRatFn (evaluated at q0) or a YPoly
    (evaluated at y = q0^x0, q = q0).
    """
    if isinstance(target, YPoly):
        target = target.at_x(x0)
    if isinstance(target, QRatFn):
        target = ratfn_eval_q(target, q0)
    return PadicApprox.from_rational(target, p, M).residue


def exact_target(f: IntegrandSpec, q0: int, r: int = 1):
    """Exact value of the integral of f for q = q0, or None if not available."""
    x0 = f.x0
    if f.kind == "constant":
        return Fraction(f.c)
    if q0 == 1:
        if f.kind == "q_power":
            return Fraction(1)
        if f.kind == "bracket_power" and r == 1:
            return classical_euler_poly(f.n)(x0)
        if f.kind == "bracket_binom":
            return classical_changhee_poly(f.n)(x0) / factorial(f.n)
        if f.kind == "falling":
            return classical_changhee_poly(f.n)(x0)
        return None
    if f.kind == "q_power":
        qf = Fraction(q0)
        return qf ** (f.l * x0) * (1 + qf) / (1 + qf ** (f.l + 1))
    if f.kind == "bracket_power":
        poly = euler_q_poly(f.n) if r == 1 else euler_q_higher(f.n, r)
        return ratfn_eval_q(poly.at_x(x0), q0)
    if f.kind == "bracket_binom":
        from .changhee import changhee_q_poly

        return ratfn_eval_q(changhee_q_poly(f.n).poly.at_x(x0), q0) / factorial(f.n)
    return None


def convergence_profile(f: IntegrandSpec, target, p: int, q0: int, N_max: int, M: int,
                        r: int = 1, budget: int = DEFAULT_BUDGET) -> list:
    """Valuations of I_N(f) - target for N = 1..N_max.

    With r > 1 the integrand must be ``bracket_power`` and the r-fold
    product-measure integral is used.
    """
    _check_setup(p, q0, 1, M)
    try:
        goal = target_residue(target, p, q0, M, f.x0)
    except ZeroDivisionError as exc:
        raise PadicError(f"target has a pole at q0 = {q0}") from exc
    if r > 1 and f.kind != "bracket_power":
        raise PadicError("multivariate profiles need a bracket_power integrand")
    out = []
    for N in range(1, N_max + 1):
        if r == 1:
            approx = fermionic_integral(f, p, q0, N, M)
        else:
            approx = multivariate_integral(f.n, r, p, q0, N, M, f.x0, budget)
        out.append(valuation((approx.residue - goal) % p**M, p, M))
    return out


def profile_ok(vals) -> bool:
    """Nondecreasing and at least N - 1 at level N."""
    return all(b >= a for a, b in zip(vals, vals[1:])) and all(
        v >= N - 1 for N, v in enumerate(vals, start=1)
    )
