"""Stirling numbers, falling factorials, generalized binomials and q-integers."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .exact import QPoly, QRatFn, YPoly

DEFAULT_MAX_N = 32


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table of Stirling numbers, rows 0..max_n.

    ``kind`` is ``"first"`` (signed, generating function log(1+t)^k/k!)
    or ``"second"``.
    """

    kind: str
    max_n: int
    entries: tuple

    def __getitem__(self, nk):
        n, k = nk
        return self.entries[n][k]

    def row(self, n):
        return self.entries[n]


def build_stirling_table(kind: str, max_n: int) -> StirlingTable:
    if kind not in ("first", "second"):
        raise ValueError(f"unknown Stirling kind {kind!r}")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    rows = [(1,)]
    for n in range(max_n):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            left = prev[k - 1]
            here = prev[k] if k <= n else 0
            if kind == "first":
                row[k] = left - n * here
            else:
                row[k] = left + k * here
        rows.append(tuple(row))
    return StirlingTable(kind, max_n, tuple(rows))


_TABLES = {
    "first": build_stirling_table("first", DEFAULT_MAX_N),
    "second": build_stirling_table("second", DEFAULT_MAX_N),
}


def stirling_table(kind: str, max_n: int = DEFAULT_MAX_N) -> StirlingTable:
    """Memoized table covering at least rows 0..max_n."""
    table = _TABLES[kind]
    if table.max_n < max_n:
        table = build_stirling_table(kind, max(max_n, 2 * table.max_n))
        _TABLES[kind] = table
    return table


def _check_nk(n, k):
    if n < 0 or k < 0:
        raise ValueError("Stirling arguments must be nonnegative")
    if k > n:
        raise ValueError(f"Stirling number needs k <= n, got n={n}, k={k}")


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: (x)_n = sum_k s(n,k) x^k."""
    _check_nk(n, k)
    return stirling_table("first", n)[n, k]


def stirling2(n: int, k: int) -> int:
    _check_nk(n, k)
    return stirling_table("second", n)[n, k]


def falling_factorial(z, n: int) -> YPoly:
    """``z (z-1) ... (z-n+1)``; the empty product for n = 0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    z = z if isinstance(z, YPoly) else YPoly((z,))
    out = YPoly((1,))
    for i in range(n):
        out = out * (z - i)
    return out


def gen_binom(z, n: int) -> YPoly:
    if n < 0:
        raise ValueError("binomial coefficient needs n >= 0")
    return falling_factorial(z, n) / factorial(n)


def q_integer(m: int) -> QPoly:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    if m < 0:
        raise ValueError("q-integer needs m >= 0")
    return QPoly([1] * m)


def q_bracket_x() -> YPoly:
    """``[x]_q = (y - 1) / (q - 1)`` with y = q^x."""
    inv = QRatFn.from_int_poly((-1, 1)).inverse()
    return YPoly((-inv, inv))
