"""Independent reference computations used only by the tests."""

from fractions import Fraction
from math import comb, factorial


def bell_numbers(n_max):
    """Bell numbers from the Bell (Aitken) triangle."""
    row = [1]
    bells = [1]
    for _ in range(n_max):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        bells.append(row[0])
    return bells


def series_div(num, den, order):
    out = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return out


def classical_euler_numbers(order):
    """E_n from the Taylor series of 2 / (e^t + 1)."""
    den = [Fraction(2)] + [Fraction(1, factorial(k)) for k in range(1, order + 1)]
    coeffs = series_div([Fraction(2)], den, order)
    return [c * factorial(k) for k, c in enumerate(coeffs)]


def classical_changhee_at(n, x0):
    """Ch_n(x0) from 2/(2+t) (1+t)^x0 = sum (-t/2)^i * sum C(x0,j) t^j."""
    total = sum(Fraction(comb(x0, j)) * Fraction(-1, 2) ** (n - j) for j in range(n + 1))
    return total * factorial(n)


def falling_coeffs(n):
    """Coefficients of x(x-1)...(x-n+1) in ascending powers of x."""
    poly = [1]
    for i in range(n):
        nxt = [0] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] += c
            nxt[k] -= i * c
        poly = nxt
    return poly
