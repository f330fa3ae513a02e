"""Dense univariate polynomials over Z stored as tuples of Python ints.

Coefficients are in ascending degree order with no trailing zeros; the zero
polynomial is the empty tuple. These helpers are the workhorse behind the
canonical rational functions in :mod:`qchanghee.exact`, so they avoid
allocating Fractions entirely.
"""

from math import gcd as igcd, isqrt

ZERO = ()
ONE = (1,)

# Kronecker substitution beats schoolbook once both factors are this long.
_KRONECKER_MIN = 24


def strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def degree(f):
    return len(f) - 1


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    if not g:
        return f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return strip(out)


def sub(f, g):
    if not g:
        return f
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return strip(out)


def neg(f):
    return tuple(-c for c in f)


def scale(f, c):
    if c == 0 or not f:
        return ZERO
    if c == 1:
        return f
    return tuple(c * a for a in f)


def _pack(f, bits):
    acc = 0
    for c in reversed(f):
        acc = (acc << bits) + c
    return acc


def _unpack(value, bits, length):
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(length):
        d = value & mask
        value >>= bits
        if d >= half:
            d -= 1 << bits
            value += 1
        out.append(d)
    return out


def mul(f, g):
    if not f or not g:
        return ZERO
    lf, lg = len(f), len(g)
    if lf == 1:
        return scale(g, f[0])
    if lg == 1:
        return scale(f, g[0])
    if min(lf, lg) >= _KRONECKER_MIN:
        bound = max(abs(c) for c in f) * max(abs(c) for c in g) * min(lf, lg)
        bits = bound.bit_length() + 2
        prod = _pack(f, bits) * _pack(g, bits)
        return strip(_unpack(prod, bits, lf + lg - 1))
    out = [0] * (lf + lg - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return strip(out)


def shift(f, k):
    """Multiply by q**k."""
    if not f or k == 0:
        return f
    return (0,) * k + f


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def content(f):
    g = 0
    for c in f:
        g = igcd(g, c)
        if g == 1:
            break
    return g


def primitive(f):
    """Return ``(c, p)`` with ``f == c * p``, ``p`` primitive and lc(p) > 0."""
    if not f:
        return 0, ZERO
    c = content(f)
    if f[-1] < 0:
        c = -c
    if c == 1:
        return 1, f
    return c, tuple(a // c for a in f)


def divexact(f, g):
    """Quotient ``f / g`` over Z, or ``None`` if ``g`` does not divide ``f``."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return ZERO
    dg = len(g) - 1
    df = len(f) - 1
    if df < dg:
        return None
    if dg == 0:
        c = g[0]
        if any(a % c for a in f):
            return None
        return tuple(a // c for a in f)
    lc = g[-1]
    rem = list(f)
    quo = [0] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        top = rem[i + dg]
        if top:
            qc, r = divmod(top, lc)
            if r:
                return None
            quo[i] = qc
            for j in range(dg + 1):
                rem[i + j] -= qc * g[j]
    if any(rem[:dg]):
        return None
    return tuple(quo)


def _prem(f, g):
    """Pseudo-remainder of f by g."""
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    while len(r) - 1 >= dg and r:
        top = r[-1]
        k = len(r) - 1 - dg
        r = [lc * a for a in r]
        for j in range(dg + 1):
            r[k + j] -= top * g[j]
        r = list(strip(r))
    return tuple(r)


def _prs_gcd(f, g):
    # Primitive Euclidean remainder sequence; inputs are primitive.
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, primitive(r)[1]
    return primitive(f)[1]


def _interpolate(h, x):
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return tuple(out)


def _max_norm(f):
    return max(abs(c) for c in f)


def gcd(f, g):
    """Greatest common divisor over Z, primitive with positive leading coefficient.

    Uses the heuristic GCD (evaluate at a large integer, take the integer
    gcd, read the digits back) and falls back to a primitive remainder
    sequence if the heuristic does not certify within a few rounds.
    """
    if not f:
        return primitive(g)[1]
    if not g:
        return primitive(f)[1]
    f = primitive(f)[1]
    g = primitive(g)[1]
    if len(f) == 1 or len(g) == 1:
        return ONE
    if f == g:
        return f
    nf, ng = _max_norm(f), _max_norm(g)
    b = 2 * min(nf, ng) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(nf // abs(f[-1]), ng // abs(g[-1])) + 2)
    for _ in range(6):
        ff = evaluate(f, x)
        gg = evaluate(g, x)
        if ff and gg:
            cand = _interpolate(igcd(ff, gg), x)
            if cand:
                cand = primitive(cand)[1]
                if divexact(f, cand) is not None and divexact(g, cand) is not None:
                    return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _prs_gcd(f, g)
