"""Pure-Python kernels for truncated fermionic sums modulo m.

Mirrors ``_padic_ext.pyx`` function for function; used when the compiled
extension is unavailable or the modulus is too wide for machine words.
"""

CONSTANT, Q_POWER, BRACKET_POWER, BRACKET_BINOM, FALLING = range(5)


def _start_bracket(q0, x0, mod):
    b = 0
    for _ in range(x0):
        b = (1 + q0 * b) % mod
    return b


def fermionic_sum(kind, n, l, x0, c, scale, q0, count, mod):
    """sum_{x < count} f(x) (-q0)^x mod ``mod`` for the integrand ``kind``."""
    q0 %= mod
    step = (mod - q0) % mod
    w = 1 % mod
    total = 0
    if kind == CONSTANT:
        for _ in range(count):
            total += w
            w = w * step % mod
        return total * c % mod
    if kind == Q_POWER:
        ql = pow(q0, l, mod)
        v = pow(q0, l * x0, mod)
        for _ in range(count):
            total = (total + v * w) % mod
            v = v * ql % mod
            w = w * step % mod
        return total
    if kind == FALLING:
        for x in range(count):
            z = x + x0
            v = 1
            for i in range(n):
                v = v * (z - i) % mod
            total = (total + v * w) % mod
            w = w * step % mod
        return total
    b = _start_bracket(q0, x0, mod)
    for _ in range(count):
        if kind == BRACKET_POWER:
            v = pow(b, n, mod)
        else:
            v = scale
            for i in range(n):
                v = v * (b - i) % mod
        total = (total + v * w) % mod
        b = (1 + q0 * b) % mod
        w = w * step % mod
    return total


def multivariate_sum(n, r, x0, q0, count, mod):
    """sum over x_1..x_r < count of [x_1+...+x_r+x0]^n prod (-q0)^x_i mod ``mod``.

    The last coordinate is summed through prefix sums of the table
    T[s] = (-q0)^s [s + x0]^n; the other r-1 coordinates are enumerated.
    """
    q0 %= mod
    step = (mod - q0) % mod
    size = r * (count - 1) + 1
    prefix = [0] * (size + 1)
    b = _start_bracket(q0, x0, mod)
    w = 1 % mod
    acc = 0
    for s in range(size):
        acc = (acc + pow(b, n, mod) * w) % mod
        prefix[s + 1] = acc
        b = (1 + q0 * b) % mod
        w = w * step % mod
    outer = r - 1
    if outer == 0:
        return prefix[count] % mod
    digits = [0] * outer
    partial = 0
    total = 0
    while True:
        total += prefix[partial + count] - prefix[partial]
        i = 0
        while i < outer:
            digits[i] += 1
            partial += 1
            if digits[i] < count:
                break
            partial -= count
            digits[i] = 0
            i += 1
        if i == outer:
            break
    return total % mod
