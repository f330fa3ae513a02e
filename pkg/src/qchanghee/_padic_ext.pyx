# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for truncated fermionic sums modulo m (m < 2**32)."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64
ctypedef long long i64

DEF CONSTANT = 0
DEF Q_POWER = 1
DEF BRACKET_POWER = 2
DEF BRACKET_BINOM = 3
DEF FALLING = 4

MAX_MODULUS = 1 << 32


cdef inline u64 powmod(u64 b, u64 e, u64 m) nogil:
    cdef u64 r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


cdef inline u64 submod(u64 a, i64 k, u64 m) nogil:
    cdef i64 t = (<i64>a - k) % <i64>m
    if t < 0:
        t += m
    return <u64>t


def fermionic_sum(int kind, long n, long l, long x0, c, scale, q0, long long count, mod):
    if mod >= MAX_MODULUS:
        raise OverflowError("modulus too wide for the compiled kernel")
    cdef u64 m = mod
    cdef u64 q = q0 % mod
    cdef u64 step = (m - q) % m
    cdef u64 w = 1 % m
    cdef u64 total = 0
    cdef u64 v, b, ql, sc = scale % mod
    cdef long long x
    cdef long i
    if kind == CONSTANT:
        with nogil:
            for x in range(count):
                total = (total + w) % m
                w = w * step % m
        return total * (c % mod) % mod
    if kind == Q_POWER:
        ql = powmod(q, l, m)
        v = powmod(q, l * x0, m)
        with nogil:
            for x in range(count):
                total = (total + v * w) % m
                v = v * ql % m
                w = w * step % m
        return total
    if kind == FALLING:
        with nogil:
            for x in range(count):
                v = 1 % m
                for i in range(n):
                    v = v * submod((x + x0) % m, i, m) % m
                total = (total + v * w) % m
                w = w * step % m
        return total
    b = 0
    for i in range(x0):
        b = (1 + q * b) % m
    with nogil:
        for x in range(count):
            if kind == BRACKET_POWER:
                v = powmod(b, n, m)
            else:
                v = sc
                for i in range(n):
                    v = v * submod(b, i, m) % m
            total = (total + v * w) % m
            b = (1 + q * b) % m
            w = w * step % m
    return total


def multivariate_sum(long n, int r, long x0, q0, long long count, mod):
    if mod >= MAX_MODULUS:
        raise OverflowError("modulus too wide for the compiled kernel")
    cdef u64 m = mod
    cdef u64 q = q0 % mod
    cdef u64 step = (m - q) % m
    cdef long long size = r * (count - 1) + 1
    cdef u64 *prefix = <u64 *> malloc((size + 1) * sizeof(u64))
    cdef long long *digits = <long long *> malloc((r if r > 1 else 1) * sizeof(long long))
    if prefix == NULL or digits == NULL:
        free(prefix)
        free(digits)
        raise MemoryError()
    cdef u64 b = 0, w = 1 % m, acc = 0, total = 0
    cdef long long s, partial = 0
    cdef int i, outer = r - 1
    try:
        for s in range(x0):
            b = (1 + q * b) % m
        with nogil:
            prefix[0] = 0
            for s in range(size):
                acc = (acc + powmod(b, n, m) * w) % m
                prefix[s + 1] = acc
                b = (1 + q * b) % m
                w = w * step % m
            if outer == 0:
                total = prefix[count]
            else:
                for i in range(outer):
                    digits[i] = 0
                while True:
                    total = (total + prefix[partial + count] + m - prefix[partial]) % m
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
        return total % m
    finally:
        free(prefix)
        free(digits)
