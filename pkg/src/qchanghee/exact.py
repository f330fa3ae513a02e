"""Exact scalars, polynomials and rational functions in q, polynomials in y.

``y`` is a formal stand-in for ``q**x``: it is never expanded, and the shift
``x -> x + a`` acts as ``y -> q**a * y``.

BigRat is :class:`fractions.Fraction`. QRatFn values are always kept in
canonical form (gcd-reduced, denominator primitive over Z with positive
leading coefficient), so equality is representation equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational

from . import _ipoly as ip

BigRat = Fraction


class PoleError(ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""


class NotRegularError(ValueError):
    """A Taylor expansion at q = 0 was requested for a function with a pole there."""


def _to_int_form(coeffs):
    """Split rational coefficients into ``(c, p)`` with p primitive, lc(p) > 0."""
    if not coeffs:
        return Fraction(0), ip.ZERO
    den = 1
    for a in coeffs:
        den = lcm(den, a.denominator)
    ints = ip.strip([a.numerator * (den // a.denominator) for a in coeffs])
    c, prim = ip.primitive(ints)
    return Fraction(c, den), prim


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class QPoly:
    """Polynomial in q with rational coefficients, ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def q(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = QPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < dg:
            return QPoly(), self
        quo = [Fraction(0)] * (len(rem) - dg)
        for i in range(len(rem) - 1 - dg, -1, -1):
            c = rem[i + dg] / lc
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return QPoly(quo), QPoly(rem[:dg])

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return _poly_str(self.coeffs, "q")


def _poly_str(coeffs, var):
    if not coeffs:
        return "0"
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


class QRatFn:
    """Canonical rational function ``c * n(q) / d(q)``.

    ``n`` and ``d`` are primitive integer polynomials with positive leading
    coefficient and no common factor; the rational scalar ``c`` carries the
    content and sign. Zero is ``c = 0, n = (), d = (1,)``.
    """

    __slots__ = ("_c", "_n", "_d")

    def __init__(self, value=0):
        if isinstance(value, QRatFn):
            self._c, self._n, self._d = value._c, value._n, value._d
            return
        c = _frac(value)
        self._c = c
        self._n = ip.ONE if c else ip.ZERO
        self._d = ip.ONE

    @classmethod
    def _raw(cls, c, n, d):
        obj = object.__new__(cls)
        if c == 0 or not n:
            obj._c, obj._n, obj._d = Fraction(0), ip.ZERO, ip.ONE
        else:
            obj._c, obj._n, obj._d = c, n, d
        return obj

    @classmethod
    def q(cls):
        return cls._raw(Fraction(1), (0, 1), ip.ONE)

    @classmethod
    def q_power(cls, k):
        """``q**k`` for any integer k."""
        mono = ip.shift(ip.ONE, abs(k))
        if k >= 0:
            return cls._raw(Fraction(1), mono, ip.ONE)
        return cls._raw(Fraction(1), ip.ONE, mono)

    @classmethod
    def from_int_poly(cls, coeffs, den=ip.ONE):
        """Build from integer coefficient sequences (ascending in q)."""
        n = ip.strip(list(coeffs))
        d = ip.strip(list(den))
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        cn, n = ip.primitive(n)
        cd, d = ip.primitive(d)
        if not n:
            return cls._raw(Fraction(0), ip.ZERO, ip.ONE)
        g = ip.gcd(n, d)
        if g != ip.ONE:
            n = ip.divexact(n, g)
            d = ip.divexact(d, g)
        return cls._raw(Fraction(cn, cd), n, d)

    @property
    def num(self):
        return QPoly(self._c * a for a in self._n)

    @property
    def den(self):
        return QPoly(self._d)

    def is_zero(self):
        return not self._n

    def is_constant(self):
        return len(self._n) <= 1 and len(self._d) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._c * (self._n[0] if self._n else 0) / self._d[0]

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRatFn):
            return other
        if isinstance(other, (int, Fraction)):
            return QRatFn(other)
        if isinstance(other, QPoly):
            return ratfn_reduce(other, QPoly((1,)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._n:
            return other
        if not other._n:
            return self
        a, b = self, other
        if a._d == b._d:
            g, ad, bd = a._d, ip.ONE, ip.ONE
        else:
            g = ip.gcd(a._d, b._d)
            if g == ip.ONE:
                ad, bd = a._d, b._d
            else:
                ad = ip.divexact(a._d, g)
                bd = ip.divexact(b._d, g)
        ca, cb = a._c, b._c
        big = lcm(ca.denominator, cb.denominator)
        ka = ca.numerator * (big // ca.denominator)
        kb = cb.numerator * (big // cb.denominator)
        t = ip.add(ip.scale(ip.mul(a._n, bd), ka), ip.scale(ip.mul(b._n, ad), kb))
        if not t:
            return QRatFn._raw(Fraction(0), ip.ZERO, ip.ONE)
        ct, t = ip.primitive(t)
        if len(g) > 1:
            h = ip.gcd(t, g)
            if h != ip.ONE:
                t = ip.divexact(t, h)
                g = ip.divexact(g, h)
        d = ip.mul(ip.mul(g, ad), bd)
        return QRatFn._raw(Fraction(ct, big), t, d)

    __radd__ = __add__

    def __neg__(self):
        return QRatFn._raw(-self._c, self._n, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QRatFn._raw(self._c * other, self._n, self._d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._n or not other._n:
            return QRatFn._raw(Fraction(0), ip.ZERO, ip.ONE)
        an, ad, bn, bd = self._n, self._d, other._n, other._d
        if len(an) > 1 and len(bd) > 1:
            g = ip.gcd(an, bd)
            if g != ip.ONE:
                an, bd = ip.divexact(an, g), ip.divexact(bd, g)
        if len(bn) > 1 and len(ad) > 1:
            g = ip.gcd(bn, ad)
            if g != ip.ONE:
                bn, ad = ip.divexact(bn, g), ip.divexact(ad, g)
        return QRatFn._raw(self._c * other._c, ip.mul(an, bn), ip.mul(ad, bd))

    __rmul__ = __mul__

    def inverse(self):
        if not self._n:
            raise ZeroDivisionError("inverse of the zero rational function")
        return QRatFn._raw(1 / self._c, self._d, self._n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QRatFn._raw(self._c / other, self._n, self._d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = QRatFn(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c and self._n == other._n and self._d == other._d

    def __hash__(self):
        return hash((self._c, self._n, self._d))

    def __repr__(self):
        return f"QRatFn(({self.num}) / ({self.den}))"

    def __str__(self):
        if self._d == ip.ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def subs_q_power(self, k):
        """Substitute ``q -> q**k`` for k >= 1."""
        if k == 1:
            return self

        def spread(f):
            out = [0] * ((len(f) - 1) * k + 1)
            out[::k] = f
            return tuple(out)

        # q -> q^k preserves primitivity and coprimality.
        return QRatFn._raw(self._c, spread(self._n), spread(self._d))


def as_ratfn(x):
    out = QRatFn._coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {type(x).__name__} as a rational function in q")
    return out


def ratfn_reduce(num: QPoly, den: QPoly) -> QRatFn:
    """Canonical form of ``num / den``."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    cn, n = _to_int_form(num.coeffs)
    cd, d = _to_int_form(den.coeffs)
    if not n:
        return QRatFn(0)
    g = ip.gcd(n, d)
    if g != ip.ONE:
        n = ip.divexact(n, g)
        d = ip.divexact(d, g)
    return QRatFn._raw(cn / cd, n, d)


def _eval_int_poly(f, x: Fraction):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def ratfn_eval_q(f: QRatFn, q0) -> Fraction:
    """Exact value of f at the rational point q0."""
    q0 = _frac(q0)
    den = _eval_int_poly(f._d, q0)
    if den == 0:
        raise PoleError(f"denominator {f.den} vanishes at q = {q0}")
    return f._c * _eval_int_poly(f._n, q0) / den


def ratfn_limit_q1(f: QRatFn) -> Fraction:
    """Value at q = 1 of the canonical form (the classical limit)."""
    if sum(f._d) == 0:
        raise PoleError("essential pole at q=1")
    return f._c * sum(f._n) / sum(f._d)


def ratfn_qseries(f: QRatFn, K: int) -> "QSeries":
    """First K+1 Taylor coefficients of f at q = 0."""
    if K < 0:
        raise ValueError("series order must be nonnegative")
    d = f._d
    if d[0] == 0:
        raise NotRegularError("not q-adically regular")
    n = f._n
    d0 = d[0]
    out = []
    for k in range(K + 1):
        acc = Fraction(n[k]) if k < len(n) else Fraction(0)
        for j in range(1, min(k, len(d) - 1) + 1):
            acc -= d[j] * out[k - j]
        out.append(acc / d0)
    return QSeries([f._c * c for c in out])


class YPoly:
    """Polynomial in y (= q**x) whose coefficients are QRatFn values."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_ratfn(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def y(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k, coeff=1):
        return cls([0] * k + [coeff])

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @staticmethod
    def _coerce(other):
        if isinstance(other, YPoly):
            return other
        if isinstance(other, (int, Fraction, QPoly, QRatFn)):
            return YPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return YPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return YPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly, QRatFn)):
            s = as_ratfn(other)
            return YPoly(c * s for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return YPoly()
        out = [QRatFn(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, z in enumerate(b):
                if not z.is_zero():
                    out[i + j] = out[i + j] + x * z
        return YPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = as_ratfn(other)
        return self * s.inverse()

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a y-polynomial")
        out = YPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("YPoly", self.coeffs))

    def __repr__(self):
        return f"YPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("*y" if i == 1 else f"*y^{i}")
            parts.append(f"[{c}]{mono}")
        return " + ".join(parts)

    def scale_y(self, s):
        """Substitute ``y -> s * y``."""
        s = as_ratfn(s)
        out = []
        power = QRatFn(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * s
        return YPoly(out)

    def shift_x(self, a: int):
        return self.scale_y(QRatFn.q_power(a))

    def subs_y(self, value) -> QRatFn:
        value = as_ratfn(value)
        acc = QRatFn(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def at_x(self, x0: int) -> QRatFn:
        """Specialize ``y = q**x0``."""
        return self.subs_y(QRatFn.q_power(x0))

    def at_one(self) -> QRatFn:
        acc = QRatFn(0)
        for c in self.coeffs:
            acc = acc + c
        return acc

    def subs_q_power(self, k):
        return YPoly(c.subs_q_power(k) for c in self.coeffs)


def ypoly_shift_x(P: YPoly, a: int) -> YPoly:
    """``P(x + a)`` realized as ``y -> q**a * y``."""
    return P.shift_x(a)


class QSeries:
    """Power series in q truncated after ``q**order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def from_qpoly(cls, p: QPoly, order):
        return cls(p.coeffs[: order + 1], order)

    @classmethod
    def zero(cls, order):
        return cls((), order)

    def _check(self, other):
        if not isinstance(other, QSeries):
            return QSeries((other,), self.order)
        if other.order != self.order:
            raise ValueError("series orders differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries([a * other for a in self.coeffs])
        other = self._check(other)
        K = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (K + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(K + 1 - i):
                    if b[j]:
                        out[i + j] += x * b[j]
        return QSeries(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q**k, truncating."""
        K = self.order
        return QSeries(([Fraction(0)] * k + list(self.coeffs))[: K + 1], K)

    def partial_sum(self, q0):
        q0 = _frac(q0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QSeries", self.coeffs))

    def __repr__(self):
        return f"QSeries({[str(c) for c in self.coeffs]})"


class TSeries:
    """Power series in t truncated after ``t**order``, with YPoly coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [c if isinstance(c, YPoly) else YPoly((c,)) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = cs[: order + 1] + [YPoly()] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        if other.order != self.order:
            raise ValueError("series orders differ")
        return TSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            return TSeries([a * other for a in self.coeffs])
        if other.order != self.order:
            raise ValueError("series orders differ")
        T = self.order
        out = [YPoly()] * (T + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(T + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TSeries(out)

    __rmul__ = __mul__

    def shift_x(self, a):
        return TSeries([c.shift_x(a) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("TSeries", self.coeffs))


# JSON encodings: decimal strings only, never floats.

def encode_bigrat(x) -> dict:
    x = _frac(x)
    return {"n": str(x.numerator), "d": str(x.denominator)}


def decode_bigrat(obj) -> Fraction:
    return Fraction(int(obj["n"]), int(obj["d"]))


def encode_qpoly(p: QPoly) -> list:
    return [encode_bigrat(c) for c in p.coeffs]


def decode_qpoly(arr) -> QPoly:
    return QPoly(decode_bigrat(c) for c in arr)


def encode_ratfn(f: QRatFn) -> dict:
    return {"num": encode_qpoly(f.num), "den": encode_qpoly(f.den)}


def decode_ratfn(obj) -> QRatFn:
    return ratfn_reduce(decode_qpoly(obj["num"]), decode_qpoly(obj["den"]))


def encode_ypoly(P: YPoly) -> list:
    return [encode_ratfn(c) for c in P.coeffs]


def decode_ypoly(arr) -> YPoly:
    return YPoly(decode_ratfn(c) for c in arr)


def encode_qseries(s: QSeries) -> dict:
    return {"order": s.order, "coeffs": [encode_bigrat(c) for c in s.coeffs]}


def decode_qseries(obj) -> QSeries:
    return QSeries([decode_bigrat(c) for c in obj["coeffs"]], obj["order"])


def encode_tseries(s: TSeries) -> dict:
    return {"order": s.order, "coeffs": [encode_ypoly(c) for c in s.coeffs]}


def decode_tseries(obj) -> TSeries:
    return TSeries([decode_ypoly(c) for c in obj["coeffs"]], obj["order"])


q = QRatFn.q()
