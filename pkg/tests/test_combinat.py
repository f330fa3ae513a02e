from math import factorial

import pytest

from qchanghee.combinat import (
    build_stirling_table,
    falling_factorial,
    gen_binom,
    q_bracket_x,
    q_integer,
    stirling1,
    stirling2,
    stirling_table,
)
from qchanghee.exact import QPoly, QRatFn, YPoly

from oracles import bell_numbers, falling_coeffs


def test_stirling1_values():
    assert stirling1(3, 2) == -3
    assert stirling1(4, 1) == -6
    assert all(stirling1(n, n) == 1 for n in range(10))


def test_stirling2_values():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, n) == 1 for n in range(10))


@pytest.mark.parametrize("fn", [stirling1, stirling2])
@pytest.mark.parametrize("n,k", [(2, 3), (-1, 0), (3, -1)])
def test_stirling_bad_arguments(fn, n, k):
    with pytest.raises(ValueError):
        fn(n, k)


def test_table_shape():
    for kind in ("first", "second"):
        t = build_stirling_table(kind, 10)
        assert all(len(t.row(n)) == n + 1 for n in range(11))
        assert all(t[n, 0] == 0 for n in range(1, 11))


def test_table_extends_on_demand():
    assert stirling1(40, 39) == -780
    assert stirling_table("first").max_n >= 40


def test_first_kind_rows_expand_falling_factorial():
    for n in range(12):
        assert list(stirling_table("first").row(n)) == falling_coeffs(n)


@pytest.mark.parametrize("n", range(15))
def test_orthogonality(n):
    for m in range(n + 1):
        d = 1 if n == m else 0
        assert sum(stirling2(n, k) * stirling1(k, m) for k in range(m, n + 1)) == d
        assert sum(stirling1(n, k) * stirling2(k, m) for k in range(m, n + 1)) == d


def test_row_sums():
    bells = bell_numbers(14)
    for n in range(15):
        assert sum(abs(stirling1(n, k)) for k in range(n + 1)) == factorial(n)
        assert sum(stirling2(n, k) for k in range(n + 1)) == bells[n]


def test_falling_factorial_examples():
    y = YPoly.y()
    assert falling_factorial(y, 2) == YPoly((0, -1, 1))
    assert falling_factorial(q_bracket_x(), 0) == YPoly((1,))
    assert falling_factorial(q_bracket_x(), 1) == q_bracket_x()
    with pytest.raises(ValueError):
        falling_factorial(y, -1)


def test_falling_factorial_coefficients_are_stirling():
    for n in range(10):
        coeffs = falling_factorial(YPoly.y(), n).coeffs
        assert [c.constant_value() for c in coeffs] == [stirling1(n, k) for k in range(n + 1)]


def test_gen_binom_examples():
    y = YPoly.y()
    assert gen_binom(y, 2) == YPoly((0, -1, 1)) / 2
    m3 = QRatFn.from_int_poly((1, 1, 1))
    assert gen_binom(m3, 1) == YPoly((m3,))
    two = QRatFn.from_int_poly((1, 1))
    assert gen_binom(two, 2) == YPoly((two * QRatFn.q() / 2,))
    with pytest.raises(ValueError):
        gen_binom(y, -2)


def test_gen_binom_times_factorial():
    z = q_bracket_x()
    for n in range(7):
        assert gen_binom(z, n) * factorial(n) == falling_factorial(z, n)


def test_q_integer():
    assert q_integer(0) == QPoly()
    assert q_integer(2) == QPoly((1, 1))
    assert q_integer(5) == QPoly((1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        q_integer(-1)


def test_q_bracket_x_values():
    b = q_bracket_x()
    assert b.at_x(0) == QRatFn(0)
    assert b.at_x(1) == QRatFn(1)
    assert b.at_x(2) == QRatFn.from_int_poly((1, 1))
