"""Exact arithmetic for Carlitz-type q-Changhee and q-Euler numbers and polynomials."""

from .changhee import (
    ChangheeQValue,
    Residual,
    changhee_q_higher,
    changhee_q_number,
    changhee_q_poly,
    changhee_q_poly_direct,
    euler_from_changhee,
    gf_check,
    gf_check_poly,
    verify_distribution,
    verify_recurrence,
)
from .combinat import falling_factorial, gen_binom, q_bracket_x, q_integer, stirling1, stirling2
from .exact import (
    BigRat,
    QPoly,
    QRatFn,
    QSeries,
    TSeries,
    YPoly,
    ratfn_eval_q,
    ratfn_limit_q1,
    ratfn_qseries,
    ratfn_reduce,
    ypoly_shift_x,
)
from .padic import (
    BACKEND,
    IntegrandSpec,
    PadicApprox,
    check_functional_equation,
    convergence_profile,
    fermionic_integral,
    multivariate_integral,
)
from .qeuler import (
    classical_changhee_poly,
    classical_euler_poly,
    euler_q_higher,
    euler_q_number,
    euler_q_poly,
    euler_q_poly_rebased,
)


def clear_caches():
    """Drop memoized q-Euler / q-Changhee values (e.g. after swapping a Stirling table)."""
    from . import changhee, qeuler

    changhee.clear_caches()
    for fn in (qeuler.euler_q_number, qeuler.euler_q_poly, qeuler.euler_q_poly_rebased,
               qeuler.euler_q_higher, qeuler._bracket_power, qeuler.classical_euler_number):
        fn.cache_clear()
