"""Compare the compiled and pure-Python fermionic-sum kernels.

    python benchmarks/bench_padic.py [--repeat 3]

Prints one row per workload with the best-of-``repeat`` time for each
backend and the speedup. Both backends must agree on every result.
"""

import argparse
import time

from qchanghee import padic

KIND = padic._KIND_CODES

WORKLOADS = [
    # (label, function name, args)
    ("bracket_power n=6, 5^7", "fermionic_sum", (KIND["bracket_power"], 6, 0, 1, 1, 0, 6, 5**7, 5**10)),
    ("bracket_binom n=4, 5^7", "fermionic_sum", (KIND["bracket_binom"], 4, 0, 1, 1, 1, 6, 5**7, 5**10)),
    ("falling n=5, 3^10", "fermionic_sum", (KIND["falling"], 5, 0, 0, 1, 0, 4, 3**10, 3**12)),
    ("q_power l=3, 7^7", "fermionic_sum", (KIND["q_power"], 0, 3, 2, 1, 0, 8, 7**7, 7**10)),
    ("multivariate n=2 r=2, 5^5", "multivariate_sum", (2, 2, 0, 6, 5**5, 5**10)),
    ("multivariate n=2 r=3, 3^4", "multivariate_sum", (2, 3, 0, 4, 3**4, 3**10)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    pure = padic.kernels("python")
    try:
        fast = padic.kernels("compiled")
    except ImportError:
        fast = None
        print("compiled kernels unavailable; timing the Python backend only")

    print(f"{'workload':<28}{'python (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for label, name, fargs in WORKLOADS:
        t_py, r_py = best_of(getattr(pure, name), fargs, args.repeat)
        if fast is None:
            print(f"{label:<28}{t_py:>12.4f}{'-':>14}{'-':>10}")
            continue
        t_c, r_c = best_of(getattr(fast, name), fargs, args.repeat)
        if r_c != r_py:
            raise SystemExit(f"backends disagree on {label}: {r_c} != {r_py}")
        print(f"{label:<28}{t_py:>12.4f}{t_c:>14.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
