#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure fallback.

Runs the three hot kernels on fixed seeded inputs through both backends
and prints best-of-N wall times plus the speedup.  Usage:

    python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

from batlb import _pure, gen_random
from batlb.backend import constraint_arrays
from batlb.solvers import _middle_csr

try:
    from batlb import _native
except ImportError:
    _native = None


def best_of(repeats, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    moment_inst = gen_random(8, 100, seed=1)
    brute_inst = gen_random(8, 30, seed=2)
    dp_inst = gen_random(18, 120, seed=3)

    cases = [
        (
            "moment_power_sums (n=8, m=100)",
            "moment_power_sums",
            (moment_inst.n, *constraint_arrays(moment_inst)),
        ),
        (
            "brute_best        (n=8, m=30)",
            "brute_best",
            (brute_inst.n, *constraint_arrays(brute_inst)),
        ),
        (
            "dp_best           (n=18, m=120)",
            "dp_best",
            (dp_inst.n, *_middle_csr(dp_inst)),
        ),
    ]

    if _native is None:
        print("compiled extension not available; showing pure backend only")
    print(f"{'kernel':34} {'native':>10} {'pure':>10} {'speedup':>9}")
    for label, name, call_args in cases:
        pure_t, pure_r = best_of(args.repeats, getattr(_pure, name), *call_args)
        if _native is not None:
            native_t, native_r = best_of(args.repeats, getattr(_native, name), *call_args)
            if name == "moment_power_sums":
                assert native_r == pure_r
            else:
                assert native_r[0] == pure_r[0] and list(native_r[1]) == list(pure_r[1])
            print(f"{label:34} {native_t * 1e3:8.1f}ms {pure_t * 1e3:8.1f}ms "
                  f"{pure_t / native_t:8.1f}x")
        else:
            print(f"{label:34} {'-':>10} {pure_t * 1e3:8.1f}ms {'-':>9}")


if __name__ == "__main__":
    main()
