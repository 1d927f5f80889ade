#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the two hot loops (isotropic scan, full pair classification) on a few
instances under both backends and prints the timings side by side.  The
numba path is warmed up first so compilation time is reported separately.
"""

import argparse
import time

from unitary_schemes import kernels
from unitary_schemes.fields import build_field
from unitary_schemes.space import enumerate_isotropic, isotropic_count

SCAN_CASES = [(4, 2), (6, 2), (4, 3), (2, 9)]
PAIR_CASES = [(4, 2), (5, 2), (3, 3), (4, 3)]


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_scan(n, q, repeat):
    ft = build_field(q)
    expected = isotropic_count(n, q)
    return time_call(
        lambda: kernels.isotropic_scan(n, ft.order, ft.norm_table, ft.add_table, expected),
        repeat,
    )


def bench_pairs(n, q, repeat):
    us = enumerate_isotropic(n, q)
    return time_call(lambda: kernels.classify_matrix(us.vectors, us.ft), repeat)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    backends = ["numpy"]
    if kernels.HAVE_NUMBA:
        backends.append("numba")
    else:
        print("numba not importable; benchmarking the numpy path only")

    if "numba" in backends:
        kernels.set_backend("numba")
        start = time.perf_counter()
        bench_scan(2, 2, 1)
        bench_pairs(2, 2, 1)
        print(f"numba warmup (compilation): {time.perf_counter() - start:.2f}s\n")

    header = f"{'kernel':<28}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, cases, bench in (("isotropic scan", SCAN_CASES, bench_scan),
                                ("pair classification", PAIR_CASES, bench_pairs)):
        for n, q in cases:
            times = {}
            for backend in backends:
                kernels.set_backend(backend)
                times[backend] = bench(n, q, args.repeat)
            row = f"{label + f' (n={n}, q={q})':<28}"
            row += "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
            if len(backends) == 2:
                row += f"{times['numpy'] / times['numba']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
