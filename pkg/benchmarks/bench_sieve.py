#!/usr/bin/env python3
"""Side-by-side benchmark of the two sigma sieve kernels.

Runs the numba @njit kernel and the pure-numpy strided kernel over the
same ranges, validates that the outputs match exactly, and prints
timings. The numba kernel is warmed up once so JIT compilation is not
counted.

Usage: python benchmarks/bench_sieve.py [--start N] [--spans a,b,c]
"""

import argparse
import os
import time

import numpy as np

from spoofscan.arith import sieve_primes
from spoofscan.sieve import sigma_segment


def run_backend(backend, lo, hi, primes):
    os.environ["SPOOFSCAN_BACKEND"] = backend
    started = time.perf_counter()
    seg = sigma_segment(lo, hi, primes)
    return time.perf_counter() - started, seg.values


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", type=int, default=10**8 + 1, help="odd range start")
    parser.add_argument(
        "--spans", default="16,18,20,22", help="log2 odd-slot counts to benchmark"
    )
    args = parser.parse_args()
    spans = [1 << int(s) for s in args.spans.split(",")]
    lo = args.start | 1

    try:
        import numba  # noqa: F401
    except ImportError:
        raise SystemExit("numba is not installed; nothing to compare")

    primes = sieve_primes(int((lo + 2 * max(spans)) ** 0.5) + 1)
    print("warming up numba JIT...")
    run_backend("numba", 1, 2049, primes)

    print(f"\nrange start {lo}, {len(primes)} primes")
    print(f"{'odd slots':>10}  {'numpy (s)':>10}  {'numba (s)':>10}  {'speedup':>8}  {'match':>6}")
    print("-" * 52)
    for span in spans:
        hi = lo + 2 * span
        t_np, v_np = run_backend("numpy", lo, hi, primes)
        t_nb, v_nb = run_backend("numba", lo, hi, primes)
        match = "ok" if np.array_equal(v_np, v_nb) else "FAIL"
        print(f"{span:>10}  {t_np:>10.3f}  {t_nb:>10.3f}  {t_np / t_nb:>7.1f}x  {match:>6}")
        if match == "FAIL":
            raise SystemExit(1)


if __name__ == "__main__":
    main()
