"""Segmented sieve for sigma(n) over odd n in a half-open range.

The kernel keeps two per-slot accumulators for each odd n in [lo, hi):
the remaining cofactor (initially n) and the partial sigma product
(initially 1). For every odd prime p up to sqrt(hi - 1) it visits the
odd multiples of p, pulls the full power p^e out of the cofactor and
multiplies the partial sigma by 1 + p + ... + p^e. Whatever cofactor is
left afterwards is either 1 or a single prime q > sqrt(hi - 1), which
contributes q + 1. The prime 2 never divides an odd n and is skipped.

Two interchangeable kernels implement this: a numba @njit loop (default
when numba imports) and a pure-numpy strided version. Select explicitly
with SPOOFSCAN_BACKEND=numba|numpy. benchmarks/bench_sieve.py compares
the two.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .arith import is_prime

__all__ = ["SigmaSegment", "sigma_segment", "active_backend", "DEFAULT_SPAN", "MAX_SPAN"]

# Odd slots per segment: default working set is two 8 MiB int64 arrays.
DEFAULT_SPAN = 1 << 20
MAX_SPAN = 1 << 24

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False


@dataclass(frozen=True)
class SigmaSegment:
    """sigma values for the odd integers in [lo, hi); values[i] = sigma(lo + 2i)."""

    lo: int
    hi: int
    values: np.ndarray

    def __post_init__(self):
        if self.lo < 1 or self.lo % 2 == 0:
            raise ValueError(f"lo must be odd and >= 1, got {self.lo}")
        if self.hi <= self.lo or self.hi % 2 == 0:
            raise ValueError(f"hi must be odd-aligned and > lo, got {self.hi}")
        if len(self.values) != (self.hi - self.lo) // 2:
            raise ValueError("values length does not match [lo, hi)")

    def sigma_of(self, n: int) -> int:
        if n < self.lo or n >= self.hi or n % 2 == 0:
            raise ValueError(f"{n} not an odd integer in [{self.lo}, {self.hi})")
        return int(self.values[(n - self.lo) // 2])


def _fill_sigma_numpy(lo: int, hi: int, primes: np.ndarray, cof: np.ndarray, sig: np.ndarray) -> None:
    m = len(cof)
    for p in primes.tolist():
        if p == 2:
            continue
        if p * p >= hi:
            break
        first = ((lo + p - 1) // p) * p
        if first % 2 == 0:
            first += p
        if first >= hi:
            continue
        i0 = (first - lo) // 2
        # geometric sums for the stride-p slots; adding p^e at every level
        # where p^e still divides builds 1 + p + ... + p^e without tables
        cnt = (m - i0 + p - 1) // p
        geo = np.full(cnt, 1 + p, dtype=np.int64)
        cof[i0::p] //= p
        pe = p * p
        while pe < hi:
            first_e = ((lo + pe - 1) // pe) * pe
            if first_e % 2 == 0:
                first_e += pe
            if first_e >= hi:
                break
            ie = (first_e - lo) // 2
            geo[(ie - i0) // p :: pe // p] += pe
            cof[ie::pe] //= p
            pe *= p
        sig[i0::p] *= geo
    leftover = cof > 1
    sig[leftover] *= cof[leftover] + 1


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _fill_sigma_numba(lo, hi, primes, cof, sig):  # pragma: no cover - jitted
        m = cof.shape[0]
        for k in range(primes.shape[0]):
            p = primes[k]
            if p == 2:
                continue
            if p * p >= hi:
                break
            first = ((lo + p - 1) // p) * p
            if first % 2 == 0:
                first += p
            if first >= hi:
                continue
            for i in range((first - lo) // 2, m, p):
                c = cof[i] // p
                pe = p
                geo = 1 + p
                while c % p == 0:
                    c //= p
                    pe *= p
                    geo += pe
                cof[i] = c
                sig[i] *= geo
        for i in range(m):
            if cof[i] > 1:
                sig[i] *= cof[i] + 1


def active_backend() -> str:
    """Kernel selected by SPOOFSCAN_BACKEND, defaulting to numba when present."""
    choice = os.environ.get("SPOOFSCAN_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("SPOOFSCAN_BACKEND=numba but numba is not installed")
        return "numba"
    if choice:
        raise ValueError(f"unknown SPOOFSCAN_BACKEND {choice!r} (use 'numba' or 'numpy')")
    return "numba" if _HAVE_NUMBA else "numpy"


def _check_prime_cover(primes: np.ndarray, hi: int) -> None:
    # every odd prime <= sqrt(hi - 1) must be present; scan the gap above
    # the supplied maximum for a missed prime
    bound = isqrt(hi - 1)
    top = int(primes[-1]) if len(primes) else 2
    q = top + 1 if top % 2 == 0 else top + 2
    while q <= bound:
        if is_prime(q):
            raise ValueError(
                f"prime list (max {top}) misses prime {q} <= sqrt({hi - 1})"
            )
        q += 2


def sigma_segment(lo: int, hi: int, primes: np.ndarray) -> SigmaSegment:
    """Compute sigma for every odd integer in [lo, hi).

    `primes` must be an ascending array containing every odd prime up to
    sqrt(hi - 1); extra primes are ignored. Raises ValueError when the
    prime list is insufficient and when (hi - lo) / 2 exceeds MAX_SPAN.
    """
    if lo < 1 or lo % 2 == 0:
        raise ValueError(f"lo must be odd and >= 1, got {lo}")
    if hi <= lo:
        raise ValueError(f"need hi > lo, got [{lo}, {hi})")
    if hi % 2 == 0:
        raise ValueError(f"hi must be odd-aligned (odd), got {hi}")
    slots = (hi - lo) // 2
    if slots > MAX_SPAN:
        raise ValueError(f"segment of {slots} odd slots exceeds maximum {MAX_SPAN}")
    primes = np.asarray(primes, dtype=np.int64)
    _check_prime_cover(primes, hi)

    cof = np.arange(lo, hi, 2, dtype=np.int64)
    sig = np.ones(slots, dtype=np.int64)
    if active_backend() == "numba":
        _fill_sigma_numba(lo, hi, primes, cof, sig)
    else:
        _fill_sigma_numpy(lo, hi, primes, cof, sig)
    return SigmaSegment(lo=lo, hi=hi, values=sig)
