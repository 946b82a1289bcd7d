import numpy as np
import pytest

from spoofscan.arith import sieve_primes, sigma_single
from spoofscan.sieve import MAX_SPAN, SigmaSegment, sigma_segment


def test_first_odd_values():
    seg = sigma_segment(1, 11, sieve_primes(3))
    assert seg.values.tolist() == [1, 4, 6, 8, 13]


def test_descartes_slot():
    seg = sigma_segment(9018009, 9018011, sieve_primes(3003))
    assert seg.values.tolist() == [18035199]
    assert seg.sigma_of(9018009) == sigma_single(9018009)


def test_single_prime_slot_with_empty_prime_list():
    seg = sigma_segment(3, 5, np.array([], dtype=np.int64))
    assert seg.values.tolist() == [4]


@pytest.mark.parametrize("span", [1 << 10, 1 << 16, 1 << 20])
def test_matches_divisor_enumeration(span, sigma_table_1e6):
    limit = 10**6
    primes = sieve_primes(1000)
    lo = 1
    while lo <= limit:
        hi = min(lo + 2 * span, limit + 1)
        seg = sigma_segment(lo, hi, primes)
        expected = sigma_table_1e6[lo:hi:2]
        assert np.array_equal(seg.values, expected), (lo, hi)
        lo = hi


def test_matches_sigma_single_sample():
    primes = sieve_primes(1000)
    seg = sigma_segment(1, 10**6 + 1, primes)
    for n in range(1, 10**6, 4942):  # deterministic odd sample
        assert seg.sigma_of(n) == sigma_single(n), n
    for n in (999999, 999995, 531441, 9):  # 3^12 and other prime powers
        assert seg.sigma_of(n) == sigma_single(n)


def test_concatenation_equals_whole():
    primes = sieve_primes(100)
    whole = sigma_segment(1001, 9001, primes)
    left = sigma_segment(1001, 5001, primes)
    right = sigma_segment(5001, 9001, primes)
    assert np.array_equal(np.concatenate([left.values, right.values]), whole.values)


def test_backends_agree(monkeypatch):
    pytest.importorskip("numba")
    primes = sieve_primes(4000)
    monkeypatch.setenv("SPOOFSCAN_BACKEND", "numba")
    jit = sigma_segment(10**7 + 1, 10**7 + 200001, primes)
    monkeypatch.setenv("SPOOFSCAN_BACKEND", "numpy")
    plain = sigma_segment(10**7 + 1, 10**7 + 200001, primes)
    assert np.array_equal(jit.values, plain.values)


def test_backend_env_validation(monkeypatch):
    monkeypatch.setenv("SPOOFSCAN_BACKEND", "cuda")
    with pytest.raises(ValueError):
        sigma_segment(1, 11, sieve_primes(3))


def test_rejects_even_or_inverted_bounds():
    primes = sieve_primes(100)
    with pytest.raises(ValueError):
        sigma_segment(2, 11, primes)
    with pytest.raises(ValueError):
        sigma_segment(11, 11, primes)
    with pytest.raises(ValueError):
        sigma_segment(1, 12, primes)


def test_rejects_insufficient_primes():
    with pytest.raises(ValueError, match="misses prime"):
        sigma_segment(1, 11, np.array([2], dtype=np.int64))  # needs 3 for sigma(9)


def test_rejects_oversized_span():
    primes = sieve_primes(10**4)
    with pytest.raises(ValueError, match="exceeds maximum"):
        sigma_segment(1, 2 * (MAX_SPAN + 1) + 1, primes)


def test_segment_type_invariants():
    with pytest.raises(ValueError):
        SigmaSegment(lo=2, hi=11, values=np.ones(4, dtype=np.int64))
    with pytest.raises(ValueError):
        SigmaSegment(lo=1, hi=11, values=np.ones(4, dtype=np.int64))
