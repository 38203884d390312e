#!/usr/bin/env python3
"""
Tests for exponents, monotone sequences, suffix tables and summation helpers
"""

import math
import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import logging

import numpy as np

from hypothesis import given, settings
import hypothesis.strategies as st

from utils.caching import SimpleCache, cache, cached
from utils.sequences import (Exponent, MonotoneSequence, PowerOverflowError, conjugate, rearrange,
                             suffix_power_table)
from utils.summation import backward_suffix_sums, compensated_sum, two_sum
from utils.validation import DomainError, parse_exponent_text, validate_exponent, validate_monotone

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def raises(exc, fn, *args, **kwargs):
    try:
        fn(*args, **kwargs)
    except exc:
        return True
    return False


def test_two_sum_is_exact():
    """two_sum recovers the rounding error of an addition"""
    s, t = two_sum(1.0, 1e-17)
    assert s == 1.0 and t == 1e-17
    s, t = two_sum(0.1, 0.2)
    assert s == 0.1 + 0.2
    assert t != 0.0


def test_compensated_sum():
    """Cancellation that defeats naive summation"""
    assert compensated_sum([1e16, 1.0, -1e16]) == 1.0
    assert compensated_sum([0.1] * 10) == 1.0
    assert compensated_sum([]) == 0.0


def test_backward_suffix_sums():
    """Suffix sums with a trailing zero"""
    assert backward_suffix_sums([1.0, 2.0, 3.0]) == [6.0, 5.0, 3.0, 0.0]
    assert backward_suffix_sums([]) == [0.0]
    table = backward_suffix_sums([1.0 / k for k in range(1, 1000)])
    assert all(a >= b for a, b in zip(table, table[1:]))


def test_exponent_parsing():
    """Exponents from numbers and text"""
    q = Exponent.of(2)
    assert q.value == 2.0 and q.conj == 2.0
    assert Exponent.of('inf').is_infinite
    assert Exponent.of('∞').conj == 1.0
    assert Exponent.of(' 1.5 ').conj == 3.0
    assert raises(DomainError, Exponent.of, 1.0)
    assert raises(DomainError, Exponent.of, 0.5)
    assert raises(DomainError, Exponent.of, 'abc')
    assert raises(DomainError, Exponent.of, float('nan'))
    assert Exponent.of(1.0, allow_one=True).is_one
    assert parse_exponent_text('INF') == math.inf


def test_conjugate_involution():
    """Conjugation is exact, inf and 1 swap"""
    for q in (1.1, 1.7, 2.0, 3.0, 10.0):
        once = conjugate(q)
        assert conjugate(once) == Exponent.of(q)
        assert abs(1.0 / q + 1.0 / once.value - 1.0) < 1e-15
    for q in np.linspace(1.01, 100.0, 500):
        q = float(q)
        once = conjugate(q)
        assert conjugate(once).value == q and conjugate(once).conj == once.value
        assert once.value == q / (q - 1.0)
        assert abs(1.0 / q + 1.0 / once.value - 1.0) <= 2 * np.finfo(float).eps, q
    one = conjugate('inf')
    assert one.is_one and one.value == 1.0
    assert conjugate(one).is_infinite


def test_monotone_sequence_validation():
    """Rejects empty, increasing, negative and non-finite inputs"""
    assert raises(DomainError, MonotoneSequence, [])
    assert raises(DomainError, MonotoneSequence, [1.0, 2.0])
    assert raises(DomainError, MonotoneSequence, [1.0, -0.5])
    assert raises(DomainError, MonotoneSequence, [math.inf])
    a = MonotoneSequence([3.0, 2.0, 2.0, 0.0])
    assert len(a) == 4 and a[1] == 3.0 and a[4] == 0.0
    assert raises(IndexError, a.__getitem__, 0)
    assert raises(ValueError, a.entries.__setitem__, 0, 5.0)
    assert MonotoneSequence.flat(4).tolist() == [0.25] * 4
    assert MonotoneSequence.harmonic(3)[3] == 1.0 / 3.0


def test_rearrange():
    """Non-increasing rearrangement of moduli"""
    assert rearrange([3.0, -5.0, 1.0]).tolist() == [5.0, 3.0, 1.0]
    assert raises(DomainError, rearrange, [])


def test_suffix_power_table():
    """Suffix sums of a_k^q"""
    table = suffix_power_table(MonotoneSequence([1.0, 0.5]), 2)
    assert table.values == (1.25, 0.25, 0.0)
    assert table.at(3) == 0.0
    sup_table = suffix_power_table(MonotoneSequence([1.0, 0.5]), 'inf')
    assert sup_table.values == (1.0, 0.5, 0.0)
    assert raises(PowerOverflowError, suffix_power_table, MonotoneSequence([1e200]), 2)
    rng = np.random.default_rng(11)
    a = MonotoneSequence(np.sort(rng.random(10_000))[::-1])
    powers = (a.entries ** 1.7).tolist()
    table = suffix_power_table(a, 1.7)
    for n in list(range(1, 10_001, 97)) + [10_000]:
        naive = math.fsum(powers[n - 1:])
        assert abs(table.at(n) - naive) <= 1e-13 * naive, n
    assert table.at(10_001) == 0.0


def test_validation_predicates():
    """Boolean predicates never raise"""
    assert validate_exponent(2) and not validate_exponent(1)
    assert validate_exponent(1, allow_one=True)
    assert not validate_exponent('x')
    assert validate_monotone([2.0, 1.0, 1.0]) and not validate_monotone([1.0, 2.0])
    assert not validate_monotone([])
    assert validate_monotone(np.array([3.0, 0.0])) and not validate_monotone([1.0, math.nan])
    assert not validate_monotone([0.0, -1.0])
    # constructors report through the same predicates
    assert raises(DomainError, Exponent.of, -math.inf)
    assert raises(DomainError, Exponent.of, 0.5)
    assert raises(DomainError, MonotoneSequence, [[2.0, 1.0], [0.5, 3.0]])


def test_cached_decorator():
    """Results of pure functions are memoised"""
    calls = []

    @cached
    def square(x):
        calls.append(x)
        return x * x

    cache.clear()
    assert square(3) == 9 and square(3) == 9
    assert calls == [3]

    @cached
    def total(xs):
        return sum(xs)

    # unhashable arguments bypass the cache
    assert total([1, 2]) == 3
    small = SimpleCache(max_entries=2)
    for key in 'abc':
        small.set(key, key.upper())
    assert len(small) == 2 and small.get('a') is None and small.get('c') == 'C'


@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=60))
@settings(max_examples=200, deadline=None)
def test_rearrange_is_monotone(xs):
    """Any finite list rearranges into a valid monotone sequence"""
    a = rearrange(xs)
    assert len(a) == len(xs)
    assert validate_monotone(a.tolist())
    assert abs(compensated_sum(a.tolist()) - math.fsum(abs(x) for x in xs)) <= 1e-9 * max(1.0, a[1])


def main():
    """Run all sequence tests"""
    print("🚀 Starting Sequence Tests")
    print("=" * 60)

    tests = [
        test_two_sum_is_exact,
        test_compensated_sum,
        test_backward_suffix_sums,
        test_exponent_parsing,
        test_conjugate_involution,
        test_monotone_sequence_validation,
        test_rearrange,
        test_suffix_power_table,
        test_validation_predicates,
        test_cached_decorator,
        test_rearrange_is_monotone,
    ]

    passed = 0
    for test in tests:
        try:
            test()
            passed += 1
            print(f"✅ {test.__name__} PASSED")
        except AssertionError as e:
            print(f"❌ {test.__name__} FAILED {e}")
        except Exception as e:
            print(f"❌ {test.__name__} ERROR: {e}")

    print("=" * 60)
    print(f"📊 Results: {passed}/{len(tests)} tests passed")
    return passed == len(tests)


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
