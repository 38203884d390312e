#!/usr/bin/env python3
"""
Tests for extremal sequences: flat vertices, harmonic and flat weak extremals
"""

import math
import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import logging

import numpy as np

from utils.constants import C1_weak, c1, c1_weak
from utils.extremal import (ExtremalResult, integral_brackets, random_simplex_points, simplex_vertex_search,
                            vertex_antiderivative, vertex_sum, vertex_sweep, weak_lower_extremal,
                            weak_upper_extremal)
from utils.functionals import ell1, gamma, weak_ell1, weak_gamma
from utils.sequences import MonotoneSequence
from utils.validation import DomainError

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def raises(exc, fn, *args, **kwargs):
    try:
        fn(*args, **kwargs)
    except exc:
        return True
    return False


def test_vertex_sum_values():
    """Flat vertices at q = 2"""
    assert vertex_sum(2, 1) == 1.0
    assert abs(vertex_sum(2, 2) - 1.0606601717798212) < 1e-14
    for k0 in (1, 2, 7):
        a = MonotoneSequence.flat(k0)
        assert abs(vertex_sum(2, k0) - gamma(a, 2).value / ell1(a).value) < 1e-14
    assert raises(DomainError, vertex_sum, 2, 0)
    assert raises(DomainError, vertex_sum, 'inf', 3)


def test_fft_sweep_matches_direct():
    """Convolution sweep agrees with direct sums past the switch-over"""
    sweep = vertex_sweep(2, 12_000)
    assert len(sweep) == 12_000
    for k0 in (1, 2, 100, 10_001, 12_000):
        assert abs(sweep[k0 - 1] - vertex_sum(2, k0)) < 1e-9
    assert np.all(np.diff(sweep) > 0.0)


def test_integral_brackets():
    """Antiderivative bounds enclose every vertex sum"""
    lower, upper = integral_brackets(1)
    assert abs(lower - (math.pi / 2 - 1)) < 1e-15
    assert abs(upper - 1.0) < 1e-15
    assert abs(vertex_antiderivative(1) - (math.pi / 2 - 1)) < 1e-15
    for k0 in (1, 2, 5, 50, 1000, 100_000):
        lower, upper = integral_brackets(k0)
        s = vertex_sum(2, k0)
        assert lower <= s <= upper
    lower, upper = integral_brackets(1_000_000)
    assert upper - lower < 1e-2
    assert upper < math.pi / 2


def test_vertex_supremum_approaches_c1():
    """Vertex sums increase to c1(2) = pi/2 from below"""
    best = simplex_vertex_search(2, 6)
    assert isinstance(best, ExtremalResult)
    assert best.argmax == 6
    assert best.value == vertex_sum(2, 6)
    assert vertex_sum(2, 100_000) < c1(2).upper
    assert raises(DomainError, simplex_vertex_search, 2, 0)


def test_vertex_sums_stay_below_c1():
    """Every flat vertex sum is below c1(q), across the FFT switch-over"""
    for q in (1.5, 3.0, 5.0):
        sweep = vertex_sweep(q, 20_000)
        assert float(np.max(sweep)) <= c1(q).value + 1e-3, q
        assert sweep[-1] <= c1(q).upper


def test_random_simplex_points():
    """Random convex combinations are monotone with unit sum"""
    points = random_simplex_points(6, 1000, seed=11)
    assert points.shape == (1000, 6)
    assert np.all(np.diff(points, axis=1) <= 1e-15)
    assert np.allclose(points.sum(axis=1), 1.0, atol=1e-12)
    assert np.array_equal(points, random_simplex_points(6, 1000, seed=11))
    best = vertex_sum(2, 6)
    for row in points[:200]:
        assert gamma(MonotoneSequence(row), 2).value <= best * (1 + 1e-12)


def test_weak_upper_extremal():
    """Flat sequences attain C1_weak at n near (N+1)/q'"""
    result = weak_upper_extremal(2, 4)
    assert abs(result.value - math.sqrt(6) / 4) < 1e-15
    assert result.argmax == 2
    for N in (10, 101, 1000):
        ratio = 1.0 / weak_upper_extremal(3, N).value
        assert ratio <= C1_weak(3).upper * (1 + 1e-12)
    # ratio tends to C1_weak as N grows
    assert abs(1.0 / weak_upper_extremal(2, 100_000).value - C1_weak(2).value) < 1e-3


def test_flat_sequence_minimizes_weak_ratio():
    """weak_gamma/weak_ell1 on random simplex points never drops below the flat value"""
    for q in (1.5, 2.0, 3.0):
        for N in (10, 50):
            flat = weak_upper_extremal(q, N).value
            for row in random_simplex_points(N, 300, seed=N):
                a = MonotoneSequence(row)
                assert weak_gamma(a, q).value >= flat * weak_ell1(a).value * (1 - 1e-12), (q, N)


def test_weak_lower_extremal():
    """Truncated harmonic sequence approaches c1_weak from below"""
    result = weak_lower_extremal(2, 1000)
    assert result.argmax == 1
    assert result.value <= c1_weak(2).upper
    assert abs(result.value - c1_weak(2).value) < 1e-3
    for q in (1.5, 2.0, 3.0):
        for K in (100, 10_000):
            assert weak_lower_extremal(q, K).argmax == 1, (q, K)
    assert raises(DomainError, weak_lower_extremal, 1.0005, 100)


def main():
    """Run all extremal tests"""
    print("🚀 Starting Extremal Tests")
    print("=" * 60)

    tests = [
        test_vertex_sum_values,
        test_fft_sweep_matches_direct,
        test_integral_brackets,
        test_vertex_supremum_approaches_c1,
        test_vertex_sums_stay_below_c1,
        test_random_simplex_points,
        test_weak_upper_extremal,
        test_flat_sequence_minimizes_weak_ratio,
        test_weak_lower_extremal,
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
