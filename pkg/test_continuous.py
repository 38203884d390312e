#!/usr/bin/env python3
"""
Tests for the continuous functionals on step functions
"""

import math
import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import logging

import numpy as np
from scipy.special import beta

from utils.constants import continuous_constants
from utils.continuous import (PowerLaw, StepFunction, integral, rearrange_samples, strong_cont_beta,
                              strong_cont_lhs, strong_cont_sandwich, weak_cont_sandwich, weak_cont_values)
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


def test_single_step_matches_beta():
    """(1/T) chi_(0,T) gives B(1 - 1/q, 1 + 1/q) for every T"""
    for q in (1.5, 2.0, 3.0, 5.0):
        expected = beta(1.0 - 1.0 / q, 1.0 + 1.0 / q)
        values = [strong_cont_lhs(StepFunction.single_step(T), q) for T in (0.1, 1.0, 25.0)]
        for value in values:
            assert abs(value.value - expected) < 1e-8
            assert value.err < 1e-8
        assert abs(values[0].value - values[2].value) < 1e-10
        assert abs(expected - continuous_constants(q).c1.value) < 1e-12
    assert abs(strong_cont_lhs(StepFunction.single_step(1.0), 2).value - math.pi / 2) < 1e-10


def test_beta_cross_check():
    """Incomplete beta evaluation agrees with quadrature on several steps"""
    f = StepFunction([1.0, 2.0], [1.0, 0.5])
    assert integral(f) == 1.5
    for q in (1.5, 2.0, 3.0):
        assert abs(strong_cont_lhs(f, q).value - strong_cont_beta(f, q)) < 1e-8
    g = StepFunction([0.3, 1.1, 4.0, 4.5], [2.0, 2.0, 0.7, 0.1])
    assert abs(strong_cont_lhs(g, 2.5).value - strong_cont_beta(g, 2.5)) < 1e-8


def test_two_step_sandwich():
    """Both sides of the strong inequality on a two-step function"""
    f = StepFunction([1.0, 2.0], [1.0, 0.5])
    result = strong_cont_sandwich(f, 2)
    assert result.ok
    assert result.integral == 1.5
    assert result.rhs_ratio <= 1.0 + 1e-12
    assert 1.0 <= result.lhs_ratio <= math.pi / 2


def test_weak_single_step():
    """sup t^(1/q') (T^-q (T - t))^(1/q) for a single step"""
    values = weak_cont_values(StepFunction.single_step(1.0), 2)
    assert abs(values.weak_lhs - 0.5) < 1e-15
    assert abs(values.argmax - 0.5) < 1e-15
    assert values.weak_rhs == 1.0
    values = weak_cont_values(StepFunction.single_step(5.0), 3)
    assert abs(values.weak_lhs - (4.0 / 27.0) ** (1.0 / 3.0)) < 1e-12
    assert abs(values.weak_lhs - 0.529134) < 1e-6
    assert abs(values.argmax - 10.0 / 3.0) < 1e-12


def test_weak_sandwich_is_tight():
    """Single steps attain C1_weak_cont(2) = 2"""
    result = weak_cont_sandwich(StepFunction.single_step(3.0), 2)
    assert result.ok
    assert abs(result.values.weak_rhs / result.values.weak_lhs - 2.0) < 1e-12


def test_power_law():
    """f = 1/t makes both weak sides constant"""
    values = weak_cont_values(PowerLaw(), 2)
    assert values.weak_lhs == 1.0 and values.weak_rhs == 1.0 and values.argmax is None
    values = weak_cont_values(PowerLaw(2.0), 3)
    assert abs(values.weak_lhs - 2.0 * 2.0 ** (-1.0 / 3.0)) < 1e-15
    assert raises(DomainError, weak_cont_values, PowerLaw(0.0), 2)


def test_invalid_step_functions():
    """Increasing levels, unsorted breakpoints and zero functions are rejected"""
    assert raises(DomainError, StepFunction, [1.0, 2.0], [0.5, 1.0])
    assert raises(DomainError, StepFunction, [2.0, 1.0], [1.0, 0.5])
    assert raises(DomainError, StepFunction, [0.0, 1.0], [1.0, 0.5])
    assert raises(DomainError, StepFunction, [], [])
    assert raises(DomainError, StepFunction.single_step, 0.0)
    zero = StepFunction([1.0], [0.0])
    assert strong_cont_lhs(zero, 2).value == 0.0
    assert raises(DomainError, strong_cont_sandwich, zero, 2)
    assert raises(DomainError, weak_cont_sandwich, zero, 2)


def test_evaluation_and_sum():
    """Left-open cells, zero tail and breakpoint union"""
    f = StepFunction([1.0, 2.0], [1.0, 0.5])
    assert f(np.array([0.5, 1.0, 1.5, 2.0, 3.0])).tolist() == [1.0, 1.0, 0.5, 0.5, 0.0]
    g = StepFunction([1.5], [1.0])
    h = f + g
    assert h.breakpoints.tolist() == [1.0, 1.5, 2.0]
    assert h.levels.tolist() == [2.0, 1.5, 0.5]
    assert abs(integral(h) - (integral(f) + integral(g))) < 1e-15
    assert raises(ValueError, h.levels.__setitem__, 0, 1.0)


def test_subadditivity():
    """The strong left-hand side is subadditive"""
    f = StepFunction([1.0, 2.0], [1.0, 0.5])
    g = StepFunction([0.5, 3.0], [2.0, 0.25])
    for q in (1.5, 2.0, 3.0):
        assert strong_cont_lhs(f + g, q).value <= strong_cont_lhs(f, q).value + strong_cont_lhs(g, q).value


def test_rearrange_samples():
    """Sampled values become a nonincreasing step function"""
    f = rearrange_samples([0.2, 3.0, -1.0], 0.5)
    assert f.breakpoints.tolist() == [0.5, 1.0, 1.5]
    assert f.levels.tolist() == [3.0, 1.0, 0.2]
    assert abs(integral(f) - 2.1) < 1e-15
    assert raises(DomainError, rearrange_samples, [1.0], 0.0)
    assert raises(DomainError, rearrange_samples, [], 1.0)


def main():
    """Run all continuous tests"""
    print("🚀 Starting Continuous Tests")
    print("=" * 60)

    tests = [
        test_single_step_matches_beta,
        test_beta_cross_check,
        test_two_step_sandwich,
        test_weak_single_step,
        test_weak_sandwich_is_tight,
        test_power_law,
        test_invalid_step_functions,
        test_evaluation_and_sum,
        test_subadditivity,
        test_rearrange_samples,
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
