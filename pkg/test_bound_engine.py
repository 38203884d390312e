#!/usr/bin/env python3
"""
Tests for the auxiliary-sequence bound engine
"""

import math
import sys
import os
import time
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import logging

import numpy as np

from utils.bound_engine import (LAMBDA_STAR, AuxSequence, a_n_terms, a_prime, c_b, corollary_bound, envelope,
                                optimize_p)
from utils.constants import IMPROVED_BASE, improved, stechkin_choice
from utils.functionals import ell1, gamma
from utils.sample_generator import SampleGenerator
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


def test_corollary_reproduction():
    """p = 0.88, N = 100, M = 2e5 bounds C1(2) by 1.1086983"""
    start = time.perf_counter()
    report = corollary_bound()
    elapsed = time.perf_counter() - start
    assert 1.108 <= report.supremum.upper <= 1.1086983
    assert report.truncation_error <= 5e-9
    assert math.isclose(report.reference_estimate, 4.8018e-9, rel_tol=1e-3)
    assert len(report.terms) == 100
    assert elapsed < 5.0


def test_p_one_is_attained_in_tail():
    """b_k = k(k+1): envelope 2/sqrt(3) dominates every computed term"""
    report = c_b(2, AuxSequence.power_family(1.0), n_terms=50, m=100_000)
    assert report.supremum.value <= 2 / math.sqrt(3) + 1e-6
    assert report.attained_in_tail and report.argmax is None
    first = 2.0 * math.sqrt(math.pi ** 2 / 3 - 3)
    assert report.terms[0].contains(first) or abs(report.terms[0].value - first) < 1e-9


def test_bound_holds_on_random_sequences():
    """sum a_n <= C_b(q) gamma(a) on seeded random sequences"""
    for q in (1.5, 2.0, 2.5):
        for p in (0.88, 1.0):
            bound = c_b(q, AuxSequence.power_family(p), n_terms=20, m=20_000).supremum.upper
            for index in range(500):
                a = SampleGenerator(seed=5, index=index).monotone_sequence(max_length=120)
                assert ell1(a).value <= bound * gamma(a, q).value * (1 + 1e-12), (q, p, index)


def test_p_one_closed_form():
    """At p = 1 the supremum is 2 (2q'-1)^(-1/q'), reached in the tail"""
    for q in (1.5, 3.0):
        report = c_b(q, AuxSequence.power_family(1.0), n_terms=50, m=100_000)
        assert report.attained_in_tail
        assert abs(report.supremum.value - stechkin_choice(q).value) < 1e-9, q


def test_divergent_p_rejected():
    """p <= 1/(2q') makes the inner series diverge"""
    assert raises(DomainError, corollary_bound, p=0.2, q=2)
    assert raises(DomainError, corollary_bound, p=0.25, q=2)
    assert raises(DomainError, AuxSequence.power_family, 1.5)


def test_a_prime():
    """A'_1 = 2^p, constant 2 at p = 1, nonincreasing"""
    n = np.arange(1, 10_001, dtype=float)
    assert np.all(a_prime(1.0, n) == 2.0)
    for p in (0.6, 0.88, 1.0):
        values = a_prime(p, n)
        assert abs(values[0] - 2.0 ** p) < 1e-15
        assert np.all(np.diff(values) <= 0.0)
    assert abs(float(a_prime(0.5, 1e6)) - 1.0) < 1e-6


def test_envelope_bounds_terms():
    """The envelope at n bounds every computed A_m^(1/q') for m >= n"""
    p = 0.88
    terms = a_n_terms(2, p, 40, 50_000)
    roots = [t.upper ** 0.5 for t in terms]
    for n in (1, 5, 20):
        assert max(roots[n - 1:]) <= float(envelope(2, p, n))


def test_truncation_monotone_in_m():
    """Enclosures at a small M contain the value at a large M"""
    coarse = a_n_terms(2, 0.88, 5, 1_000)
    fine = a_n_terms(2, 0.88, 5, 200_000)
    for c, f in zip(coarse, fine):
        assert c.lower <= f.value <= c.upper
        assert f.err < c.err


def test_aux_sequence_checks():
    """b_0 must vanish and b must increase"""
    assert raises(DomainError, AuxSequence, lambda n: n + 1.0)
    assert raises(DomainError, AuxSequence, lambda n: -n)
    custom = AuxSequence(lambda n: n ** 2, tail_bound=lambda conj, m: m ** (1 - 2 * conj) / (2 * conj - 1))
    report = c_b(2, custom, n_terms=10, m=10_000)
    assert report.tail_majorant is None and report.argmax is not None


def test_optimize_p():
    """Optimal p reproduces the improved bound"""
    p_star, bound = optimize_p(2)
    assert abs(p_star - LAMBDA_STAR / 2) < 1e-15
    assert abs(bound.value - improved(2).value) < 1e-12
    assert abs(bound.value - IMPROVED_BASE ** 0.5) < 1e-12
    assert raises(DomainError, optimize_p, 2.5)


def main():
    """Run all bound engine tests"""
    print("🚀 Starting Bound Engine Tests")
    print("=" * 60)

    tests = [
        test_corollary_reproduction,
        test_p_one_is_attained_in_tail,
        test_bound_holds_on_random_sequences,
        test_p_one_closed_form,
        test_divergent_p_rejected,
        test_a_prime,
        test_envelope_bounds_terms,
        test_truncation_monotone_in_m,
        test_aux_sequence_checks,
        test_optimize_p,
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
