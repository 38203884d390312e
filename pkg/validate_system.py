#!/usr/bin/env python3
"""
End-to-end validation of the published numbers and checks
"""

import math
import os
import sys
import time

import numpy as np

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from utils.bound_engine import a_prime, corollary_bound
from utils.constants import (C1_weak, Q_IMPROVED, c1, c1_weak, crossovers, gao_equation, gao_q0,
                             improved, stechkin_choice, zeta, zeta_lower_bound)
from utils.continuous import StepFunction, strong_cont_lhs
from utils.extremal import integral_brackets, random_simplex_points, vertex_sweep, weak_upper_extremal
from utils.functionals import ell1, gamma
from utils.sample_generator import SampleGenerator
from utils.sequences import MonotoneSequence
from utils.sparse import INFINITY, TAU, devore_constants, equivalence_check
from utils.verification import run_suite


def check_corollary():
    """Corollary bound at p = 0.88, N = 100, M = 2e5, q = 2"""
    start = time.perf_counter()
    report = corollary_bound()
    elapsed = time.perf_counter() - start
    sup = report.supremum.upper
    print(f"   supremum {sup:.10f}, certificate {report.truncation_error:.3g}, {elapsed:.2f}s")
    return 1.108 <= sup <= 1.1086983 and report.truncation_error <= 5e-9 and elapsed < 5.0


def check_flat_vertices():
    """vertex sums at q = 2: increasing, bracketed, approaching pi/2"""
    start = time.perf_counter()
    sums = vertex_sweep(2, 10_000)
    increasing = bool(np.all(np.diff(sums) > 0.0))
    bracketed = True
    for k0 in range(1, 10_001):
        low, high = integral_brackets(k0)
        value = sums[k0 - 1]
        if not (low <= value * (1 + 1e-12) and value <= high * (1 + 1e-12)):
            print(f"   bracket fails at k0 = {k0}: {low} <= {value} <= {high}")
            bracketed = False
            break
    gap = math.pi / 2 - vertex_sweep(2, 1_000_000)[-1]
    elapsed = time.perf_counter() - start
    print(f"   pi/2 - vertex_sum(2, 1e6) = {gap:.3e}, {elapsed:.2f}s")
    return increasing and bracketed and 0.0 < gap < 5e-3 and elapsed < 10.0


def check_gao_root():
    """Root of the Gao equation"""
    q0 = gao_q0()
    residual = abs(gao_equation(q0.value))
    print(f"   q0 = {q0}, |g(q0)| = {residual:.2e}")
    return abs(q0.value - 2.8855) <= 5e-4 and residual <= 1e-7


def check_crossovers():
    """Crossover exponents of the upper bounds"""
    found = crossovers()
    expected = {'q1': 1.3229, 'q2': 4.4124, 'q3': 1.7718, 'q4': 1.3725}
    ok = True
    for name, target in expected.items():
        value = getattr(found, name).value
        print(f"   {name} = {value:.6f} (expected {target})")
        ok = ok and abs(value - target) <= 5e-4
    return ok


def check_weak_constants():
    """Weak constants, Hölder symmetry and the flat-sequence limit"""
    ok = abs(c1_weak(2).value - 1.282549830161864) <= 1e-9
    ok = ok and abs(C1_weak(2).value - 2.0) <= 1e-12
    for q in (1.1, 1.5, 3.0, 10.0):
        ok = ok and abs(C1_weak(q).value - C1_weak(q / (q - 1.0)).value) <= 1e-12
    ratio = 1.0 / weak_upper_extremal(2, 100_000).value
    print(f"   c1_weak(2) = {c1_weak(2)}, flat ratio at N = 1e5: {ratio:.8f}")
    return ok and abs(ratio - 2.0) <= 1e-4


def check_zeta_lower_bound():
    """zeta(q) > 1/(q-1) + 1/2 with the error bar included"""
    for i in range(11, 101):
        q = i / 10.0
        z = zeta(q)
        if not z.lower > zeta_lower_bound(q):
            print(f"   fails at q = {q}: {z}")
            return False
    return True


def check_continuous_beta():
    """Quadrature against pi/(q sin(pi/q)) on (1/T) chi_(0,T)"""
    ok = True
    for q in (1.5, 2.0, 3.0, 5.0):
        values = [strong_cont_lhs(StepFunction.single_step(T), q).value for T in (0.5, 1.0, 7.0)]
        spread = max(values) - min(values)
        error = abs(values[1] - c1(q).value)
        print(f"   q = {q}: error {error:.2e}, T spread {spread:.2e}")
        ok = ok and error <= 1e-8 and spread <= 1e-10
    return ok


def check_sandwich_suites():
    """Discrete and continuous sandwiches on seeded random inputs"""
    start = time.perf_counter()
    reports = [run_suite('strong', trials=1000), run_suite('weak', trials=1000),
               run_suite('continuous', trials=200)]
    elapsed = time.perf_counter() - start
    for report in reports:
        print(f"   {report.suite}: {report.passed}/{report.checks}")
    return all(report.ok for report in reports) and elapsed < 30.0


def check_vertex_supremacy():
    """No random point of the 6-simplex beats the best vertex"""
    points = random_simplex_points(6, 10_000, seed=7)
    for q in (1.5, 2.0, 3.0):
        best = float(np.max(vertex_sweep(q, 6)))
        worst_margin = math.inf
        for row in points:
            a = MonotoneSequence(row)
            worst_margin = min(worst_margin, best - gamma(a, q).value / ell1(a).value)
        print(f"   q = {q}: vertex max {best:.12f}, smallest margin {worst_margin:.2e}")
        if worst_margin < -1e-12:
            return False
    return True


def check_devore():
    """DeVore constants and the norm equivalence on random vectors"""
    consts = devore_constants(0.5, TAU)
    ok = abs(consts.c.value - math.pi / 2) <= 1e-12 and abs(consts.C.value - 1.1064957714) <= 1e-12
    for alpha, mode in ((0.5, TAU), (0.5, INFINITY), (1.5, TAU)):
        for index in range(100):
            c = SampleGenerator(7, index).coefficient_vector()
            check = equivalence_check(c, alpha, mode)
            if not (check.ratio_low_ok and check.ratio_high_ok):
                print(f"   fails: alpha = {alpha}, r = {mode}, vector {index}")
                ok = False
    return ok


def check_improved_ordering():
    """Optimised-p bound below the p = 1 bound"""
    grid = 1.0 + (Q_IMPROVED - 1.0) * np.arange(1, 101) / 100.0
    ordered = all(improved(q).value <= stechkin_choice(q).value * (1 + 1e-15) for q in grid)
    print(f"   improved(2) = {improved(2).value:.6f}, stechkin_choice(2) = {stechkin_choice(2).value:.6f}")
    return (ordered and abs(improved(2).value - 1.1542) <= 1e-4
            and abs(stechkin_choice(2).value - 1.1547) <= 1e-4)


def check_a_prime_monotone():
    """A'_n nonincreasing for n <= 1e4"""
    n = np.arange(1, 10_001, dtype=float)
    for p in (0.6, 0.88, 1.0):
        if not np.all(np.diff(a_prime(p, n)) <= 0.0):
            print(f"   A'_n increases somewhere for p = {p}")
            return False
    return True


def main():
    print("🔢 Stechkin Toolkit Validation")
    print("=" * 60)

    checks = [
        check_corollary,
        check_flat_vertices,
        check_gao_root,
        check_crossovers,
        check_weak_constants,
        check_zeta_lower_bound,
        check_continuous_beta,
        check_sandwich_suites,
        check_vertex_supremacy,
        check_devore,
        check_improved_ordering,
        check_a_prime_monotone,
    ]

    passed = 0
    for number, check in enumerate(checks, start=1):
        print(f"{number:2d}. {check.__doc__}")
        try:
            if check():
                passed += 1
                print(f"✅ {check.__name__} PASSED")
            else:
                print(f"❌ {check.__name__} FAILED")
        except Exception as e:
            print(f"❌ {check.__name__} ERROR: {e}")

    print("\n" + "=" * 60)
    print(f"📊 {passed}/{len(checks)} checks passed")
    return passed == len(checks)


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
