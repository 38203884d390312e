"""
Property suites behind the `verify` command.

Every trial draws its inputs from SampleGenerator(seed, index), so a failure
is reproduced by its seed and trial index alone.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from config import VERIFY_SETTINGS
from utils.constants import C1_best, C1_weak, c1, c1_weak
from utils.continuous import strong_cont_lhs, strong_cont_sandwich, weak_cont_sandwich
from utils.functionals import ell1, gamma, weak_ell1, weak_gamma
from utils.sample_generator import SampleGenerator
from utils.sparse import INFINITY, TAU, approximation_errors, equivalence_check

logger = logging.getLogger(__name__)

DISCRETE_EXPONENTS = (1.5, 2.0, 3.0)
SPARSE_CASES = ((0.5, TAU), (0.5, INFINITY), (1.5, TAU))
EPS = float(np.finfo(float).eps)

# Test-only hook: suite whose first check is reported as failed
_injected_failure: Optional[str] = None


def inject_failure(suite: Optional[str]):
    """Flip the first check of `suite` (None switches the hook off)"""
    global _injected_failure
    _injected_failure = suite


class PropertyViolation(AssertionError):
    def __init__(self, suite: str, seed: int, index: int, detail: str):
        super().__init__(f"{suite}: trial {index} failed ({detail}); "
                         f"reproduce with: verify {suite} --seed {seed} --trials {index + 1}")
        self.suite = suite
        self.seed = seed
        self.index = index
        self.detail = detail


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    checks: int = 0
    failures: List[PropertyViolation] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.checks - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def raise_for_failures(self):
        if self.failures:
            raise self.failures[0]


# A check yields (holds, description of the input)
Check = Tuple[bool, str]


def _tolerance(slack: float) -> float:
    return 1.0 + slack + 64.0 * EPS


def _strong_trial(gen: SampleGenerator, slack: float) -> Iterator[Check]:
    a = gen.monotone_sequence()
    total = ell1(a).value
    for q in DISCRETE_EXPONENTS:
        g = gamma(a, q).value
        tol = _tolerance(slack)
        yield g <= c1(q).upper * total * tol, f"gamma/c1 <= ell1, q={q}, N={len(a)}"
        yield total <= C1_best(q).upper * g * tol, f"ell1 <= C1 gamma, q={q}, N={len(a)}"


def _weak_trial(gen: SampleGenerator, slack: float) -> Iterator[Check]:
    a = gen.monotone_sequence()
    rhs = weak_ell1(a).value
    for q in DISCRETE_EXPONENTS:
        w = weak_gamma(a, q).value
        tol = _tolerance(slack)
        yield w <= c1_weak(q).upper * rhs * tol, f"weak_gamma/c1_weak <= weak_ell1, q={q}, N={len(a)}"
        yield rhs <= C1_weak(q).upper * w * tol, f"weak_ell1 <= C1_weak weak_gamma, q={q}, N={len(a)}"


def _continuous_trial(gen: SampleGenerator, slack: float) -> Iterator[Check]:
    f, g = gen.step_pair()
    for q in DISCRETE_EXPONENTS:
        strong = strong_cont_sandwich(f, q, slack)
        yield strong.lower_ok, f"strong lower side, q={q}, steps={len(f)}"
        yield strong.upper_ok, f"strong upper side, q={q}, steps={len(f)}"
        weak = weak_cont_sandwich(f, q, slack)
        yield weak.ok, f"weak sandwich, q={q}, steps={len(f)}"

    # subadditivity on one exponent per trial
    q = DISCRETE_EXPONENTS[gen.index % len(DISCRETE_EXPONENTS)]
    both = strong_cont_lhs(f + g, q)
    parts = strong_cont_lhs(f, q)
    other = strong_cont_lhs(g, q)
    holds = both.lower <= parts.upper + other.upper
    yield holds, f"subadditivity, q={q}, steps={len(f)}+{len(g)}"


def _sparse_trial(gen: SampleGenerator, slack: float) -> Iterator[Check]:
    c = gen.coefficient_vector()
    errors = np.asarray(approximation_errors(c))
    yield bool(np.all(np.diff(errors) <= 0.0)), f"E_n nonincreasing, len={len(c)}"
    shuffled = gen.rng.permutation(c.coefficients) * gen.rng.choice([-1.0, 1.0], size=len(c))
    permuted = np.asarray(approximation_errors(shuffled))
    yield bool(np.allclose(errors, permuted, rtol=1e-12, atol=0.0)), f"E_n permutation invariance, len={len(c)}"
    for alpha, mode in SPARSE_CASES:
        check = equivalence_check(c, alpha, mode, slack)
        yield check.ratio_low_ok and check.ratio_high_ok, f"equivalence alpha={alpha} r={mode}, len={len(c)}"


SUITES: Dict[str, Callable[[SampleGenerator, float], Iterator[Check]]] = {
    'strong': _strong_trial,
    'weak': _weak_trial,
    'continuous': _continuous_trial,
    'sparse': _sparse_trial,
}


def run_suite(suite: str, seed: int = VERIFY_SETTINGS['SEED'], trials: int = VERIFY_SETTINGS['TRIALS'],
              slack: float = VERIFY_SETTINGS['SLACK']) -> SuiteReport:
    if suite not in SUITES:
        raise KeyError(f"unknown suite '{suite}'")
    report = SuiteReport(suite, seed, trials)
    trial = SUITES[suite]
    for index in range(trials):
        gen = SampleGenerator(seed, index)
        for holds, detail in trial(gen, slack):
            if _injected_failure == suite and report.checks == 0:
                holds = not holds
            report.checks += 1
            if not holds:
                violation = PropertyViolation(suite, seed, index, detail)
                logger.error(str(violation))
                report.failures.append(violation)
    logger.info(f"suite {suite}: {report.passed}/{report.checks} checks passed over {trials} trials")
    return report


def run_all(seed: int = VERIFY_SETTINGS['SEED'], trials: int = VERIFY_SETTINGS['TRIALS'],
            slack: float = VERIFY_SETTINGS['SLACK']) -> List[SuiteReport]:
    return [run_suite(name, seed, trials, slack) for name in SUITES]
