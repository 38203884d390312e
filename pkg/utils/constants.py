"""
Catalog of optimal constants and published upper bounds.

Discrete strong:  sum_n ((1/n) sum_{k>=n} a_k^q)^(1/q) / c1(q)  <=  sum a_n
                  sum a_n  <=  C1(q) * sum_n ((1/n) sum_{k>=n} a_k^q)^(1/q)
Discrete weak:    same shape with sup n a_n and sup n^(1-1/q) (sum a_k^q)^(1/q)
Continuous:       integrals over (0, inf) of nonincreasing f.

C1(q) is known exactly only for q = 1, q >= q0 and q = inf; elsewhere
C1_best returns the best published upper bound. The q = 2 value is de
Bruijn's reference number with its stated error bar; no algorithm for it
is implemented here.

Levin and Stechkin's first branch is implemented with the factor
(2 - 1/q)^(1/q - 1). The published text carries (1 - 1/q) instead, which is
not an improvement over Copson's bound; that variant is kept separately in
levin_stechkin_published for comparison only.
"""

import math
import logging
from enum import Enum
from typing import NamedTuple

import numpy as np

from config import NUMERIC_SETTINGS
from utils.caching import cached
from utils.certified import CertifiedValue, widen
from utils.roots import bisect, golden_section_min
from utils.sequences import Exponent, ExponentLike
from utils.validation import DomainError, require

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)
# Upper end of the range where the optimised-p bound applies, about 2.0608
Q_IMPROVED = (2.0 + LN2) / (2.0 - LN2)
# e ln(2) / sqrt(2): minimum of 2^lambda / (2 lambda - 1)
IMPROVED_BASE = math.e * LN2 / math.sqrt(2.0)
DE_BRUIJN_C1_2 = CertifiedValue(1.1064957714, 9e-10)
LEVIN_FIRST_BRANCH_END = 5.0 / 3.0
GAO_BRACKET = (2.5, 3.0)


class ConstantKind(Enum):
    c1 = 'c1'
    C1_best = 'C1_best'
    c1_weak = 'c1_weak'
    C1_weak = 'C1_weak'
    c1_cont = 'c1_cont'
    C1_cont = 'C1_cont'
    c1_weak_cont = 'c1_weak_cont'
    C1_weak_cont = 'C1_weak_cont'
    copson = 'copson'
    levin_stechkin = 'levin_stechkin'
    stechkin_choice = 'stechkin_choice'
    improved = 'improved'
    gao_exact = 'gao_exact'


# Formula and attribution printed next to each value by the CLI
FORMULAS = {
    ConstantKind.c1: "pi/(q sin(pi/q)), optimal (Bennett)",
    ConstantKind.C1_best: "best known upper bound on C1(q), piecewise",
    ConstantKind.c1_weak: "zeta(q)^(1/q), optimal",
    ConstantKind.C1_weak: "q^(1/q) q'^(1/q'), optimal",
    ConstantKind.c1_cont: "pi/(q sin(pi/q)), optimal, continuous",
    ConstantKind.C1_cont: "(q-1)^(1/q), optimal, continuous (Hardy-Littlewood-Polya)",
    ConstantKind.c1_weak_cont: "(q-1)^(-1/q), optimal, continuous",
    ConstantKind.C1_weak_cont: "q^(1/q) q'^(1/q'), optimal, continuous",
    ConstantKind.copson: "q^(1/q) (Copson)",
    ConstantKind.levin_stechkin: "three-branch bound (Levin-Stechkin)",
    ConstantKind.stechkin_choice: "2 (2q'-1)^(-1/q'), b_k = k(k+1)",
    ConstantKind.improved: "(e ln2/sqrt2)^(1/q'), optimised b_k = (k(k+1))^p",
    ConstantKind.gao_exact: "(q-1)^(1/q), exact for q >= q0 (Gao)",
}

# Section of the source text where each formula is stated
LOCI = {
    ConstantKind.c1: "§2.1",
    ConstantKind.C1_best: "§1",
    ConstantKind.c1_weak: "§3",
    ConstantKind.C1_weak: "§3",
    ConstantKind.c1_cont: "§4.1",
    ConstantKind.C1_cont: "§4.1",
    ConstantKind.c1_weak_cont: "§4.2",
    ConstantKind.C1_weak_cont: "§4.2",
    ConstantKind.copson: "§1",
    ConstantKind.levin_stechkin: "§2.2",
    ConstantKind.stechkin_choice: "§2.2",
    ConstantKind.improved: "§2.2",
    ConstantKind.gao_exact: "§1",
}


def _finite(q: ExponentLike) -> Exponent:
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite for this bound")
    return q


def c1(q: ExponentLike) -> CertifiedValue:
    q = Exponent.of(q)
    if q.is_infinite:
        return CertifiedValue(1.0)
    return CertifiedValue.closed_form(math.pi / (q.value * math.sin(math.pi / q.value)))


def copson(q: ExponentLike) -> CertifiedValue:
    q = Exponent.of(q)
    if q.is_infinite:
        return CertifiedValue(1.0)
    return CertifiedValue.closed_form(q.value ** q.reciprocal)


def stechkin_choice(q: ExponentLike) -> CertifiedValue:
    q = _finite(q)
    return CertifiedValue.closed_form(2.0 * (2.0 * q.conj - 1.0) ** (-q.conj_reciprocal))


def _levin_first_branch(q: float) -> float:
    r = 1.0 / q
    return 2.0 ** (r - 2.0) * (3.0 - r) * q * (2.0 - r) ** (r - 1.0)


def levin_stechkin(q: ExponentLike) -> CertifiedValue:
    q = Exponent.of(q)
    if q.is_infinite:
        return CertifiedValue(1.0)
    if q.value < LEVIN_FIRST_BRANCH_END:
        return CertifiedValue.closed_form(_levin_first_branch(q.value))
    if q.value < 3.0:
        return stechkin_choice(q)
    return gao_exact(q)


def levin_stechkin_published(q: ExponentLike) -> CertifiedValue:
    """First branch as printed in the published appendix, (1 - 1/q) variant"""
    q = _finite(q)
    require(q.value < LEVIN_FIRST_BRANCH_END, "published variant only differs for q < 5/3")
    r = 1.0 / q.value
    return CertifiedValue.closed_form(2.0 ** (r - 2.0) * (3.0 - r) * q.value * (1.0 - r) ** (r - 1.0))


def improved(q: ExponentLike) -> CertifiedValue:
    q = _finite(q)
    if q.value > Q_IMPROVED:
        raise DomainError(f"improved bound requires q <= (2+ln2)/(2-ln2) ~ {Q_IMPROVED:.4f}, got {q}")
    return CertifiedValue.closed_form(IMPROVED_BASE ** q.conj_reciprocal)


def gao_exact(q: ExponentLike) -> CertifiedValue:
    q = Exponent.of(q)
    if q.is_infinite:
        return CertifiedValue(1.0)
    return CertifiedValue.closed_form((q.value - 1.0) ** q.reciprocal)


def gao_equation(q: float) -> float:
    """g(q) = 2^(1/(q-1)) ((q-1)^(q/(q-1)) - (q-1)) - (1 + (3-q)/2)^(q/(q-1))"""
    s = q - 1.0
    e = q / s
    return 2.0 ** (1.0 / s) * (s ** e - s) - ((5.0 - q) / 2.0) ** e


@cached
def gao_q0() -> CertifiedValue:
    lo, hi = GAO_BRACKET
    result = bisect(gao_equation, lo, hi, half_width=NUMERIC_SETTINGS['ROOT_HALF_WIDTH'], name='q0')
    logger.debug("q0 in [%r, %r]", result.lo, result.hi)
    return result.certified()


def C1_best_is_exact(q: ExponentLike) -> bool:
    q = Exponent.of(q, allow_one=True)
    if q.is_one or q.is_infinite:
        return True
    return q.value >= gao_q0().value


def C1_best(q: ExponentLike) -> CertifiedValue:
    """Best known value of C1(q); an upper bound unless C1_best_is_exact(q)"""
    q = Exponent.of(q, allow_one=True)
    if q.is_one:
        return CertifiedValue(1.0)
    if q.is_infinite:
        return CertifiedValue(1.0)
    if q.value == 2.0:
        return DE_BRUIJN_C1_2
    if q.value <= Q_IMPROVED:
        return improved(q)
    if q.value < gao_q0().value:
        return stechkin_choice(q)
    return gao_exact(q)


def zeta_lower_bound(q: float) -> float:
    """zeta(q) > 1/(q-1) + 1/2 for all q > 1"""
    return 1.0 / (q - 1.0) + 0.5


def _zeta_partial_sum(q: float, terms: int) -> float:
    chunk = NUMERIC_SETTINGS['ZETA_CHUNK']
    partials = []
    # smallest terms first
    for stop in range(terms, 0, -chunk):
        start = max(stop - chunk, 0)
        k = np.arange(stop, start, -1, dtype=float)
        partials.append(math.fsum((k ** -q).tolist()))
    return math.fsum(partials)


def _zeta_half_width(q: float, m: int) -> float:
    return (m ** (1.0 - q) - (m + 1.0) ** (1.0 - q)) / (2.0 * (q - 1.0))


@cached
def zeta(q: float, tol: float = NUMERIC_SETTINGS['ZETA_TOLERANCE'],
         cap_level: int = logging.WARNING) -> CertifiedValue:
    """
    Riemann zeta for real q > 1 by direct summation plus an integral tail.

    sum_{k>M} k^-q lies between the integrals of x^-q over [M+1, inf) and
    [M, inf); the midpoint of that bracket is added and its half-width is
    the certified error.
    """
    if isinstance(q, Exponent):
        if q.is_infinite:
            return CertifiedValue(1.0)
        q = q.value
    q = float(q)
    if math.isinf(q):
        return CertifiedValue(1.0)
    if q < NUMERIC_SETTINGS['ZETA_MIN_EXPONENT']:
        raise DomainError(f"q too close to 1 for zeta (q = {q}, need q >= 1 + 1e-3)")
    require(tol > 0, "tolerance must be positive")

    cap = NUMERIC_SETTINGS['ZETA_MAX_TERMS']
    m = min(max(int(math.ceil((0.5 / tol) ** (1.0 / q))), 16), cap)
    while m > 16 and _zeta_half_width(q, m // 2) <= tol:
        m //= 2
    while _zeta_half_width(q, m) > tol and m < cap:
        m = min(2 * m, cap)
    if _zeta_half_width(q, m) > tol:
        logger.log(cap_level, "zeta(%g): term cap %d reached, error %.3g exceeds tol %.3g",
                       q, cap, _zeta_half_width(q, m), tol)

    partial = _zeta_partial_sum(q, m)
    tail_hi = m ** (1.0 - q) / (q - 1.0)
    tail_lo = (m + 1.0) ** (1.0 - q) / (q - 1.0)
    value = partial + 0.5 * (tail_lo + tail_hi)
    # each power carries at most one rounding, fsum adds at most one more
    err = widen(_zeta_half_width(q, m) + 4.0 * np.finfo(float).eps * value)
    logger.debug("zeta(%g) with M=%d: %r ± %.3g", q, m, value, err)
    return CertifiedValue(value, err)


def c1_weak(q: ExponentLike, tol: float = NUMERIC_SETTINGS['ZETA_TOLERANCE'],
            cap_level: int = logging.WARNING) -> CertifiedValue:
    q = Exponent.of(q)
    if q.is_infinite:
        return CertifiedValue(1.0)
    if q.value < NUMERIC_SETTINGS['ZETA_MIN_EXPONENT']:
        raise DomainError(f"q too close to 1 (q = {q.value}, need q >= 1 + 1e-3)")
    return zeta(q.value, tol, cap_level=cap_level).power(q.reciprocal)


def C1_weak(q: ExponentLike) -> CertifiedValue:
    """q^(1/q) q'^(1/q'); symmetric in q and q' by construction"""
    q = Exponent.of(q, allow_one=True)
    if q.is_one or q.is_infinite:
        return CertifiedValue(1.0)
    log_value = math.log(q.value) / q.value + math.log(q.conj) / q.conj
    return CertifiedValue.closed_form(math.exp(log_value))


class ContinuousConstants(NamedTuple):
    c1: CertifiedValue
    C1: CertifiedValue
    c1_weak: CertifiedValue
    C1_weak: CertifiedValue


def continuous_constants(q: ExponentLike) -> ContinuousConstants:
    q = Exponent.of(q)
    if q.is_infinite:
        one = CertifiedValue(1.0)
        return ContinuousConstants(one, one, one, one)
    return ContinuousConstants(
        c1(q),
        CertifiedValue.closed_form((q.value - 1.0) ** q.reciprocal),
        CertifiedValue.closed_form((q.value - 1.0) ** -q.reciprocal),
        C1_weak(q),
    )


class Crossovers(NamedTuple):
    q1: CertifiedValue
    q2: CertifiedValue
    q3: CertifiedValue
    q4: CertifiedValue


@cached
def crossovers() -> Crossovers:
    """
    q1 < q2: where 2(2q'-1)^(-1/q') meets Copson's q^(1/q);
    q3: minimiser of 2(2q'-1)^(-1/q');
    q4: where it meets the first Levin-Stechkin branch.
    """
    hw = NUMERIC_SETTINGS['CROSSOVER_HALF_WIDTH']

    def choice_minus_copson(x):
        return stechkin_choice(x).value - copson(x).value

    def levin_minus_choice(x):
        return _levin_first_branch(x) - stechkin_choice(x).value

    q1 = bisect(choice_minus_copson, 1.1, 2.0, half_width=hw, name='q1')
    q2 = bisect(choice_minus_copson, 3.0, 6.0, half_width=hw, name='q2')
    q3 = golden_section_min(lambda x: stechkin_choice(x).value, 1.1, 3.0, half_width=hw, name='q3')
    q4 = bisect(levin_minus_choice, 1.1, LEVIN_FIRST_BRANCH_END, half_width=hw, name='q4')
    return Crossovers(q1.certified(), q2.certified(), q3.certified(), q4.certified())


_DISPATCH = {
    ConstantKind.c1: c1,
    ConstantKind.C1_best: C1_best,
    ConstantKind.c1_weak: c1_weak,
    ConstantKind.C1_weak: C1_weak,
    ConstantKind.c1_cont: lambda q: continuous_constants(q).c1,
    ConstantKind.C1_cont: lambda q: continuous_constants(q).C1,
    ConstantKind.c1_weak_cont: lambda q: continuous_constants(q).c1_weak,
    ConstantKind.C1_weak_cont: lambda q: continuous_constants(q).C1_weak,
    ConstantKind.copson: copson,
    ConstantKind.levin_stechkin: levin_stechkin,
    ConstantKind.stechkin_choice: stechkin_choice,
    ConstantKind.improved: improved,
    ConstantKind.gao_exact: gao_exact,
}


def evaluate(kind, q) -> CertifiedValue:
    """Evaluate a catalog entry by kind (enum member or tag string)"""
    if not isinstance(kind, ConstantKind):
        try:
            kind = ConstantKind(kind)
        except ValueError:
            raise DomainError(f"unknown constant '{kind}'")
    if kind in (ConstantKind.C1_best, ConstantKind.C1_weak):
        q = Exponent.of(q, allow_one=True)
    return _DISPATCH[kind](q)
