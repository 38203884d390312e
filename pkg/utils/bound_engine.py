"""
Upper bounds on C1(q) from auxiliary sequences.

For a strictly increasing b with b_0 = 0,

    C1(q) <= C_b(q) = sup_n ( n^(q'/q) (b_n - b_{n-1})^q' sum_{k>=n} b_k^(-q') )^(1/q')

With b_k = (k(k+1))^p the bracket is A_n, and

    A_n <= A'_n^q' / (2q'p - 1),   A'_n = ((n+1)^p - (n-1)^p) / n^(p-1),

where A'_n is nonincreasing. So the supremum over n >= N is bounded by the
envelope at N, and only finitely many A_n need to be computed.

Inner series are truncated at M. The remainder sum_{k>M} (k(k+1))^(-q'p) is
at most M^(1-2q'p) / (2q'p - 1), and that bound is carried into every term.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from config import BOUND_SETTINGS
from utils.certified import CertifiedValue, rounding_error, widen
from utils.constants import IMPROVED_BASE, LN2, Q_IMPROVED
from utils.sequences import Exponent, ExponentLike
from utils.summation import backward_suffix_sums
from utils.validation import DomainError, require

logger = logging.getLogger(__name__)

EPS = float(np.finfo(float).eps)
# lambda = q'p minimising 2^lambda / (2 lambda - 1)
LAMBDA_STAR = (2.0 + LN2) / math.log(4.0)


def a_prime(p: float, n) -> np.ndarray:
    """A'_n = ((n+1)^p - (n-1)^p) / n^(p-1), evaluated without cancellation"""
    n = np.asarray(n, dtype=float)
    if p == 1.0:
        return np.full(n.shape, 2.0)
    x = 1.0 / n
    with np.errstate(divide='ignore'):
        plus = np.expm1(p * np.log1p(x))
        minus = np.expm1(p * np.log1p(-x))
    return n * (plus - minus)


def envelope(q: ExponentLike, p: float, n) -> np.ndarray:
    """Upper bound A'_n (2q'p - 1)^(-1/q') on A_m^(1/q') for every m >= n"""
    q = Exponent.of(q)
    return a_prime(p, n) * (2.0 * q.conj * p - 1.0) ** (-q.conj_reciprocal)


def _power_increment(p: float):
    def increment(n: np.ndarray) -> np.ndarray:
        # (n(n+1))^p - (n(n-1))^p = n^p ((n+1)^p - (n-1)^p)
        return n ** p * a_prime(p, n) * n ** (p - 1.0)
    return increment


@dataclass(frozen=True, eq=False)
class AuxSequence:
    """
    Auxiliary sequence b_n, n >= 0, given as a vectorised generator.

    tail_bound(q', M) must bound sum_{k>M} b_k^(-q') from above. envelope,
    when present, maps (q, n) to an upper bound on the bracket's 1/q'-th
    power for all indices >= n.
    """
    generator: Callable[[np.ndarray], np.ndarray]
    p: Optional[float] = None
    tail_bound: Optional[Callable[[float, int], float]] = None
    increment: Optional[Callable[[np.ndarray], np.ndarray]] = None
    envelope: Optional[Callable[[Exponent, int], float]] = None
    spot_check: int = field(default=BOUND_SETTINGS['MONOTONE_SPOT_CHECK'])

    def __post_init__(self):
        n = np.arange(0, self.spot_check + 1, dtype=float)
        b = np.asarray(self.generator(n), dtype=float)
        require(b[0] == 0.0, "b_0 must be 0")
        require(bool(np.all(np.diff(b) > 0.0)), "b must be strictly increasing")

    @classmethod
    def power_family(cls, p: float) -> 'AuxSequence':
        """b_k = (k(k+1))^p"""
        require(0.0 < p <= 1.0, f"p must lie in (0, 1], got {p}")

        def tail(conj: float, m: int) -> float:
            s = conj * p
            return m ** (1.0 - 2.0 * s) / (2.0 * s - 1.0)

        return cls(
            generator=lambda n: (n * (n + 1.0)) ** p,
            p=p,
            tail_bound=tail,
            increment=_power_increment(p),
            envelope=lambda q, n: float(envelope(q, p, n)),
        )

    def __call__(self, n) -> np.ndarray:
        return np.asarray(self.generator(np.asarray(n, dtype=float)), dtype=float)

    def differences(self, n: np.ndarray) -> np.ndarray:
        if self.increment is not None:
            return self.increment(n)
        return self(n) - self(n - 1.0)


@dataclass(frozen=True)
class BoundReport:
    q: Exponent
    terms: List[CertifiedValue]
    supremum: CertifiedValue
    tail_majorant: Optional[CertifiedValue]
    truncation_error: float
    argmax: Optional[int] = None
    p: Optional[float] = None
    n_terms: int = 0
    m: int = 0
    reference_estimate: Optional[float] = None

    @property
    def attained_in_tail(self) -> bool:
        return self.argmax is None and self.tail_majorant is not None


def _check_power_parameter(q: Exponent, p: Optional[float]):
    if p is None:
        return
    if p <= 1.0 / (2.0 * q.conj):
        raise DomainError(f"inner series diverge: p = {p} <= 1/(2q') = {1.0 / (2.0 * q.conj):.6g}")


def _brackets(q: Exponent, b: AuxSequence, n_max: int, m: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Lower and upper enclosures of A_1..A_nmax and the remainder bound per term"""
    require(n_max >= 1, "need at least one term")
    require(m >= n_max, f"truncation point M = {m} must be at least {n_max}")
    _check_power_parameter(q, b.p)
    if b.tail_bound is None:
        raise DomainError("auxiliary sequence needs a tail bound for certified truncation")

    k = np.arange(1, m + 1, dtype=float)
    weights = b(k) ** -q.conj
    suffix = np.asarray(backward_suffix_sums(weights.tolist())[:n_max])
    tail = b.tail_bound(q.conj, m)

    n = np.arange(1, n_max + 1, dtype=float)
    prefactor = n ** (q.conj / q.value) * b.differences(n) ** q.conj
    lower = prefactor * suffix * (1.0 - 8.0 * EPS)
    upper = prefactor * (suffix + tail) * (1.0 + 8.0 * EPS)
    logger.debug("brackets: q=%s n_max=%d M=%d remainder bound=%.3g", q, n_max, m, tail)
    return lower, upper, prefactor * tail


def a_n_terms(q: ExponentLike, p: float, n_max: int, m: int) -> List[CertifiedValue]:
    """A_n for b_k = (k(k+1))^p, n = 1..n_max, with certified truncation"""
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    require(p <= 1.0, f"p must be at most 1, got {p}")
    _check_power_parameter(q, p)
    lower, upper, _ = _brackets(q, AuxSequence.power_family(p), n_max, m)
    return [CertifiedValue.from_interval(lo, hi) for lo, hi in zip(lower, upper)]


def c_b(q: ExponentLike, b: AuxSequence, n_terms: int = BOUND_SETTINGS['N_TERMS'],
        m: int = BOUND_SETTINGS['M']) -> BoundReport:
    """
    Certified evaluation of C_b(q).

    Terms n = 1..n_terms are computed; when b has an envelope the supremum
    over n >= n_terms is bounded by its value at n_terms, which gives
    max(max_{n < N} A_n^(1/q'), envelope(N)) with N = n_terms.
    """
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    lower, upper, _ = _brackets(q, b, n_terms, m)
    root = q.conj_reciprocal
    lo_root, hi_root = lower ** root, upper ** root
    terms = []
    for lo, hi in zip(lo_root, hi_root):
        cv = CertifiedValue.from_interval(lo, hi)
        terms.append(CertifiedValue(cv.value, widen(cv.err + rounding_error(cv.value))))
    truncation_error = widen(float(np.max(hi_root - lo_root)))

    values = np.array([t.value for t in terms])
    best = int(np.argmax(values))
    supremum, argmax = terms[best], best + 1

    tail_majorant = None
    if b.envelope is not None:
        tail_majorant = CertifiedValue.closed_form(b.envelope(q, n_terms))
        if tail_majorant.value >= supremum.value:
            supremum, argmax = tail_majorant, None
    else:
        logger.warning("no envelope for this auxiliary sequence: supremum covers n <= %d only", n_terms)

    reference = None
    if b.p is not None:
        s = q.conj * b.p
        exponent = q.conj / q.value + 2.0 * b.p * q.conj - q.conj
        reference = n_terms ** exponent * m ** (1.0 - 2.0 * s)

    logger.info("C_b(%s): sup %.10f at %s, truncation certificate %.3g",
                q, supremum.value, argmax if argmax is not None else 'tail', truncation_error)
    return BoundReport(
        q=q, terms=terms, supremum=supremum, tail_majorant=tail_majorant,
        truncation_error=truncation_error, argmax=argmax, p=b.p,
        n_terms=n_terms, m=m, reference_estimate=reference,
    )


def corollary_bound(p: float = BOUND_SETTINGS['P'], n_terms: int = BOUND_SETTINGS['N_TERMS'],
                    m: int = BOUND_SETTINGS['M'], q: ExponentLike = BOUND_SETTINGS['Q']) -> BoundReport:
    """C_b(q) for b_k = (k(k+1))^p; defaults give C1(2) <= 1.1086983"""
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    _check_power_parameter(q, p)
    return c_b(q, AuxSequence.power_family(p), n_terms, m)


def optimize_p(q: ExponentLike) -> Tuple[float, CertifiedValue]:
    """
    Best p for b_k = (k(k+1))^p using the envelope at n = 1.

    With lambda = q'p the bound 2^p (2q'p - 1)^(-1/q') becomes
    (2^lambda / (2 lambda - 1))^(1/q'), minimised at lambda = (2 + ln 2)/ln 4.
    """
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    if q.value > Q_IMPROVED:
        raise DomainError(f"optimal p exceeds 1 for q > {Q_IMPROVED:.6g}")
    p_star = LAMBDA_STAR / q.conj
    if abs(p_star - 1.0) <= 4.0 * EPS:
        p_star = 1.0
    bound = 2.0 ** p_star / (2.0 * q.conj * p_star - 1.0) ** q.conj_reciprocal
    logger.debug("optimize_p(%s): p*=%r bound=%r closed form=%r",
                 q, p_star, bound, IMPROVED_BASE ** q.conj_reciprocal)
    return p_star, CertifiedValue.closed_form(bound)
