"""
The four sides of the discrete Stechkin inequalities.

  ell1(a)        = sum a_n
  gamma(a, q)    = sum_n ((1/n) sum_{k>=n} a_k^q)^(1/q)
  weak_ell1(a)   = sup_n n a_n
  weak_gamma(a,q)= sup_n n ((1/n) sum_{k>=n} a_k^q)^(1/q)

For q = inf the inner mean is replaced by sup_{k>=n} a_k = a_n, so gamma and
weak_gamma reduce to ell1 and weak_ell1.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from utils.sequences import Exponent, ExponentLike, MonotoneSequence, suffix_power_table
from utils.summation import compensated_sum

logger = logging.getLogger(__name__)

# Relative gap below which two candidates of a supremum count as tied
TIE_RTOL = 1e-14


@dataclass(frozen=True)
class FunctionalValue:
    value: float
    attained_at: Optional[int] = None

    def __float__(self) -> float:
        return self.value


def _first_maximizer(candidates: np.ndarray) -> FunctionalValue:
    """Supremum of a finite candidate list, ties broken to the smallest index"""
    vmax = float(np.max(candidates))
    threshold = vmax - TIE_RTOL * abs(vmax)
    n = int(np.argmax(candidates >= threshold)) + 1
    return FunctionalValue(vmax, n)


def ell1(a: MonotoneSequence) -> FunctionalValue:
    return FunctionalValue(compensated_sum(a.tolist()))


def gamma(a: MonotoneSequence, q: ExponentLike) -> FunctionalValue:
    """Strong Stechkin functional; a flagged q = 1 gives sum (1/n) sum_{k>=n} a_k"""
    q = Exponent.of(q, allow_one=isinstance(q, Exponent))
    if q.is_infinite:
        return ell1(a)
    table = suffix_power_table(a, q)
    suffix = np.asarray(table.values[:-1])
    n = np.arange(1, len(a) + 1, dtype=float)
    terms = (suffix / n) ** q.reciprocal
    return FunctionalValue(compensated_sum(terms.tolist()))


def weak_ell1(a: MonotoneSequence) -> FunctionalValue:
    n = np.arange(1, len(a) + 1, dtype=float)
    return _first_maximizer(n * a.entries)


def weak_gamma(a: MonotoneSequence, q: ExponentLike) -> FunctionalValue:
    q = Exponent.of(q)
    if q.is_infinite:
        return weak_ell1(a)
    table = suffix_power_table(a, q)
    suffix = np.asarray(table.values[:-1])
    n = np.arange(1, len(a) + 1, dtype=float)
    candidates = n ** q.conj_reciprocal * suffix ** q.reciprocal
    result = _first_maximizer(candidates)
    logger.debug("weak_gamma: N=%d q=%s sup at n=%d", len(a), q, result.attained_at)
    return result
