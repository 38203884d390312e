"""
Bracketing root finder and golden-section minimiser with certified brackets.

Both return the final bracket, so the caller gets the midpoint and the
half-width as a CertifiedValue instead of a bare float.
"""

import math
import logging
from dataclasses import dataclass
from typing import Callable

from utils.certified import CertifiedValue, widen
from utils.validation import DomainError

logger = logging.getLogger(__name__)

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class BracketError(DomainError):
    """No sign change (or no interior minimum) on the supplied bracket"""


@dataclass(frozen=True)
class BracketResult:
    lo: float
    hi: float
    iterations: int

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.hi - self.lo)

    def certified(self) -> CertifiedValue:
        return CertifiedValue(self.midpoint, widen(self.half_width))


def bisect(f: Callable[[float], float], lo: float, hi: float,
           half_width: float = 1e-8, max_iter: int = 200, name: str = 'root') -> BracketResult:
    """Bisection on [lo, hi]; requires f(lo) and f(hi) of opposite sign"""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return BracketResult(lo, lo, 0)
    if fhi == 0.0:
        return BracketResult(hi, hi, 0)
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"{name}: no sign change on [{lo}, {hi}] (f={flo:.3g}, {fhi:.3g})")
    iterations = 0
    while 0.5 * (hi - lo) > half_width and iterations < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        iterations += 1
        if fmid == 0.0:
            return BracketResult(mid, mid, iterations)
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    logger.debug("%s: bracket [%r, %r] after %d steps", name, lo, hi, iterations)
    return BracketResult(lo, hi, iterations)


def golden_section_min(f: Callable[[float], float], lo: float, hi: float,
                       half_width: float = 1e-6, max_iter: int = 500,
                       name: str = 'minimum') -> BracketResult:
    """Golden-section search for the minimiser of a unimodal f on [lo, hi]"""
    c = hi - INVPHI * (hi - lo)
    d = lo + INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    iterations = 0
    while 0.5 * (hi - lo) > half_width and iterations < max_iter:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INVPHI * (hi - lo)
            fd = f(d)
        iterations += 1
    logger.debug("%s: bracket [%r, %r] after %d steps", name, lo, hi, iterations)
    return BracketResult(lo, hi, iterations)
