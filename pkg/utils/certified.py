"""
Certified values: a float paired with a rigorous error radius.

Error terms are widened by the factor 1 + 2^-40 whenever they are combined so
that rounding in the bookkeeping itself cannot shrink an enclosure.
"""

import math
from dataclasses import dataclass
from typing import Callable

from config import NUMERIC_SETTINGS

OUTWARD = NUMERIC_SETTINGS['OUTWARD_FACTOR']


def widen(err: float) -> float:
    return err * OUTWARD


def rounding_error(value: float, ulps: int = NUMERIC_SETTINGS['CLOSED_FORM_ULPS']) -> float:
    """Error radius for a closed form evaluated with a handful of libm calls"""
    if math.isinf(value):
        return 0.0
    return widen(ulps * math.ulp(abs(value)))


@dataclass(frozen=True)
class CertifiedValue:
    value: float
    err: float = 0.0

    def __post_init__(self):
        if not (self.err >= 0.0):
            raise ValueError(f"error radius must be nonnegative, got {self.err}")

    @classmethod
    def closed_form(cls, value: float) -> 'CertifiedValue':
        return cls(value, rounding_error(value))

    @classmethod
    def from_interval(cls, lo: float, hi: float) -> 'CertifiedValue':
        if lo > hi:
            lo, hi = hi, lo
        mid = 0.5 * (lo + hi)
        return cls(mid, widen(max(hi - mid, mid - lo)))

    @property
    def lower(self) -> float:
        return self.value - self.err

    @property
    def upper(self) -> float:
        return self.value + self.err

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def map_monotone(self, fn: Callable[[float], float]) -> 'CertifiedValue':
        """Image under a monotone function, enclosed by the endpoint images"""
        # nonnegative quantities keep a nonnegative lower endpoint
        lower = max(self.lower, 0.0) if self.value >= 0 else self.lower
        lo, hi = fn(lower), fn(self.upper)
        out = CertifiedValue.from_interval(lo, hi)
        return CertifiedValue(out.value, widen(out.err + rounding_error(out.value)))

    def power(self, exponent: float) -> 'CertifiedValue':
        return self.map_monotone(lambda x: x ** exponent)

    def __str__(self) -> str:
        return f"{self.value:.15g} ± {self.err:.2g}"
