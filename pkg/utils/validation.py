import math
import logging
from typing import Sequence

import numpy as np

logger = logging.getLogger(__name__)


class DomainError(ValueError):
    """Argument outside the domain of an operation"""


def validate_positive_number(value, allow_zero=False):
    """Validate positive finite number"""
    try:
        val = float(value)
        if math.isnan(val):
            return False
        if allow_zero:
            return val >= 0
        return val > 0
    except (ValueError, TypeError):
        return False


def validate_exponent(q, allow_one=False):
    """Validate an exponent in (1, inf], or [1, inf] when allow_one is set"""
    try:
        val = float(q)
    except (ValueError, TypeError):
        return False
    if math.isnan(val):
        return False
    return val >= 1.0 if allow_one else val > 1.0


def validate_monotone(entries: Sequence[float]):
    """Validate a nonempty nonincreasing sequence of nonnegative finite reals"""
    arr = np.asarray(entries, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        return False
    if not np.all(np.isfinite(arr)) or arr[-1] < 0.0:
        return False
    return bool(np.all(np.diff(arr) <= 0.0))


def parse_exponent_text(text):
    """Parse a CLI exponent such as '2', '1.5', 'inf' or '∞'"""
    cleaned = str(text).strip().lower()
    if cleaned in ('inf', 'infinity', '∞', '+inf'):
        return math.inf
    try:
        return float(cleaned)
    except ValueError:
        raise DomainError(f"cannot parse exponent '{text}'")


def require(condition, message):
    if not condition:
        logger.debug("domain check failed: %s", message)
        raise DomainError(message)
