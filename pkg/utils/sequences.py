"""
Core data types: exponents, monotone sequences and suffix power tables.
"""

import math
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

import numpy as np

from utils.summation import backward_suffix_sums
from utils.validation import DomainError, parse_exponent_text, require, validate_exponent, validate_monotone

logger = logging.getLogger(__name__)


class ExponentKind(Enum):
    FINITE = 'finite'
    INFINITE = 'infinite'
    ONE = 'one'


@dataclass(frozen=True)
class Exponent:
    """
    An exponent q in (1, inf] together with its Hölder conjugate q'.

    q = inf and the closure point q = 1 are distinguished states rather than
    extreme floats. Both q and q' are stored, so conjugation is exact.
    """
    value: float
    conj: float
    kind: ExponentKind = ExponentKind.FINITE

    @classmethod
    def of(cls, q: Union['Exponent', float, str], allow_one: bool = False) -> 'Exponent':
        if isinstance(q, Exponent):
            if q.is_one and not allow_one:
                raise DomainError("q = 1 is not admitted by this operation")
            return q
        if isinstance(q, str):
            q = parse_exponent_text(q)
        q = float(q)
        if math.isnan(q):
            raise DomainError("q must be a number")
        if math.isinf(q) and q > 0:
            return cls(math.inf, 1.0, ExponentKind.INFINITE)
        if q == 1.0 and allow_one:
            return cls(1.0, math.inf, ExponentKind.ONE)
        require(validate_exponent(q), f"q must lie in (1, inf], got {q}")
        return cls(q, q / (q - 1.0), ExponentKind.FINITE)

    @property
    def is_infinite(self) -> bool:
        return self.kind is ExponentKind.INFINITE

    @property
    def is_one(self) -> bool:
        return self.kind is ExponentKind.ONE

    @property
    def is_finite(self) -> bool:
        return self.kind is not ExponentKind.INFINITE

    @property
    def reciprocal(self) -> float:
        """1/q, with 1/inf = 0"""
        return 0.0 if self.is_infinite else 1.0 / self.value

    @property
    def conj_reciprocal(self) -> float:
        """1/q' = 1 - 1/q"""
        return 0.0 if self.is_one else 1.0 / self.conj

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return 'inf' if self.is_infinite else f"{self.value:g}"


ExponentLike = Union[Exponent, float, str]


def conjugate(q: ExponentLike) -> Exponent:
    """Hölder conjugate q' = q/(q-1); inf <-> 1 (flagged)"""
    q = Exponent.of(q, allow_one=isinstance(q, Exponent))
    if q.is_infinite:
        return Exponent(1.0, math.inf, ExponentKind.ONE)
    if q.is_one:
        return Exponent(math.inf, 1.0, ExponentKind.INFINITE)
    return Exponent(q.conj, q.value, ExponentKind.FINITE)


def _readonly(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MonotoneSequence:
    """Finite nonincreasing sequence a_1 >= ... >= a_N >= 0, N >= 1"""
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _readonly(np.ravel(np.asarray(self.entries, dtype=float)))
        if not validate_monotone(arr):
            require(arr.size >= 1, "a sequence needs at least one entry")
            require(bool(np.all(np.isfinite(arr))), "entries must be finite")
            require(bool(np.all(arr >= 0.0)), "entries must be nonnegative")
            raise DomainError("entries must be nonincreasing")
        object.__setattr__(self, 'entries', arr)

    @classmethod
    def flat(cls, k0: int, total: float = 1.0) -> 'MonotoneSequence':
        """The simplex vertex (total/k0, ..., total/k0)"""
        require(k0 >= 1, "k0 must be at least 1")
        return cls(np.full(k0, total / k0))

    @classmethod
    def harmonic(cls, length: int) -> 'MonotoneSequence':
        require(length >= 1, "length must be at least 1")
        return cls(1.0 / np.arange(1, length + 1, dtype=float))

    def __len__(self) -> int:
        return int(self.entries.size)

    def __getitem__(self, n: int) -> float:
        """1-based access, a[n] = a_n"""
        if not 1 <= n <= len(self):
            raise IndexError(n)
        return float(self.entries[n - 1])

    def scaled(self, t: float) -> 'MonotoneSequence':
        require(t >= 0, "scale must be nonnegative")
        return MonotoneSequence(self.entries * t)

    def tolist(self):
        return self.entries.tolist()


def rearrange(xs: Iterable[float]) -> MonotoneSequence:
    """Non-increasing rearrangement of |xs|"""
    arr = np.abs(np.asarray(list(xs), dtype=float))
    require(arr.size >= 1, "cannot rearrange an empty list")
    return MonotoneSequence(np.sort(arr)[::-1])


class PowerOverflowError(OverflowError):
    """a_k^q is not representable in binary64"""


@dataclass(frozen=True)
class SuffixPowerTable:
    """
    values[n-1] = sum_{k=n}^{N} a_k^q for n = 1..N+1 (stored 0-based, last entry 0).

    For q = inf the table holds the suffix suprema, i.e. values[n-1] = a_n.
    """
    values: tuple
    exponent: Exponent

    def at(self, n: int) -> float:
        """1-based lookup, at(N + 1) == 0"""
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)


def suffix_power_table(a: MonotoneSequence, q: ExponentLike) -> SuffixPowerTable:
    q = Exponent.of(q, allow_one=True)
    if q.is_infinite:
        return SuffixPowerTable(tuple(a.tolist()) + (0.0,), q)
    with np.errstate(over='ignore'):
        powers = a.entries ** q.value
    if np.any(np.isinf(powers)):
        bad = int(np.argmax(np.isinf(powers))) + 1
        raise PowerOverflowError(f"a_{bad}^q overflows for q = {q}")
    values = backward_suffix_sums(powers.tolist())
    logger.debug("suffix table built: N=%d q=%s total=%r", len(a), q, values[0])
    return SuffixPowerTable(tuple(values), q)
