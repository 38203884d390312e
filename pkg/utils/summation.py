"""
Compensated summation.

Neumaier's variant of Kahan summation: a running sum plus a correction term
that collects the low-order bits lost in each addition.
"""

from typing import Iterable, List, Sequence


def two_sum(u: float, v: float):
    """Error-free transformation: u + v == s + t exactly"""
    s = u + v
    up = s - v
    vpp = s - up
    up -= u
    vpp -= v
    return s, -(up + vpp)


class CompensatedSum:
    """Running sum with a compensation term, like math.fsum but incremental"""

    __slots__ = ('_s', '_c')

    def __init__(self, start: float = 0.0):
        self._s = float(start)
        self._c = 0.0

    def add(self, y: float) -> 'CompensatedSum':
        s, t = two_sum(self._s, float(y))
        self._s = s
        self._c += t
        return self

    @property
    def value(self) -> float:
        return self._s + self._c

    def __float__(self) -> float:
        return self.value


def compensated_sum(values: Iterable[float]) -> float:
    acc = CompensatedSum()
    for v in values:
        acc.add(v)
    return acc.value


def backward_suffix_sums(values: Sequence[float]) -> List[float]:
    """
    Suffix sums out[i] = sum(values[i:]) in one backward pass.

    The returned list has len(values) + 1 entries; the last one is 0.
    Smallest terms of a nonincreasing input are added first.
    """
    out = [0.0] * (len(values) + 1)
    acc = CompensatedSum()
    for i in range(len(values) - 1, -1, -1):
        acc.add(values[i])
        # rounding must not break monotonicity of the table
        out[i] = max(acc.value, out[i + 1])
    return out
