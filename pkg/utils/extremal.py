"""
Extremal sequences for the discrete constants.

  - flat vertices (1/k0, ..., 1/k0) of the monotone simplex for c1(q);
  - the harmonic sequence 1/n for c1_weak(q);
  - flat sequences of length N for C1_weak(q).
"""

import math
import logging
from typing import NamedTuple

import numpy as np
from scipy.signal import fftconvolve

from utils.functionals import weak_gamma
from utils.sequences import Exponent, ExponentLike, MonotoneSequence
from utils.validation import require

logger = logging.getLogger(__name__)

# Above this length the k0 sweep switches from direct sums to one FFT convolution
DIRECT_SWEEP_LIMIT = 10_000


class ExtremalResult(NamedTuple):
    value: float
    argmax: int


class ExtremalMismatch(AssertionError):
    """A computed maximiser disagrees with the analytic one"""


def _finite_exponent(q: ExponentLike) -> Exponent:
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    return q


def vertex_sum(q: ExponentLike, k0: int) -> float:
    """gamma of the flat vertex: sum_{n<=k0} n^(-1/q) (k0-n+1)^(1/q) / k0"""
    q = _finite_exponent(q)
    require(k0 >= 1, "k0 must be at least 1")
    n = np.arange(1, k0 + 1, dtype=float)
    r = q.reciprocal
    return float(np.sum(n ** -r * (k0 - n + 1.0) ** r)) / k0


def vertex_sweep(q: ExponentLike, k_max: int) -> np.ndarray:
    """vertex_sum(q, k0) for k0 = 1..k_max (entry k0-1)"""
    q = _finite_exponent(q)
    require(k_max >= 1, "k_max must be at least 1")
    if k_max <= DIRECT_SWEEP_LIMIT:
        return np.array([vertex_sum(q, k) for k in range(1, k_max + 1)])
    # sum_n n^(-1/q) (k+1-n)^(1/q) is the k-th entry of a discrete convolution
    idx = np.arange(1, k_max + 1, dtype=float)
    r = q.reciprocal
    conv = fftconvolve(idx ** -r, idx ** r)[:k_max]
    return conv / idx


def vertex_antiderivative(k0: int) -> float:
    """(k0+1) pi/2 - sqrt(k0) - (k0+1) arctan(k0^(-1/2)), the q = 2 integral over [1, k0+1]"""
    return (k0 + 1.0) * math.pi / 2.0 - math.sqrt(k0) - (k0 + 1.0) * math.atan(1.0 / math.sqrt(k0))


def integral_brackets(k0: int):
    """
    Lower and upper integral estimates of vertex_sum(2, k0).

    g(t) = t^(-1/2) (k0 - t + 1)^(1/2) / k0 is decreasing, so
    int_1^{k0+1} g <= sum g(n) <= g(1) + int_1^{k0} g.
    """
    require(k0 >= 1, "k0 must be at least 1")
    root = math.sqrt(k0)
    f_k0 = vertex_antiderivative(k0) / k0
    h_k0 = 1.0 / root + (k0 + 1.0) * (math.atan(root) - math.atan(1.0 / root)) / k0
    return f_k0, h_k0


def weak_lower_extremal(q: ExponentLike, K: int) -> ExtremalResult:
    """weak_gamma on the truncated harmonic sequence (1/n)_{n<=K}"""
    q = _finite_exponent(q)
    require(q.value > 1.0 + 1e-3, "q too close to 1")
    result = weak_gamma(MonotoneSequence.harmonic(K), q)
    return ExtremalResult(result.value, result.attained_at)


def weak_upper_extremal(q: ExponentLike, N: int) -> ExtremalResult:
    """weak_gamma on the flat sequence (1/N, ..., 1/N)"""
    q = _finite_exponent(q)
    result = weak_gamma(MonotoneSequence.flat(N), q)
    x = (N + 1) * q.conj_reciprocal
    allowed = {math.floor(x), math.ceil(x)}
    if result.attained_at not in allowed:
        raise ExtremalMismatch(
            f"flat sequence N={N}, q={q}: maximiser {result.attained_at} not in {sorted(allowed)}")
    return ExtremalResult(result.value, result.attained_at)


def simplex_vertex_search(q: ExponentLike, N: int) -> ExtremalResult:
    """Largest gamma/ell1 over the monotone simplex on N coordinates (attained at a vertex)"""
    require(1 <= N <= 1_000_000, "N must lie in [1, 1e6]")
    sums = vertex_sweep(q, N)
    best = int(np.argmax(sums))
    logger.debug("vertex search q=%s N=%d: best k0=%d", q, N, best + 1)
    return ExtremalResult(float(sums[best]), best + 1)


def random_simplex_points(N: int, count: int, seed: int) -> np.ndarray:
    """
    Uniform convex combinations of the N flat vertices.

    Row i is a nonincreasing point with unit l1 norm: a_n = sum_{k>=n} w_k / k
    for weights w from sorted uniform spacings.
    """
    require(N >= 1 and count >= 0, "need N >= 1 and count >= 0")
    rng = np.random.default_rng(seed)
    cuts = np.sort(rng.random((count, N - 1)), axis=1)
    padded = np.hstack([np.zeros((count, 1)), cuts, np.ones((count, 1))])
    weights = np.diff(padded, axis=1)
    scaled = weights / np.arange(1, N + 1, dtype=float)
    return np.cumsum(scaled[:, ::-1], axis=1)[:, ::-1]
