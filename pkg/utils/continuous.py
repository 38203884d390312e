"""
Continuous Stechkin inequalities on nonincreasing step functions.

For f = v_i on (t_{i-1}, t_i] (t_0 = 0) the inner integral is exact:

    G(t) = int_t^inf f^q = v_i^q (t_i - t) + R_i,   R_i = sum_{j>i} v_j^q (t_j - t_{j-1})

so only the outer integral int_0^inf (G(t)/t)^(1/q) dt needs quadrature.
On the first panel t = s^q' turns the t^(-1/q) singularity into the bounded
integrand q' G(s^q')^(1/q). Panels where G reaches 0 use QUADPACK's
algebraic end-point weight.
"""

import math
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Union

import numpy as np
from scipy.integrate import quad
from scipy.special import beta, betainc

from config import NUMERIC_SETTINGS, VERIFY_SETTINGS
from utils.certified import CertifiedValue, rounding_error, widen
from utils.constants import continuous_constants
from utils.sequences import Exponent, ExponentLike
from utils.summation import backward_suffix_sums, compensated_sum
from utils.validation import require

logger = logging.getLogger(__name__)


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance"""

    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved error {achieved:.3g})")
        self.achieved = achieved


def _readonly(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class StepFunction:
    """f = levels[i] on (breakpoints[i-1], breakpoints[i]], 0 beyond the last breakpoint"""
    breakpoints: np.ndarray
    levels: np.ndarray

    def __post_init__(self):
        t = _readonly(self.breakpoints)
        v = _readonly(self.levels)
        require(t.ndim == 1 and t.size >= 1, "a step function needs at least one step")
        require(t.shape == v.shape, "breakpoints and levels differ in length")
        require(bool(np.all(np.isfinite(t)) and np.all(np.isfinite(v))), "steps must be finite")
        require(bool(t[0] > 0.0 and np.all(np.diff(t) > 0.0)),
                "breakpoints must be positive and strictly increasing")
        require(bool(np.all(v >= 0.0)), "levels must be nonnegative")
        require(bool(np.all(np.diff(v) <= 0.0)), "levels must be nonincreasing")
        object.__setattr__(self, 'breakpoints', t)
        object.__setattr__(self, 'levels', v)

    @classmethod
    def single_step(cls, T: float) -> 'StepFunction':
        """(1/T) chi_(0,T), the extremal for every continuous constant"""
        require(T > 0.0, "T must be positive")
        return cls([T], [1.0 / T])

    def __len__(self) -> int:
        return int(self.breakpoints.size)

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.breakpoints, prepend=0.0)

    def __call__(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        idx = np.searchsorted(self.breakpoints, t, side='left')
        padded = np.append(self.levels, 0.0)
        return np.where(t > 0.0, padded[idx], padded[0])

    def __add__(self, other: 'StepFunction') -> 'StepFunction':
        merged = np.union1d(self.breakpoints, other.breakpoints)
        return StepFunction(merged, self(merged) + other(merged))

    def scaled(self, factor: float) -> 'StepFunction':
        require(factor >= 0.0, "scale factor must be nonnegative")
        return StepFunction(self.breakpoints, self.levels * factor)


@dataclass(frozen=True)
class PowerLaw:
    """f(t) = scale / t"""
    scale: float = 1.0


def integral(f: StepFunction) -> float:
    return compensated_sum((f.levels * f.widths).tolist())


class _Panel(NamedTuple):
    lo: float
    hi: float
    c: float
    d: float
    rest: float


def _panels(f: StepFunction, q: Exponent) -> List[_Panel]:
    """Panels with G(t) = c - d t; panels where f vanishes are dropped"""
    powers = f.levels ** q.value
    require(bool(np.all(np.isfinite(powers))), "levels^q overflows")
    masses = powers * f.widths
    rest = backward_suffix_sums(masses.tolist())
    panels = []
    lo = 0.0
    for i, hi in enumerate(f.breakpoints):
        d = float(powers[i])
        if d > 0.0:
            r = rest[i + 1]
            panels.append(_Panel(lo, float(hi), d * float(hi) + r, d, r))
        lo = float(hi)
    return panels


def _integrate(func, lo: float, hi: float, quad_tol: float, **kwargs):
    result = quad(func, lo, hi, epsabs=quad_tol, epsrel=quad_tol,
                  limit=NUMERIC_SETTINGS['QUAD_LIMIT'], full_output=1, **kwargs)
    value, abserr = result[0], result[1]
    if len(result) > 3:
        if abserr > NUMERIC_SETTINGS['QUAD_ACCEPT'] * max(1.0, abs(value)):
            raise QuadratureError(f"panel ({lo:g}, {hi:g}): {result[3]}", abserr)
        logger.warning(f"quadrature on ({lo:g}, {hi:g}) stopped early, error estimate {abserr:.3g}")
    return value, abserr


def _first_panel(panel: _Panel, q: Exponent, quad_tol: float):
    """int_0^hi (G(t)/t)^(1/q) dt with t = s^q'"""
    qc, r = q.conj, q.reciprocal
    b = panel.hi ** q.conj_reciprocal
    if panel.rest > 0.0:
        def integrand(s):
            return qc * max(panel.c - panel.d * s ** qc, 0.0) ** r
        return _integrate(integrand, 0.0, b, quad_tol)

    # G(s^q') = d (b^q' - s^q'), and (b^q' - s^q') / (b - s) is smooth on [0, b]
    def smooth_part(s):
        delta = b - s
        if s <= 0.0:
            ratio = panel.hi / b
        elif delta <= 0.0:
            ratio = qc * b ** (qc - 1.0)
        else:
            ratio = s ** qc * math.expm1(qc * math.log1p(delta / s)) / delta
        return qc * (panel.d * ratio) ** r
    return _integrate(smooth_part, 0.0, b, quad_tol, weight='alg', wvar=(0.0, r))


def _inner_panel(panel: _Panel, q: Exponent, quad_tol: float):
    r = q.reciprocal
    if panel.rest > 0.0:
        def integrand(t):
            return (max(panel.c - panel.d * t, 0.0) / t) ** r
        return _integrate(integrand, panel.lo, panel.hi, quad_tol)

    # G(t) = d (hi - t): weight (hi - t)^(1/q)
    scale = panel.d ** r
    return _integrate(lambda t: scale * t ** -r, panel.lo, panel.hi, quad_tol,
                      weight='alg', wvar=(0.0, r))


def strong_cont_lhs(f: StepFunction, q: ExponentLike,
                    quad_tol: float = NUMERIC_SETTINGS['QUAD_TOLERANCE']) -> CertifiedValue:
    """
    int_0^inf ((1/t) int_t^inf f^q)^(1/q) dt for a step function f.

    The error radius is the sum of QUADPACK's per-panel error estimates.
    """
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    values, errors = [], []
    for panel in _panels(f, q):
        if panel.lo == 0.0:
            value, abserr = _first_panel(panel, q, quad_tol)
        else:
            value, abserr = _inner_panel(panel, q, quad_tol)
        values.append(value)
        errors.append(abserr)
    total = compensated_sum(values)
    logger.debug("strong_cont_lhs: %d panels, q=%s, value %.15g", len(values), q, total)
    return CertifiedValue(total, widen(sum(errors) + rounding_error(total)))


def strong_cont_beta(f: StepFunction, q: ExponentLike) -> float:
    """
    Same integral through incomplete beta functions, for cross-checking.

    On a panel (c - d t)/t = d (T - t)/t with T = c/d, and t = T x gives
    d^(1/q) T B(1-1/q, 1+1/q) [I_x(1-1/q, 1+1/q)] between the panel ends.
    """
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    a, b_ = 1.0 - q.reciprocal, 1.0 + q.reciprocal
    full = beta(a, b_)
    parts = []
    for panel in _panels(f, q):
        T = panel.c / panel.d
        upper = betainc(a, b_, min(panel.hi / T, 1.0))
        lower = betainc(a, b_, panel.lo / T)
        parts.append(panel.d ** q.reciprocal * T * full * (upper - lower))
    return compensated_sum(parts)


@dataclass(frozen=True)
class StrongSandwich:
    lhs: CertifiedValue
    integral: float
    lhs_ratio: float
    rhs_ratio: float
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def strong_cont_sandwich(f: StepFunction, q: ExponentLike,
                         slack: float = VERIFY_SETTINGS['SLACK']) -> StrongSandwich:
    """Check lhs <= c1_cont(q) int f and int f <= C1_cont(q) lhs"""
    q = Exponent.of(q)
    total = integral(f)
    require(total > 0.0, "f vanishes identically")
    lhs = strong_cont_lhs(f, q)
    consts = continuous_constants(q)
    lower_ok = lhs.lower <= consts.c1.upper * total * (1.0 + slack)
    upper_ok = total <= consts.C1.upper * lhs.upper * (1.0 + slack)
    return StrongSandwich(lhs, total, lhs.value / total, total / lhs.value, lower_ok, upper_ok)


class WeakContValues(NamedTuple):
    weak_lhs: float
    weak_rhs: float
    argmax: Optional[float]


def _weak_objective(panel: _Panel, q: Exponent, t: float) -> float:
    return t ** q.conj_reciprocal * max(panel.c - panel.d * t, 0.0) ** q.reciprocal


def weak_cont_values(f: Union[StepFunction, PowerLaw], q: ExponentLike) -> WeakContValues:
    """
    sup_t t^(1-1/q) (int_t^inf f^q)^(1/q) and sup_t t f(t).

    On each panel the objective t^(1-1/q) (c - d t)^(1/q) peaks at
    t* = c (1 - 1/q) / d; otherwise the panel maximum sits at an end point.
    For f = scale/t both sides are constant in t and argmax is None.
    """
    q = Exponent.of(q)
    require(not q.is_infinite, "q must be finite")
    if isinstance(f, PowerLaw):
        require(f.scale > 0.0, "scale must be positive")
        return WeakContValues(f.scale * (q.value - 1.0) ** -q.reciprocal, f.scale, None)

    best, best_t = 0.0, None
    for panel in _panels(f, q):
        candidates = [panel.hi]
        t_star = panel.c * q.conj_reciprocal / panel.d
        if panel.lo < t_star < panel.hi:
            candidates.insert(0, t_star)
        for t in candidates:
            value = _weak_objective(panel, q, t)
            if value > best:
                best, best_t = value, t
    rhs = float(np.max(f.breakpoints * f.levels))
    return WeakContValues(best, rhs, best_t)


@dataclass(frozen=True)
class WeakSandwich:
    values: WeakContValues
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def weak_cont_sandwich(f: StepFunction, q: ExponentLike,
                       slack: float = VERIFY_SETTINGS['SLACK']) -> WeakSandwich:
    """Check weak_lhs <= c1_weak_cont(q) sup t f(t) and sup t f(t) <= C1_weak_cont(q) weak_lhs"""
    q = Exponent.of(q)
    values = weak_cont_values(f, q)
    require(values.weak_rhs > 0.0, "f vanishes identically")
    consts = continuous_constants(q)
    tol = 1.0 + slack + 16.0 * np.finfo(float).eps
    lower_ok = values.weak_lhs <= consts.c1_weak.upper * values.weak_rhs * tol
    upper_ok = values.weak_rhs <= consts.C1_weak.upper * values.weak_lhs * tol
    return WeakSandwich(values, lower_ok, upper_ok)


def rearrange_samples(values: Sequence[float], dx: float) -> StepFunction:
    """Nonincreasing rearrangement of samples |f(x_j)| on cells of width dx"""
    require(dx > 0.0, "cell width must be positive")
    arr = np.abs(np.asarray(values, dtype=float))
    require(arr.size >= 1, "need at least one sample")
    require(bool(np.all(np.isfinite(arr))), "samples must be finite")
    levels = np.sort(arr)[::-1]
    return StepFunction(dx * np.arange(1, arr.size + 1, dtype=float), levels)
