"""
Best n-term approximation in an orthonormal basis and its approximation spaces.

Only the moduli of the coordinates f_k = <f, e_k> matter, so a function is
represented by its coefficient list. With a_k = (f*_k)^tau and q = 2 alpha + 1
the approximation-space norm raised to tau is exactly the Stechkin
functional gamma(a, q), and the Lorentz norm l_{tau,tau} raised to tau is
ell1(a). The discrete constants therefore transfer with exponent alpha + 1/2.
"""

import math
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Union

import numpy as np

from config import VERIFY_SETTINGS
from utils.certified import CertifiedValue
from utils.constants import C1_best, C1_best_is_exact, C1_weak, c1, c1_weak
from utils.summation import backward_suffix_sums, compensated_sum
from utils.validation import DomainError, require

logger = logging.getLogger(__name__)

TAU = 'tau'
INFINITY = 'inf'
R_MODES = (TAU, INFINITY)


@dataclass(frozen=True, eq=False)
class CoeffVector:
    """Hilbert-basis coordinates, zero beyond the stored ones"""
    coefficients: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coefficients, dtype=float).ravel()
        require(arr.size >= 1, "need at least one coefficient")
        require(bool(np.all(np.isfinite(arr))), "coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, 'coefficients', arr)

    def __len__(self) -> int:
        return int(self.coefficients.size)

    @property
    def rearranged(self) -> np.ndarray:
        """f*: moduli sorted into nonincreasing order"""
        return np.flip(np.sort(np.abs(self.coefficients)))

    @property
    def is_zero(self) -> bool:
        return not bool(np.any(self.coefficients))

    def scaled(self, factor: float) -> 'CoeffVector':
        return CoeffVector(self.coefficients * factor)


CoeffLike = Union[CoeffVector, Sequence[float], np.ndarray]


def _coeffs(c: CoeffLike) -> CoeffVector:
    return c if isinstance(c, CoeffVector) else CoeffVector(c)


@dataclass(frozen=True)
class ApproxParams:
    alpha: float
    r: float

    def __post_init__(self):
        require(self.alpha > 0.0, f"alpha must be positive, got {self.alpha}")
        require(self.r > 0.0, f"r must be positive, got {self.r}")

    @classmethod
    def for_mode(cls, alpha: float, r_mode: str) -> 'ApproxParams':
        """r = tau or r = inf"""
        if r_mode not in R_MODES:
            raise DomainError(f"r mode must be one of {R_MODES}, got '{r_mode}'")
        require(alpha > 0.0, f"alpha must be positive, got {alpha}")
        tau = 1.0 / (alpha + 0.5)
        return cls(alpha, tau if r_mode == TAU else math.inf)

    @property
    def tau(self) -> float:
        return 1.0 / (self.alpha + 0.5)

    @property
    def q(self) -> float:
        return 2.0 * self.alpha + 1.0


def approximation_errors(c: CoeffLike) -> List[float]:
    """E_n = (sum_{k>=n} (f*_k)^2)^(1/2) for n = 1..len+1; E_1 = ||f||"""
    c = _coeffs(c)
    squares = c.rearranged ** 2
    return [math.sqrt(s) for s in backward_suffix_sums(squares.tolist())]


def _weighted_norm(weights: np.ndarray, r: float) -> float:
    """(sum_n w_n^r / n)^(1/r), or sup_n w_n for r = inf"""
    if math.isinf(r):
        return float(np.max(weights))
    n = np.arange(1, weights.size + 1, dtype=float)
    total = compensated_sum((weights ** r / n).tolist())
    return total ** (1.0 / r)


def approx_space_norm(c: CoeffLike, params: ApproxParams) -> float:
    """||f||_{A_r^alpha} from the n^alpha E_n, n = 1..len (E_n = 0 beyond)"""
    c = _coeffs(c)
    errors = np.asarray(approximation_errors(c)[:-1])
    n = np.arange(1, errors.size + 1, dtype=float)
    return _weighted_norm(n ** params.alpha * errors, params.r)


def lorentz_norm(c: CoeffLike, p: float, r: float) -> float:
    """||c||_{l_{p,r}} = (sum_n (n^(1/p) f*_n)^r / n)^(1/r)"""
    require(p > 0.0, f"p must be positive, got {p}")
    require(r > 0.0, f"r must be positive, got {r}")
    c = _coeffs(c)
    star = c.rearranged
    n = np.arange(1, star.size + 1, dtype=float)
    inv_p = 0.0 if math.isinf(p) else 1.0 / p
    return _weighted_norm(n ** inv_p * star, r)


class DeVoreConstants(NamedTuple):
    c: CertifiedValue
    C: CertifiedValue
    C_is_bound: bool


def devore_constants(alpha: float, r_mode: str) -> DeVoreConstants:
    """
    Constants of ||f||_A / c <= ||f*||_{l_{tau,r}} <= C ||f||_A.

    Catalog constants at q = 2 alpha + 1 raised to alpha + 1/2. When C1(q)
    is only known through an upper bound, C_is_bound is set.
    """
    params = ApproxParams.for_mode(alpha, r_mode)
    power = 1.0 / params.tau
    if r_mode == TAU:
        low, high = c1(params.q), C1_best(params.q)
        is_bound = not C1_best_is_exact(params.q)
    else:
        low, high = c1_weak(params.q), C1_weak(params.q)
        is_bound = False
    return DeVoreConstants(low.power(power), high.power(power), is_bound)


class EquivalenceCheck(NamedTuple):
    ratio_low_ok: bool
    ratio_high_ok: bool
    approx_norm: float
    lorentz: float
    constants: DeVoreConstants


def equivalence_check(c: CoeffLike, alpha: float, r_mode: str,
                      slack: float = VERIFY_SETTINGS['SLACK']) -> EquivalenceCheck:
    c = _coeffs(c)
    require(not c.is_zero, "coefficient vector must be nonzero")
    params = ApproxParams.for_mode(alpha, r_mode)
    consts = devore_constants(alpha, r_mode)
    approx = approx_space_norm(c, params)
    lorentz = lorentz_norm(c, params.tau, params.r)
    tol = 1.0 + slack + 64.0 * np.finfo(float).eps
    low_ok = approx <= consts.c.upper * lorentz * tol
    high_ok = lorentz <= consts.C.upper * approx * tol
    if not (low_ok and high_ok):
        logger.warning(f"equivalence failed: alpha={alpha}, r={r_mode}, "
                       f"approx={approx:.15g}, lorentz={lorentz:.15g}")
    return EquivalenceCheck(low_ok, high_ok, approx, lorentz, consts)


class WienerBounds(NamedTuple):
    lower: float
    wiener_norm: float
    upper: float


def wiener_bounds(coefficients: CoeffLike) -> WienerBounds:
    """
    Fourier moduli -> (2/pi ||f||_A, sum |f^(k)|, C1(2) ||f||_A) with
    ||f||_A = sum_n n^(-1/2) E_n, the alpha = 1/2, r = 1 approximation norm.
    """
    c = _coeffs(coefficients)
    norm = approx_space_norm(c, ApproxParams.for_mode(0.5, TAU))
    consts = devore_constants(0.5, TAU)
    return WienerBounds(norm / consts.c.value, compensated_sum(np.abs(c.coefficients).tolist()),
                        consts.C.value * norm)
