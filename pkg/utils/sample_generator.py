import logging
from typing import Tuple

import numpy as np

from config import VERIFY_SETTINGS
from utils.continuous import StepFunction
from utils.sequences import MonotoneSequence
from utils.sparse import CoeffVector

logger = logging.getLogger(__name__)


class SampleGenerator:
    """Seeded random inputs for the property suites; (seed, index) fixes every draw"""

    SEQUENCE_SHAPES = ('uniform', 'geometric', 'power', 'flat_prefix', 'sparse')

    def __init__(self, seed: int = VERIFY_SETTINGS['SEED'], index: int = 0):
        self.seed = seed
        self.index = index
        self.rng = np.random.default_rng([seed, index])

    def monotone_sequence(self, max_length: int = VERIFY_SETTINGS['MAX_LENGTH']) -> MonotoneSequence:
        """Nonincreasing nonnegative sequence of random length and shape"""
        length = int(self.rng.integers(1, max_length + 1))
        shape = self.SEQUENCE_SHAPES[int(self.rng.integers(len(self.SEQUENCE_SHAPES)))]
        n = np.arange(1, length + 1, dtype=float)

        if shape == 'uniform':
            entries = np.sort(self.rng.random(length))[::-1]
        elif shape == 'geometric':
            ratio = self.rng.uniform(0.5, 1.0)
            entries = ratio ** (n - 1.0)
        elif shape == 'power':
            s = self.rng.uniform(0.2, 3.0)
            entries = n ** -s
        elif shape == 'flat_prefix':
            k0 = int(self.rng.integers(1, length + 1))
            entries = np.where(n <= k0, 1.0 / k0, 0.0)
        else:
            # a few large entries followed by zeros
            support = int(self.rng.integers(1, min(length, 5) + 1))
            entries = np.zeros(length)
            entries[:support] = np.sort(self.rng.exponential(size=support))[::-1]

        scale = float(self.rng.lognormal(0.0, 1.0))
        return MonotoneSequence(entries * scale)

    def step_function(self, max_steps: int = VERIFY_SETTINGS['MAX_STEPS']) -> StepFunction:
        """Nonincreasing step function with a positive first level"""
        steps = int(self.rng.integers(1, max_steps + 1))
        widths = self.rng.exponential(size=steps) + 1e-3
        levels = np.sort(self.rng.exponential(size=steps))[::-1]
        levels[0] = max(levels[0], 1e-3)
        return StepFunction(np.cumsum(widths), levels)

    def step_pair(self, max_steps: int = VERIFY_SETTINGS['MAX_STEPS']) -> Tuple[StepFunction, StepFunction]:
        return self.step_function(max_steps), self.step_function(max_steps)

    def coefficient_vector(self, max_length: int = VERIFY_SETTINGS['MAX_LENGTH']) -> CoeffVector:
        """Gaussian coordinates with a few zeroed entries"""
        length = int(self.rng.integers(1, max_length + 1))
        coeffs = self.rng.standard_normal(length)
        coeffs[self.rng.random(length) < 0.1] = 0.0
        if not np.any(coeffs):
            coeffs[0] = 1.0
        return CoeffVector(coeffs)
