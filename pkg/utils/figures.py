"""
Curve tables for every figure, on the grid 1/q = i/(grid+1), i = 1..grid.

Column 1 is 1/q; the remaining columns are catalog values at q. Points
outside a bound's range of validity are written as nan.
"""

import math
import logging
import os
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import numpy as np
import pandas as pd

from config import FIGURE_SETTINGS, NUMERIC_SETTINGS
from utils.constants import (C1_weak, Q_IMPROVED, c1, c1_weak, continuous_constants, copson, gao_exact,
                             gao_q0, improved, levin_stechkin, stechkin_choice)
from utils.validation import DomainError, require

logger = logging.getLogger(__name__)

Column = Tuple[str, Callable[[float], float]]


def _improved_or_nan(q: float) -> float:
    return improved(q).value if q <= Q_IMPROVED else math.nan


def _levin_stechkin_gao(q: float) -> float:
    # Gao's exact value takes over at q0, below the q = 3 branch point
    if q >= gao_q0().value:
        return gao_exact(q).value
    return levin_stechkin(q).value


def _zeta_checked(q: float) -> float:
    # q closest to 1 on coarse grids may fall below the zeta domain
    if q < NUMERIC_SETTINGS['ZETA_MIN_EXPONENT']:
        return math.nan
    return c1_weak(q, cap_level=logging.INFO).value


FIGURES: Dict[str, List[Column]] = {
    'fig1_c1': [('c1', lambda q: c1(q).value)],
    'fig4_c1weak': [('c1_weak', _zeta_checked)],
    'fig5_C1weak': [('C1_weak', lambda q: C1_weak(q).value)],
    'fig6_cont_pair': [
        ('c1_cont', lambda q: continuous_constants(q).c1.value),
        ('C1_cont', lambda q: continuous_constants(q).C1.value),
    ],
    'fig7_weakcont_pair': [
        ('c1_weak_cont', lambda q: continuous_constants(q).c1_weak.value),
        ('C1_weak_cont', lambda q: continuous_constants(q).C1_weak.value),
    ],
    'fig8_bounds_overlay': [
        ('copson', lambda q: copson(q).value),
        ('levin_stechkin_gao', _levin_stechkin_gao),
        ('stechkin_choice', lambda q: stechkin_choice(q).value),
        ('improved', _improved_or_nan),
    ],
}


@dataclass(frozen=True)
class CurveSpec:
    figure: str
    grid: int = FIGURE_SETTINGS['GRID']
    out_path: str = ''

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise DomainError(f"unknown figure '{self.figure}', choose from {sorted(FIGURES)}")
        require(self.grid >= 2, f"grid must be at least 2, got {self.grid}")

    @property
    def path(self) -> str:
        return self.out_path or os.path.join(FIGURE_SETTINGS['OUTPUT_DIR'], f"{self.figure}.csv")


def grid_points(grid: int) -> np.ndarray:
    """1/q = i/(grid+1) for i = 1..grid"""
    require(grid >= 2, f"grid must be at least 2, got {grid}")
    return np.arange(1, grid + 1, dtype=float) / (grid + 1)


def curve_table(figure: str, grid: int = FIGURE_SETTINGS['GRID']) -> pd.DataFrame:
    spec = CurveSpec(figure, grid)
    inv_q = grid_points(spec.grid)
    data = {'inv_q': inv_q}
    for name, fn in FIGURES[spec.figure]:
        data[name] = [fn(1.0 / x) for x in inv_q]
    logger.debug(f"curve table {figure}: {grid} rows, columns {list(data)}")
    return pd.DataFrame(data)


def write_curve(spec: CurveSpec) -> str:
    """Write the table as CSV: header, comma separated, LF endings, 15 significant digits"""
    table = curve_table(spec.figure, spec.grid)
    path = spec.path
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    digits = FIGURE_SETTINGS['SIGNIFICANT_DIGITS']
    table.to_csv(path, index=False, float_format=f"%.{digits}g", lineterminator='\n', na_rep='nan')
    logger.info(f"wrote {len(table)} rows to {path}")
    return path
