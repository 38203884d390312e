#!/usr/bin/env python
import argparse
import logging
import os
import sys

# Add parent directory to path to import utils
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import FIGURE_SETTINGS, LOGGING_CONFIG
from utils.figures import FIGURES, CurveSpec, write_curve

logger = logging.getLogger(__name__)


def export_all(out_dir: str, grid: int):
    """Write every figure table to out_dir/<tag>.csv"""
    written = []
    for tag in sorted(FIGURES):
        try:
            path = write_curve(CurveSpec(tag, grid, os.path.join(out_dir, f"{tag}.csv")))
            written.append(path)
            print(f"✅ {tag}: {path}")
        except Exception as e:
            logger.error(f"Error exporting {tag}: {e}")
            print(f"❌ {tag}: {e}")
    return written


if __name__ == '__main__':
    logging.basicConfig(level=LOGGING_CONFIG['level'], format=LOGGING_CONFIG['format'])

    parser = argparse.ArgumentParser(description='Export all figure curves as CSV')
    parser.add_argument('--out', type=str, default=FIGURE_SETTINGS['OUTPUT_DIR'])
    parser.add_argument('--grid', type=int, default=FIGURE_SETTINGS['GRID'])
    args = parser.parse_args()

    written = export_all(args.out, args.grid)
    sys.exit(0 if len(written) == len(FIGURES) else 1)
