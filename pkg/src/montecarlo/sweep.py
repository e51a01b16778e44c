import logging
import sys
from pathlib import Path
from typing import TextIO

import numpy as np
import pandas as pd

from src.model.ExperimentConfig import ExperimentConfig
from src.montecarlo.ReplicaExperiment import run_experiment

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["n", "b", "phi", "var_emp", "var_theory", "rel_gap", "stderr"]
FLOAT_FORMAT = "%.17g"
ALLOWED_INVERSIONS = 1


def sweep(base: ExperimentConfig, grid: list[tuple[int, float]], track_progress: bool = False) -> pd.DataFrame:
    """
    Run the base experiment at every (n, b) of the grid, one row per point and test function.
    """

    rows = []
    for n, b in grid:
        report = run_experiment(base.with_point(int(n), float(b)), track_progress)
        for summary in report.statistics:
            rows.append(
                (
                    int(n),
                    float(b),
                    summary.name,
                    summary.empirical_variance,
                    summary.theory.total,
                    summary.relative_gap,
                    summary.variance_stderr,
                )
            )
        logger.info(f"Sweep point n={n}, b={b} done")

    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def gap_trend(table: pd.DataFrame, replicas: int) -> dict[str, bool]:
    """
    Per test function, whether the relative gap is non-increasing along the grid, allowing
    one inversion inside the noise band 2 sqrt(2 / R).
    """

    band = 2.0 * np.sqrt(2.0 / replicas)
    trends = {}
    for name, rows in table.groupby("phi", sort=False):
        gaps = rows["rel_gap"].to_numpy()
        rises = np.diff(gaps)
        inversions = rises[rises > 0]
        trends[name] = len(inversions) <= ALLOWED_INVERSIONS and bool(np.all(inversions <= band))
    return trends


def write_sweep_table(table: pd.DataFrame, destination: str | Path | TextIO = None):
    """
    Comma-separated table with a header, numbers with 17 significant digits. Defaults to stdout.
    """

    destination = sys.stdout if destination is None else destination
    table.to_csv(destination, index=False, float_format=FLOAT_FORMAT, columns=SWEEP_COLUMNS)
