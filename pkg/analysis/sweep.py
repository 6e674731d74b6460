"""Threshold sweep over the d=3 Schmidt sphere.

Coefficients are parametrised as a1 = sin(theta) sin(phi), a2 = cos(theta) sin(phi),
a3 = cos(phi). For every cell the threshold of each eigenvalue family is computed and
the smallest kept, along with the family that achieved it.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np
import pandas as pd

from analysis.cubic import cubic3x3_roots
from analysis.schema import SweepRow
from analysis.storage import save_sweep_df, write_plot_script
from analysis.threshold import threshold_from_root
from config import SogliaConfig, get_config, set_config
from states.schmidt import SchmidtVector

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["theta", "phi", "a1", "a2", "a3", "p_star", "family"]
DEFAULT_RANGE = (0.0, math.pi / 2)


class SweepResult:
    """Result object from a sweep run."""

    def __init__(self):
        self.success = True
        self.errors = []
        self.df: Optional[pd.DataFrame] = None
        self.summary: dict[str, Any] = {}
        self.saved_paths = []

    def add_error(self, error: str):
        """Add an error message."""
        self.errors.append(error)
        self.success = False


def sweep_cell(theta: float, phi: float, root_tol: float) -> SweepRow:
    """Threshold of one (theta, phi) cell, minimized over the three root families."""
    schmidt = SchmidtVector.from_angles(theta, phi)
    roots = cubic3x3_roots(schmidt, 1.0)

    best_p, best_family = None, None
    for family, x in roots.roots().items():
        p = threshold_from_root(3, x, root_tol)
        if p is not None and (best_p is None or p < best_p):
            best_p, best_family = p, family

    a1, a2, a3 = schmidt.a
    return SweepRow(theta=theta, phi=phi, a1=a1, a2=a2, a3=a3, p_star=best_p, family=best_family)


def _sweep_phi_row(phi: float, thetas: Sequence[float], root_tol: float) -> list[dict]:
    return [sweep_cell(theta, phi, root_tol).model_dump() for theta in thetas]


def sweep_executor(jobs: int, config: SogliaConfig) -> ProcessPoolExecutor:
    """Process pool whose workers run with ``config`` installed as the global config."""
    return ProcessPoolExecutor(max_workers=jobs, initializer=set_config, initargs=(config,))


def sweep_grid(steps: int, bounds: tuple[float, float]) -> np.ndarray:
    """Inclusive grid of ``steps`` nodes over ``bounds``."""
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    return np.linspace(bounds[0], bounds[1], steps)


def sweep_3x3(
    theta_steps: Optional[int] = None,
    phi_steps: Optional[int] = None,
    theta_range: tuple[float, float] = DEFAULT_RANGE,
    phi_range: tuple[float, float] = DEFAULT_RANGE,
    jobs: Optional[int] = None,
    config: Optional[SogliaConfig] = None,
) -> pd.DataFrame:
    """Evaluate the threshold on a (theta, phi) grid.

    Rows are ordered phi-outer, theta-inner. With jobs > 1 phi rows are spread over
    worker processes; Executor.map keeps the row order, so the frame is identical
    for every jobs value.

    Returns:
        DataFrame with columns theta, phi, a1, a2, a3, p_star, family.
    """
    if config is None:
        config = get_config()
    theta_steps = theta_steps if theta_steps is not None else config.sweep_theta_steps
    phi_steps = phi_steps if phi_steps is not None else config.sweep_phi_steps
    jobs = jobs if jobs is not None else config.sweep_jobs
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    thetas = [float(t) for t in sweep_grid(theta_steps, theta_range)]
    phis = [float(f) for f in sweep_grid(phi_steps, phi_range)]
    logger.info(f"Sweeping {phi_steps}x{theta_steps} grid with {jobs} worker(s)")

    if jobs == 1:
        row_blocks = [_sweep_phi_row(phi, thetas, config.root_tol) for phi in phis]
    else:
        with sweep_executor(jobs, config) as executor:
            row_blocks = list(executor.map(
                _sweep_phi_row,
                phis,
                [thetas] * len(phis),
                [config.root_tol] * len(phis),
            ))

    records = [record for block in row_blocks for record in block]
    df = pd.DataFrame.from_records(records, columns=SWEEP_COLUMNS)
    df["p_star"] = pd.to_numeric(df["p_star"])

    others = df["family"].notna() & (df["family"] != "lambda1")
    if others.any():
        logger.warning(f"{int(others.sum())} cell(s) had a threshold set by a family other than lambda1")
    return df


def summarize_sweep(df: pd.DataFrame) -> dict[str, Any]:
    """Global minimum and family statistics of a sweep frame.

    Returns:
        Dict with cells, populated, absent, min_p_star (None if no cell is populated),
        argmin_theta, argmin_phi and family_counts.
    """
    populated = df[df["p_star"].notna()]
    summary: dict[str, Any] = {
        "cells": int(len(df)),
        "populated": int(len(populated)),
        "absent": int(len(df) - len(populated)),
        "min_p_star": None,
        "argmin_theta": None,
        "argmin_phi": None,
        "family_counts": {str(k): int(v) for k, v in populated["family"].value_counts().items()},
    }
    if not populated.empty:
        best = populated.loc[populated["p_star"].idxmin()]
        summary["min_p_star"] = float(best["p_star"])
        summary["argmin_theta"] = float(best["theta"])
        summary["argmin_phi"] = float(best["phi"])
    return summary


def run_sweep(
    out_path: Path,
    theta_steps: Optional[int] = None,
    phi_steps: Optional[int] = None,
    theta_range: tuple[float, float] = DEFAULT_RANGE,
    phi_range: tuple[float, float] = DEFAULT_RANGE,
    jobs: Optional[int] = None,
    plot_script_path: Optional[Path] = None,
    fmt: Optional[str] = None,
    config: Optional[SogliaConfig] = None,
) -> SweepResult:
    """Run a sweep, save it and optionally emit the plotting script.

    Steps:
    1. Evaluate the grid
    2. Summarize it
    3. Save the frame (csv or parquet)
    4. Write the plot script, if requested

    Returns:
        SweepResult with success status, errors, the frame and saved file paths
    """
    if config is None:
        config = get_config()
    result = SweepResult()

    try:
        result.df = sweep_3x3(theta_steps, phi_steps, theta_range, phi_range, jobs=jobs, config=config)
        result.summary = summarize_sweep(result.df)
    except ValueError as e:
        result.add_error(f"Sweep failed: {e}")
        return result

    try:
        saved = save_sweep_df(result.df, Path(out_path), fmt=fmt, config=config)
        result.saved_paths.append(saved)
        logger.info(f"Saved sweep to {saved}")
    except (OSError, ValueError) as e:
        result.add_error(f"Failed to save sweep to {out_path}: {e}")
        return result

    if plot_script_path is not None:
        try:
            script = write_plot_script(Path(out_path), Path(plot_script_path))
            result.saved_paths.append(script)
            logger.info(f"Wrote plot script to {script}")
        except OSError as e:
            result.add_error(f"Failed to write plot script to {plot_script_path}: {e}")

    return result
