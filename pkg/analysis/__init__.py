"""Reduction-criterion decisions, thresholds and the d=3 sweep."""
from analysis.criterion import min_rc_eigenvalue, rc_check
from analysis.cubic import cubic3x3_roots, cubic_coefficients, cubic_residual
from analysis.plot_script import render_plot_script
from analysis.schema import Cubic3x3Roots, RcVerdict, SweepRow, ThresholdResult
from analysis.storage import load_sweep_df, save_sweep_df, write_plot_script
from analysis.sweep import SweepResult, run_sweep, summarize_sweep, sweep_3x3, sweep_cell
from analysis.threshold import (
    bisection_threshold_oracle,
    threshold,
    threshold_from_root,
    verify_threshold,
)

__all__ = [
    # Schemas
    "RcVerdict",
    "Cubic3x3Roots",
    "ThresholdResult",
    "SweepRow",
    # Criterion
    "rc_check",
    "min_rc_eigenvalue",
    # Closed form (d=3)
    "cubic_coefficients",
    "cubic3x3_roots",
    "cubic_residual",
    # Thresholds
    "threshold",
    "threshold_from_root",
    "bisection_threshold_oracle",
    "verify_threshold",
    # Sweep
    "SweepResult",
    "sweep_cell",
    "sweep_3x3",
    "summarize_sweep",
    "run_sweep",
    # Storage
    "save_sweep_df",
    "load_sweep_df",
    "write_plot_script",
    "render_plot_script",
]
