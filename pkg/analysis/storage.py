"""Storage for sweep DataFrames and their plotting scripts."""
from pathlib import Path
from typing import Optional

import pandas as pd

from analysis.plot_script import render_plot_script
from config import SogliaConfig, get_config


def resolve_format(path: Path, fmt: Optional[str] = None, config: Optional[SogliaConfig] = None) -> str:
    """Explicit fmt, else the file suffix (.csv / .parquet), else config.output_format."""
    if fmt is not None:
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix == ".parquet":
        return "parquet"
    if suffix == ".csv":
        return "csv"
    if config is None:
        config = get_config()
    return config.output_format


def save_sweep_df(
    df: pd.DataFrame,
    path: Path,
    fmt: Optional[str] = None,
    config: Optional[SogliaConfig] = None,
) -> Path:
    """Save a sweep DataFrame.

    CSV output is UTF-8 with LF line endings, numbers at the configured number of
    significant digits and empty fields for absent thresholds, so identical frames
    give byte-identical files.

    Args:
        df: Sweep frame (columns theta, phi, a1, a2, a3, p_star, family)
        path: Destination file
        fmt: "csv" or "parquet" (default: inferred, see resolve_format)
        config: Override config

    Returns:
        Path to the saved file

    Raises:
        ValueError: If fmt is not "csv" or "parquet"
    """
    if config is None:
        config = get_config()
    path = Path(path)
    fmt = resolve_format(path, fmt, config)

    if fmt == "parquet":
        df.to_parquet(path, index=False, engine="pyarrow")
    elif fmt == "csv":
        df.to_csv(
            path,
            index=False,
            float_format=config.float_format,
            na_rep="",
            lineterminator="\n",
            encoding="utf-8",
        )
    else:
        raise ValueError(f"Unsupported format: {fmt}. Use 'csv' or 'parquet'.")

    return path


def load_sweep_df(path: Path, fmt: Optional[str] = None) -> pd.DataFrame:
    """Load a sweep DataFrame.

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If fmt is not "csv" or "parquet"
    """
    path = Path(path)
    fmt = resolve_format(path, fmt)
    if fmt == "parquet":
        return pd.read_parquet(path, engine="pyarrow")
    elif fmt == "csv":
        return pd.read_csv(path)
    else:
        raise ValueError(f"Unsupported format: {fmt}. Use 'csv' or 'parquet'.")


def write_plot_script(data_path: Path, script_path: Path) -> Path:
    """Write the standalone plotting script for a saved sweep.

    Returns:
        Path to the script
    """
    script_path = Path(script_path)
    script_path.parent.mkdir(parents=True, exist_ok=True)
    with open(script_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(render_plot_script(Path(data_path), script_path))
    return script_path
