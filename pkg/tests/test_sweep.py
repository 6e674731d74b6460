"""Unit tests for the d=3 sweep, its storage and the generated plotting script."""
import ast
import math
import tempfile
from pathlib import Path

import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from analysis import (
    SweepRow,
    load_sweep_df,
    render_plot_script,
    run_sweep,
    save_sweep_df,
    summarize_sweep,
    sweep_3x3,
    sweep_cell,
)
from analysis.sweep import SWEEP_COLUMNS, sweep_executor
from config import SogliaConfig, get_config

MAXENT_PHI = math.acos(1 / math.sqrt(3))
HALF_PI = math.pi / 2


class TestSweepCell:
    """Test single cells."""

    def test_maximally_entangled_cell(self):
        row = sweep_cell(math.pi / 4, MAXENT_PHI, 1e-12)
        assert row.p_star == pytest.approx(0.25, abs=1e-12)
        assert row.family == "lambda1"

    def test_product_cell(self):
        row = sweep_cell(0.3, 0.0, 1e-12)
        assert (row.a1, row.a2, row.a3) == (0.0, 0.0, 1.0)
        assert row.p_star is None
        assert row.family is None

    def test_near_corners(self):
        """Test cells one grid step from a product state have p* > 0.9 or none."""
        step = HALF_PI / 180
        for theta, phi in [
            (0.0, step), (step, step), (HALF_PI, step),
            (step, HALF_PI), (0.0, HALF_PI - step), (step, HALF_PI - step),
            (HALF_PI - step, HALF_PI), (HALF_PI, HALF_PI - step), (HALF_PI - step, HALF_PI - step),
        ]:
            row = sweep_cell(theta, phi, 1e-12)
            assert row.p_star is None or row.p_star > 0.9

    def test_row_validation(self):
        with pytest.raises(ValidationError):
            SweepRow(theta=0, phi=0, a1=0, a2=0, a3=1, p_star=0.5, family=None)


class TestSweepGrid:
    """Test grid evaluation."""

    def test_row_order_and_columns(self):
        df = sweep_3x3(theta_steps=4, phi_steps=3)
        assert list(df.columns) == SWEEP_COLUMNS
        assert len(df) == 12
        np.testing.assert_allclose(df["phi"].to_numpy()[:4], [0.0] * 4)
        np.testing.assert_allclose(df["theta"].to_numpy()[:4], np.linspace(0, HALF_PI, 4))
        np.testing.assert_allclose(df["phi"].to_numpy()[-1], HALF_PI)

    def test_unit_coefficients(self):
        df = sweep_3x3(theta_steps=9, phi_steps=9)
        norms = df["a1"] ** 2 + df["a2"] ** 2 + df["a3"] ** 2
        assert np.all(np.abs(norms - 1.0) <= 1e-12)
        assert (df["p_star"].isna() == df["family"].isna()).all()

    def test_corner_grid(self):
        """Test the 2x2 grid: phi=0 rows carry no threshold."""
        df = sweep_3x3(theta_steps=2, phi_steps=2)
        assert df[df["phi"] == 0.0]["p_star"].isna().all()
        summary = summarize_sweep(df)
        assert summary["cells"] == 4
        assert summary["absent"] == 4
        assert summary["min_p_star"] is None

    def test_only_lambda1(self):
        df = sweep_3x3(theta_steps=31, phi_steps=31)
        assert set(df["family"].dropna()) == {"lambda1"}

    def test_exact_minimum_on_grid(self):
        """Test a grid with the symmetric point as a node attains 1/4."""
        df = sweep_3x3(theta_steps=21, phi_steps=21, phi_range=(0.0, 2 * MAXENT_PHI))
        summary = summarize_sweep(df)
        assert summary["min_p_star"] == pytest.approx(0.25, abs=1e-9)
        assert summary["argmin_theta"] == pytest.approx(math.pi / 4)
        assert summary["argmin_phi"] == pytest.approx(MAXENT_PHI)
        assert df["p_star"].min() >= 0.25 - 1e-12

    def test_jobs_do_not_change_output(self):
        config = SogliaConfig()
        serial = sweep_3x3(theta_steps=13, phi_steps=11, jobs=1, config=config)
        parallel = sweep_3x3(theta_steps=13, phi_steps=11, jobs=3, config=config)
        pd.testing.assert_frame_equal(serial, parallel)

    def test_workers_run_with_given_config(self):
        config = SogliaConfig(normalization_tol=1e-9, root_tol=10.0)
        with sweep_executor(2, config) as executor:
            installed = executor.submit(get_config).result()
        assert installed.normalization_tol == 1e-9
        df = sweep_3x3(theta_steps=5, phi_steps=5, jobs=2, config=config)
        assert df["p_star"].isna().all()

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            sweep_3x3(theta_steps=1, phi_steps=5)
        with pytest.raises(ValueError):
            sweep_3x3(theta_steps=5, phi_steps=5, jobs=0)


class TestSweepStorage:
    """Test CSV and parquet output."""

    def test_csv_format(self):
        df = sweep_3x3(theta_steps=2, phi_steps=2)
        with tempfile.TemporaryDirectory() as tmpdir:
            path = save_sweep_df(df, Path(tmpdir) / "sweep.csv")
            raw = path.read_bytes()
        lines = raw.decode("utf-8").split("\n")
        assert lines[0] == "theta,phi,a1,a2,a3,p_star,family"
        assert lines[1] == "0,0,0,0,1,,"
        assert b"\r" not in raw
        assert raw.endswith(b"\n")

    def test_twelve_significant_digits(self):
        df = pd.DataFrame([{
            "theta": 1 / 3, "phi": 0.0, "a1": 0.0, "a2": 0.0, "a3": 1.0,
            "p_star": 4 / 13, "family": "lambda1",
        }])
        with tempfile.TemporaryDirectory() as tmpdir:
            text = save_sweep_df(df, Path(tmpdir) / "one.csv").read_text()
        assert text.splitlines()[1] == "0.333333333333,0,0,0,1,0.307692307692,lambda1"

    def test_csv_deterministic(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            first = save_sweep_df(sweep_3x3(15, 15, jobs=1), Path(tmpdir) / "a.csv").read_bytes()
            second = save_sweep_df(sweep_3x3(15, 15, jobs=2), Path(tmpdir) / "b.csv").read_bytes()
        assert first == second

    def test_parquet_round_trip(self):
        df = sweep_3x3(theta_steps=5, phi_steps=5)
        with tempfile.TemporaryDirectory() as tmpdir:
            path = save_sweep_df(df, Path(tmpdir) / "sweep.parquet")
            loaded = load_sweep_df(path)
        pd.testing.assert_frame_equal(loaded, df, check_dtype=False)

    def test_csv_load(self):
        df = sweep_3x3(theta_steps=5, phi_steps=5)
        with tempfile.TemporaryDirectory() as tmpdir:
            loaded = load_sweep_df(save_sweep_df(df, Path(tmpdir) / "sweep.csv"))
        np.testing.assert_allclose(loaded["p_star"], df["p_star"], rtol=1e-11)

    def test_config_format_fallback(self):
        df = sweep_3x3(theta_steps=3, phi_steps=3)
        with tempfile.TemporaryDirectory() as tmpdir:
            path = save_sweep_df(df, Path(tmpdir) / "sweep.out", config=SogliaConfig(output_format="parquet"))
            assert len(load_sweep_df(path, fmt="parquet")) == 9

    def test_unknown_format(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            with pytest.raises(ValueError):
                save_sweep_df(pd.DataFrame(), Path(tmpdir) / "x.csv", fmt="xlsx")

    def test_plot_script(self):
        script = render_plot_script(Path("p_star.csv"), Path("plot_p_star.py"))
        assert "import matplotlib.pyplot as plt" in script
        assert "plot_surface" in script
        assert "contourf" in script
        assert "'p_star.csv'" in script
        compile(script, "plot_p_star.py", "exec")

    def test_plot_script_in_other_directory(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            root = Path(tmpdir)
            (root / "data").mkdir()
            out = root / "data" / "sweep.csv"
            script = root / "plots" / "plot.py"
            result = run_sweep(out, theta_steps=3, phi_steps=3, plot_script_path=script)
            assert result.success, result.errors

            data_line = next(
                line for line in script.read_text().splitlines() if line.startswith("DATA = ")
            )
            relpath = ast.literal_eval(data_line.split(" / ", 1)[1])
            assert (script.parent / relpath).resolve() == out.resolve()
            assert (script.parent / relpath).exists()

    def test_plot_script_relative_paths(self, monkeypatch):
        with tempfile.TemporaryDirectory() as tmpdir:
            monkeypatch.chdir(tmpdir)
            Path("data").mkdir()
            result = run_sweep(
                Path("data/sweep.csv"), theta_steps=3, phi_steps=3, plot_script_path=Path("plots/plot.py")
            )
            assert result.success, result.errors
            assert "'../data/sweep.csv'" in Path("plots/plot.py").read_text()
            monkeypatch.undo()


class TestRunSweep:
    """Test the sweep runner."""

    def test_success(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            out = Path(tmpdir) / "sweep.csv"
            script = Path(tmpdir) / "plot.py"
            result = run_sweep(out, theta_steps=7, phi_steps=7, plot_script_path=script)
            assert result.success, result.errors
            assert result.saved_paths == [out, script]
            assert out.exists()
            assert script.exists()
        assert result.summary["cells"] == 49
        assert result.summary["family_counts"] == {"lambda1": result.summary["populated"]}

    def test_unwritable_path(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            result = run_sweep(Path(tmpdir) / "missing" / "sweep.csv", theta_steps=3, phi_steps=3)
        assert not result.success
        assert "Failed to save" in result.errors[0]

    def test_invalid_grid(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            result = run_sweep(Path(tmpdir) / "sweep.csv", theta_steps=1, phi_steps=3)
        assert not result.success
