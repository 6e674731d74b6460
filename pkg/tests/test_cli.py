"""End-to-end tests for the command-line interface."""
import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

from cli import main
from config import reset_config
from states import load_state

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def _fresh_config():
    reset_config()
    yield
    reset_config()


class TestCheck:
    """Test `soglia check` exit codes and output."""

    def test_detected(self, capsys):
        assert main(["check", "--d", "3", "--p", "0.3", "--coeffs", "1,1,1"]) == 0
        out = capsys.readouterr().out
        assert "min_eigenvalue: -" in out
        assert "distillable" in out

    def test_not_detected(self, capsys):
        assert main(["check", "--d", "3", "--p", "0.2", "--coeffs", "1,1,1"]) == 1
        assert "not detected" in capsys.readouterr().out

    def test_rank_deficient_below_threshold(self):
        assert main(["check", "--d", "3", "--p", "0.3", "--coeffs", "1,1,0"]) == 1

    @pytest.mark.parametrize("method", ["oracle", "charpoly", "cubic3x3"])
    def test_methods(self, method):
        assert main(["check", "--p", "0.3", "--coeffs", "1,1,1", "--method", method]) == 0

    @pytest.mark.parametrize("argv", [
        ["check", "--d", "3", "--p", "0.3", "--coeffs", "1,x,1"],
        ["check", "--d", "3", "--p", "1.5", "--coeffs", "1,1,1"],
        ["check", "--d", "4", "--p", "0.3", "--coeffs", "1,1,1"],
        ["check", "--d", "3", "--p", "0.3", "--coeffs", "0,0,0"],
        ["check", "--d", "3", "--coeffs", "1,1,1"],
        ["check", "--d", "3", "--p", "0.3"],
        ["check", "--d", "2", "--p", "0.3", "--coeffs", "1,1", "--method", "cubic3x3"],
        ["check", "--p", "0.3", "--coeffs", "1,1", "--tol", "-1"],
        ["check", "--p", "0.3", "--state", "does-not-exist.json"],
        ["bogus"],
    ])
    def test_input_errors(self, argv, capsys):
        assert main(argv) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_state_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "state.json"
            path.write_text(json.dumps({"d": 3, "p": 0.3, "a": [1, 1, 1]}))
            assert main(["check", "--state", str(path)]) == 0
            assert main(["check", "--state", str(path), "--p", "0.2"]) == 1
            assert main(["check", "--d", "4", "--state", str(path)]) == 2

    def test_save_state_round_trip(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "saved.json"
            assert main(["check", "--p", "0.4", "--coeffs", "0.3,-1.2,2", "--save-state", str(path)]) == 0
            record = load_state(path)
            assert record.p == 0.4
            expected = np.array([0.3, -1.2, 2.0]) / math.sqrt(0.09 + 1.44 + 4.0)
            np.testing.assert_allclose(record.a, expected, atol=1e-15, rtol=0)
            assert main(["check", "--state", str(path)]) == 0

    def test_config_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            config = Path(tmpdir) / "soglia.env"
            config.write_text("SOGLIA_RC_TOL=1.0\n")
            assert main(["--config", str(config), "check", "--p", "0.3", "--coeffs", "1,1,1"]) == 1
            assert main(["--config", str(Path(tmpdir) / "missing.env"), "check", "--p", "0.3", "--coeffs", "1,1,1"]) == 2


class TestThreshold:
    """Test `soglia threshold`."""

    @pytest.mark.parametrize("coeffs,expected", [
        ("1,1,1", "0.25"),
        ("1,1,0", "0.307692307692"),
        ("1,0,0", "none"),
    ])
    def test_values(self, coeffs, expected, capsys):
        assert main(["threshold", "--d", "3", "--coeffs", coeffs]) == 0
        assert capsys.readouterr().out.strip() == expected

    @pytest.mark.parametrize("method", ["generic", "cubic3x3", "bisection"])
    def test_methods(self, method, capsys):
        assert main(["threshold", "--coeffs", "1,1,0", "--method", method, "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["p_star"] == pytest.approx(4 / 13, abs=1e-9)
        assert report["family"] == "lambda1"

    def test_json_absent(self, capsys):
        assert main(["threshold", "--coeffs", "1,0,0", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"p_star": None, "family": None}

    def test_errors(self):
        assert main(["threshold", "--d", "4", "--coeffs", "1,1,1"]) == 2
        assert main(["threshold", "--coeffs", "1,1,1,1", "--method", "cubic3x3"]) == 2
        assert main(["threshold", "--coeffs", "1,;1"]) == 2

    def test_save_state_without_p(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "a.json"
            assert main(["threshold", "--coeffs", "1,1,1", "--save-state", str(path)]) == 0
            assert load_state(path).p is None


class TestSweep:
    """Test `soglia sweep`."""

    def test_writes_csv_and_script(self, capsys):
        with tempfile.TemporaryDirectory() as tmpdir:
            out = Path(tmpdir) / "sweep.csv"
            script = Path(tmpdir) / "plot.py"
            argv = ["sweep", "--theta-steps", "5", "--phi-steps", "4", "--out", str(out), "--plot-script", str(script)]
            assert main(argv) == 0
            lines = out.read_text().splitlines()
            assert script.exists()
        assert lines[0] == "theta,phi,a1,a2,a3,p_star,family"
        assert len(lines) == 21
        stdout = capsys.readouterr().out
        assert "cells: 20" in stdout
        assert "family lambda1" in stdout

    def test_jobs_byte_identical(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            outputs = []
            for jobs in ("1", "2"):
                out = Path(tmpdir) / f"sweep_{jobs}.csv"
                assert main(["sweep", "--theta-steps", "9", "--phi-steps", "8", "--jobs", jobs, "--out", str(out)]) == 0
                outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_unwritable_path(self, capsys):
        with tempfile.TemporaryDirectory() as tmpdir:
            out = Path(tmpdir) / "no" / "such" / "dir" / "sweep.csv"
            assert main(["sweep", "--theta-steps", "3", "--phi-steps", "3", "--out", str(out)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_out(self):
        assert main(["sweep", "--theta-steps", "3", "--phi-steps", "3"]) == 2


@pytest.mark.integration
class TestSubprocess:
    """Run the CLI as a separate process."""

    def _run(self, *args):
        return subprocess.run(
            [sys.executable, "-m", "cli", *args],
            cwd=ROOT,
            capture_output=True,
            text=True,
        )

    def test_exit_codes(self):
        assert self._run("check", "--d", "3", "--p", "0.3", "--coeffs", "1,1,1").returncode == 0
        assert self._run("check", "--d", "3", "--p", "0.2", "--coeffs", "1,1,1").returncode == 1
        failed = self._run("check", "--d", "3", "--p", "2", "--coeffs", "1,1,1")
        assert failed.returncode == 2
        assert failed.stderr.startswith("error:")

    def test_threshold_output(self):
        result = self._run("threshold", "--d", "3", "--coeffs", "1,1,0")
        assert result.returncode == 0
        assert result.stdout == "0.307692307692\n"
