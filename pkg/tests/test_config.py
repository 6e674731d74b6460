"""Unit tests for configuration."""
import tempfile
from pathlib import Path

import pytest

from config import SogliaConfig, get_config, reset_config, set_config


@pytest.fixture(autouse=True)
def _fresh_config():
    reset_config()
    yield
    reset_config()


class TestSogliaConfig:
    """Test the config dataclass."""

    def test_defaults(self):
        """Test default tolerances and sweep settings."""
        config = SogliaConfig()
        assert config.rc_tol == 1e-10
        assert config.root_match_tol == 1e-8
        assert config.root_tol == 1e-12
        assert config.bisection_iterations == 60
        assert config.sweep_theta_steps == 181
        assert config.sweep_phi_steps == 181
        assert config.output_format == "csv"
        assert config.float_format == "%.12g"

    def test_validation(self):
        """Test invalid values are rejected."""
        with pytest.raises(ValueError):
            SogliaConfig(output_format="xlsx")
        with pytest.raises(ValueError):
            SogliaConfig(rc_tol=0.0)
        with pytest.raises(ValueError):
            SogliaConfig(sweep_jobs=0)
        with pytest.raises(ValueError):
            SogliaConfig(sweep_theta_steps=1)
        with pytest.raises(ValueError):
            SogliaConfig(significant_digits=30)

    def test_from_values(self):
        """Test string values are converted by field type."""
        config = SogliaConfig.from_values({
            "SOGLIA_RC_TOL": "1e-8",
            "SOGLIA_SWEEP_JOBS": "4",
            "SOGLIA_OUTPUT_FORMAT": "parquet",
        })
        assert config.rc_tol == 1e-8
        assert config.sweep_jobs == 4
        assert config.output_format == "parquet"

    def test_from_values_rejects_unknown_keys(self):
        """Test typos do not pass silently."""
        with pytest.raises(ValueError):
            SogliaConfig.from_values({"SOGLIA_RC_TOLERANCE": "1e-8"})
        with pytest.raises(ValueError):
            SogliaConfig.from_values({"RC_TOL": "1e-8"})

    def test_from_file(self):
        """Test loading a dotenv-format file."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "soglia.env"
            path.write_text("# tolerances\nSOGLIA_ROOT_TOL=1e-10\nSOGLIA_BISECTION_ITERATIONS=40\n")
            config = SogliaConfig.from_file(path)
        assert config.root_tol == 1e-10
        assert config.bisection_iterations == 40
        assert config.rc_tol == 1e-10

    def test_from_file_missing(self):
        """Test a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            SogliaConfig.from_file("does/not/exist.env")

    def test_environment_is_ignored(self, monkeypatch):
        """Test the process environment never reaches the config."""
        monkeypatch.setenv("SOGLIA_RC_TOL", "0.5")
        assert get_config().rc_tol == 1e-10


class TestGlobalConfig:
    """Test the global accessor."""

    def test_get_config_is_cached(self):
        assert get_config() is get_config()

    def test_set_and_reset(self):
        custom = SogliaConfig(rc_tol=1e-6)
        set_config(custom)
        assert get_config() is custom
        reset_config()
        assert get_config().rc_tol == 1e-10
