"""Unified configuration for Soglia.

All numeric tolerances, iteration budgets and sweep/output defaults live in one place.
Values come from the dataclass defaults or from a dotenv-format file passed to the CLI
with ``--config``; the process environment is never consulted.
"""
import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Mapping, Optional, Union

from dotenv import dotenv_values

logger = logging.getLogger(__name__)

_KEY_PREFIX = "SOGLIA_"


@dataclass
class SogliaConfig:
    """Unified configuration for all Soglia modules.

    Attributes:
        # Linear algebra
        eigen_rel_tol: Jacobi tolerance as a fraction of the Frobenius norm
        eigen_tol_floor: Smallest absolute Jacobi tolerance
        eigen_max_sweeps: Sweep budget before the eigensolver gives up
        asymmetry_tol: Largest |M - M^T| entry accepted by SymMatrix

        # States
        normalization_tol: Accepted drift of sum(a_i^2) from 1 for SchmidtVector

        # Reduction criterion
        rc_tol: Min eigenvalue below -rc_tol counts as RC-negative
        root_match_tol: Tolerance for removing trivial eigenvalues from the block spectrum
        root_tol: Largest nontrivial root at p=1 below this counts as zero (no threshold)
        bisection_iterations: Iterations of the bisection threshold referee

        # Sweep / output
        sweep_theta_steps: Default number of theta grid nodes
        sweep_phi_steps: Default number of phi grid nodes
        sweep_jobs: Default number of sweep worker processes
        output_format: Sweep output format ("csv" | "parquet")
        significant_digits: Significant digits in reports and CSV output
    """

    # Linear algebra
    eigen_rel_tol: float = 1e-12
    eigen_tol_floor: float = 1e-300
    eigen_max_sweeps: int = 100
    asymmetry_tol: float = 1e-9

    # States
    normalization_tol: float = 1e-12

    # Reduction criterion
    rc_tol: float = 1e-10
    root_match_tol: float = 1e-8
    root_tol: float = 1e-12
    bisection_iterations: int = 60

    # Sweep / output
    sweep_theta_steps: int = 181
    sweep_phi_steps: int = 181
    sweep_jobs: int = 1
    output_format: str = "csv"
    significant_digits: int = 12

    def __post_init__(self):
        """Validate configuration values."""
        for name in ("eigen_rel_tol", "eigen_tol_floor", "asymmetry_tol", "normalization_tol",
                     "rc_tol", "root_match_tol", "root_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

        if self.eigen_max_sweeps < 1:
            raise ValueError(f"eigen_max_sweeps must be >= 1, got {self.eigen_max_sweeps}")
        if self.bisection_iterations < 1:
            raise ValueError(f"bisection_iterations must be >= 1, got {self.bisection_iterations}")
        if self.sweep_theta_steps < 2 or self.sweep_phi_steps < 2:
            raise ValueError(
                f"sweep steps must be >= 2, got {self.sweep_theta_steps}x{self.sweep_phi_steps}"
            )
        if self.sweep_jobs < 1:
            raise ValueError(f"sweep_jobs must be >= 1, got {self.sweep_jobs}")
        if self.output_format not in ("csv", "parquet"):
            raise ValueError(
                f"output_format must be 'csv' or 'parquet', got '{self.output_format}'"
            )
        if not 1 <= self.significant_digits <= 17:
            raise ValueError(f"significant_digits must be in [1, 17], got {self.significant_digits}")

    @property
    def float_format(self) -> str:
        """printf-style format for report and CSV numbers."""
        return f"%.{self.significant_digits}g"

    @classmethod
    def from_values(cls, values: Mapping[str, Optional[str]]) -> "SogliaConfig":
        """Build a config from string key/value pairs.

        Keys are the field names upper-cased with the ``SOGLIA_`` prefix, e.g.
        ``SOGLIA_RC_TOL=1e-10``. Unknown keys are rejected.

        Raises:
            ValueError: On unknown keys or unparsable values
        """
        types = {f.name: f.type for f in fields(cls)}
        kwargs = {}
        for key, raw in values.items():
            if not key.startswith(_KEY_PREFIX):
                raise ValueError(f"Config key '{key}' must start with {_KEY_PREFIX}")
            name = key[len(_KEY_PREFIX):].lower()
            if name not in types:
                raise ValueError(f"Unknown config key '{key}'")
            if raw is None:
                continue
            field_type = types[name]
            if field_type in (int, "int"):
                kwargs[name] = int(raw)
            elif field_type in (float, "float"):
                kwargs[name] = float(raw)
            else:
                kwargs[name] = raw.strip()
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "SogliaConfig":
        """Load configuration from a dotenv-format file.

        Args:
            path: File with ``SOGLIA_*`` assignments, one per line

        Returns:
            SogliaConfig with file values over the defaults

        Raises:
            FileNotFoundError: If the file does not exist
        """
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(f"Config file not found: {path}")
        values = dotenv_values(path)
        logger.debug(f"Loaded {len(values)} config values from {path}")
        return cls.from_values(values)


# Global config instance (lazy loaded)
_config: Optional[SogliaConfig] = None


def get_config() -> SogliaConfig:
    """Get the global config instance (defaults on first call).

    Returns:
        SogliaConfig instance
    """
    global _config
    if _config is None:
        _config = SogliaConfig()
    return _config


def set_config(config: SogliaConfig) -> None:
    """Install a config as the global instance (the CLI does this for --config)."""
    global _config
    _config = config


def reset_config() -> None:
    """Reset the global config instance (useful for testing)."""
    global _config
    _config = None
