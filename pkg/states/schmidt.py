"""Schmidt coefficient vectors of bipartite pure states |psi> = sum_i a_i |ii>.

Coefficients are real; negative values are allowed since only squares and pairwise
products reach the reduction-criterion matrix.
"""
import math
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config import get_config
from errors import DimensionMismatchError, NormalizationError


class SchmidtVector(BaseModel):
    """Unit-normalized Schmidt coefficients a_1..a_d.

    Direct construction accepts a normalization drift up to ``normalization_tol``
    and renormalizes; use ``from_unnormalized`` for arbitrary nonzero input.
    """

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=2, description="Local dimension of each subsystem")
    a: tuple[float, ...] = Field(description="Schmidt coefficients, sum of squares 1")

    @field_validator("a")
    @classmethod
    def _renormalize(cls, a: tuple[float, ...]) -> tuple[float, ...]:
        arr = np.asarray(a, dtype=float)
        if not np.all(np.isfinite(arr)):
            raise NormalizationError("Schmidt coefficients must be finite")
        norm_sq = float(np.sum(arr * arr))
        drift = abs(norm_sq - 1.0)
        tol = get_config().normalization_tol
        if drift > tol:
            raise NormalizationError(
                f"sum(a_i^2) = {norm_sq!r} drifts {drift:.3e} from 1 (tolerance {tol:.1e})"
            )
        return tuple(float(x) for x in arr / math.sqrt(norm_sq))

    @model_validator(mode="after")
    def _check_length(self) -> "SchmidtVector":
        if len(self.a) != self.d:
            raise DimensionMismatchError(f"Expected {self.d} coefficients, got {len(self.a)}")
        return self

    @classmethod
    def from_unnormalized(cls, coeffs: Sequence[float], d: Optional[int] = None) -> "SchmidtVector":
        """Normalize arbitrary nonzero coefficients, e.g. ``[1, 1, 1]`` for the maximally entangled state.

        Raises:
            DimensionMismatchError: If d is given and differs from len(coeffs)
            NormalizationError: If the coefficients are all zero or not finite
        """
        arr = np.asarray(coeffs, dtype=float)
        if d is not None and arr.size != d:
            raise DimensionMismatchError(f"d={d} but {arr.size} coefficients were given")
        if not np.all(np.isfinite(arr)):
            raise NormalizationError("Schmidt coefficients must be finite")
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise NormalizationError("Schmidt coefficients cannot all be zero")
        return cls(d=arr.size, a=tuple(arr / norm))

    @classmethod
    def maximally_entangled(cls, d: int, j: int = 0) -> "SchmidtVector":
        """(d-j)-dimensional maximally entangled state embedded in d dimensions.

        The first d-j coefficients equal 1/sqrt(d-j), the last j are zero.
        """
        if not 0 <= j <= d - 1:
            raise ValueError(f"j must be in [0, {d - 1}], got {j}")
        rank = d - j
        value = 1.0 / math.sqrt(rank)
        return cls(d=d, a=(value,) * rank + (0.0,) * j)

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "SchmidtVector":
        """d=3 spherical parametrisation: (sin t sin f, cos t sin f, cos f)."""
        sin_phi = math.sin(phi)
        return cls(
            d=3,
            a=(math.sin(theta) * sin_phi, math.cos(theta) * sin_phi, math.cos(phi)),
        )

    def as_array(self) -> np.ndarray:
        return np.asarray(self.a, dtype=float)

    @property
    def squares(self) -> np.ndarray:
        """a_i^2, the only combination besides a_i a_j that enters the RC matrix."""
        arr = self.as_array()
        return arr * arr

    @property
    def rank(self) -> int:
        """Number of nonzero coefficients."""
        return int(np.count_nonzero(self.as_array()))

    def truncated(self) -> "SchmidtVector":
        """Drop zero coefficients (needs at least two nonzero ones)."""
        nonzero = [x for x in self.a if x != 0.0]
        return SchmidtVector(d=len(nonzero), a=tuple(nonzero))
