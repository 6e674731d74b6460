"""Result schemas for reduction-criterion decisions, thresholds and sweeps.

These are the structures the CLI reports and serializes.
"""
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

Method = Literal["oracle", "charpoly", "cubic3x3"]
ThresholdMethod = Literal["generic", "cubic3x3", "bisection"]
Family = Literal["lambda1", "lambda+", "lambda-"]


class RcVerdict(BaseModel):
    """Outcome of the RC negativity test.

    A negative verdict means "not detected by RC", never "undistillable".
    """

    min_eigenvalue: float = Field(description="Smallest eigenvalue of rho_A (x) I - rho")
    distillable_by_rc: bool = Field(description="min_eigenvalue < -tol")
    method: Method
    tol: float = Field(gt=0.0)

    @model_validator(mode="after")
    def _consistent(self) -> "RcVerdict":
        if self.distillable_by_rc != (self.min_eigenvalue < -self.tol):
            raise ValueError("distillable_by_rc must equal (min_eigenvalue < -tol)")
        return self


class Cubic3x3Roots(BaseModel):
    """Trigonometric roots of the d=3 depressed cubic and the matching RC eigenvalues.

    x1 is the cos(angle/3) branch; x_plus and x_minus are its two companions.
    lambda_i = (2/9)(1 - p) - x_i.
    """

    p: float
    b2: float = Field(ge=0.0)
    b3: float = Field(ge=0.0)
    x1: float
    x_plus: float
    x_minus: float
    lambda1: float
    lambda_plus: float
    lambda_minus: float

    def roots(self) -> dict[str, float]:
        """Roots keyed by family name."""
        return {"lambda1": self.x1, "lambda+": self.x_plus, "lambda-": self.x_minus}

    def eigenvalues(self) -> dict[str, float]:
        return {"lambda1": self.lambda1, "lambda+": self.lambda_plus, "lambda-": self.lambda_minus}


class ThresholdResult(BaseModel):
    """Minimum p at which the RC matrix turns negative, or None if it never does in (0, 1].

    Attributes:
        p_star: Threshold, absent when the largest nontrivial root at p=1 is not positive
        family: Root family that crosses zero first. "lambda1" is the largest-root family;
            only the d=3 closed form can name another branch
        x_hat: Largest nontrivial root at p = 1 (None for the bisection referee)
        method: How the threshold was computed
    """

    p_star: Optional[float] = Field(None, gt=0.0, le=1.0)
    family: Optional[Family] = None
    x_hat: Optional[float] = None
    method: ThresholdMethod

    @property
    def present(self) -> bool:
        return self.p_star is not None

    def to_report(self) -> dict:
        """The {"p_star", "family"} object printed by ``threshold --json``."""
        return {"p_star": self.p_star, "family": self.family}


class SweepRow(BaseModel):
    """One (theta, phi) cell of the d=3 threshold sweep."""

    theta: float
    phi: float
    a1: float
    a2: float
    a3: float
    p_star: Optional[float] = None
    family: Optional[Family] = None

    @model_validator(mode="after")
    def _absent_together(self) -> "SweepRow":
        if (self.p_star is None) != (self.family is None):
            raise ValueError("p_star and family must be absent together")
        return self
