"""Closed-form roots for 3 x 3 bipartite systems.

At d = 3 the nontrivial factor is the depressed cubic

    P_3(x) = x^3 - p^2 B2 x - 2 p^3 B3,
    B2 = a1^2 a2^2 + a1^2 a3^2 + a2^2 a3^2,   B3 = a1^2 a2^2 a3^2,

whose three real roots follow from the trigonometric method with amplitude
2 p sqrt(B2/3) and angle atan2(sqrt(B2^3 - 27 B3^2), sqrt(27) B3) / 3.
"""
import logging
import math

from analysis.schema import Cubic3x3Roots
from errors import DimensionMismatchError
from states.depolarized import f_d
from states.schmidt import SchmidtVector

logger = logging.getLogger(__name__)

# B2^3 - 27 B3^2 below -DISCRIMINANT_TOL cannot come from a unit vector
DISCRIMINANT_TOL = 1e-15
_SQRT_3 = math.sqrt(3.0)
_SQRT_27 = math.sqrt(27.0)


def cubic_coefficients(schmidt: SchmidtVector) -> tuple[float, float]:
    """(B2, B3) for a d=3 Schmidt vector."""
    if schmidt.d != 3:
        raise DimensionMismatchError(f"The cubic closed form needs d=3, got d={schmidt.d}")
    s1, s2, s3 = (float(s) for s in schmidt.squares)
    return s1 * s2 + s1 * s3 + s2 * s3, s1 * s2 * s3


def cubic3x3_roots(schmidt: SchmidtVector, p: float) -> Cubic3x3Roots:
    """Trigonometric roots of P_3 and the eigenvalues lambda_i = (2/9)(1-p) - x_i.

    B3 = 0 is handled by atan2 (angle pi/2), B2 = 0 returns the triple root 0.

    Raises:
        DimensionMismatchError: If d != 3
        ValueError: If p is outside [0, 1] or the discriminant is clearly negative
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    b2, b3 = cubic_coefficients(schmidt)

    discriminant = b2 ** 3 - 27.0 * b3 * b3
    if discriminant < 0.0:
        if discriminant < -DISCRIMINANT_TOL:
            raise ValueError(f"Negative cubic discriminant {discriminant:.3e} for a = {schmidt.a}")
        logger.debug(f"Clamping discriminant {discriminant:.3e} to 0")
        discriminant = 0.0

    amplitude = 2.0 * p * math.sqrt(b2 / 3.0)
    angle = math.atan2(math.sqrt(discriminant), _SQRT_27 * b3) / 3.0
    cos_a = math.cos(angle)
    sin_a = math.sin(angle)

    x1 = amplitude * cos_a
    x_plus = -0.5 * amplitude * (cos_a + _SQRT_3 * sin_a)
    x_minus = -0.5 * amplitude * (cos_a - _SQRT_3 * sin_a)

    shift = f_d(3, p)
    return Cubic3x3Roots(
        p=p,
        b2=b2,
        b3=b3,
        x1=x1,
        x_plus=x_plus,
        x_minus=x_minus,
        lambda1=shift - x1,
        lambda_plus=shift - x_plus,
        lambda_minus=shift - x_minus,
    )


def cubic_residual(roots: Cubic3x3Roots, x: float) -> float:
    """P_3(x) with the coefficients the roots were computed from."""
    p = roots.p
    return x ** 3 - p * p * roots.b2 * x - 2.0 * p ** 3 * roots.b3
