"""Minimum weight p* at which the RC matrix acquires a negative eigenvalue.

The nontrivial eigenvalues are f_d(p) - p x with x a root of P_d at p = 1, and the
trivial ones never go negative. The first crossing comes from the largest root x_hat:

    f_hat (1 - p) - p x_hat = 0   =>   p* = f_hat / (f_hat + x_hat),   f_hat = (d-1)/d^2.
"""
import logging
from typing import Literal, Optional

from analysis.cubic import cubic3x3_roots
from analysis.schema import ThresholdResult
from charpoly.polynomial import nontrivial_roots
from config import SogliaConfig, get_config
from errors import DimensionMismatchError
from linalg.jacobi import eigen_sym
from states.depolarized import DepolarizedState, f_d, rc_matrix_blocks
from states.schmidt import SchmidtVector

logger = logging.getLogger(__name__)

# Step above p* at which verify_threshold expects strict negativity
VERIFY_STEP = 1e-6
VERIFY_ZERO_TOL = 1e-9


def threshold_from_root(d: int, x_hat: float, root_tol: float) -> Optional[float]:
    """p* for a largest p=1 root x_hat, or None when x_hat <= root_tol."""
    if x_hat <= root_tol:
        return None
    f_hat = f_d(d, 0.0)
    return f_hat / (f_hat + x_hat)


def threshold(
    schmidt: SchmidtVector,
    method: Literal["generic", "cubic3x3"] = "generic",
    config: Optional[SogliaConfig] = None,
) -> ThresholdResult:
    """Minimum p guaranteeing RC negativity.

    Args:
        schmidt: Schmidt coefficients.
        method: "generic" (spectral roots of P_d, any d) or "cubic3x3" (closed form, d=3).
        config: Override config.

    Returns:
        ThresholdResult; p_star is None when the state is never RC-negative in (0, 1].
    """
    if config is None:
        config = get_config()

    if method == "generic":
        roots = nontrivial_roots(schmidt, 1.0, config=config)
        x_hat = float(roots[-1])
        # largest root
        family = "lambda1"
    elif method == "cubic3x3":
        if schmidt.d != 3:
            raise DimensionMismatchError(f"method 'cubic3x3' needs d=3, got d={schmidt.d}")
        by_family = cubic3x3_roots(schmidt, 1.0).roots()
        family = max(by_family, key=by_family.get)
        x_hat = by_family[family]
    else:
        raise ValueError(f"Unknown method '{method}'. Use 'generic' or 'cubic3x3'.")

    p_star = threshold_from_root(schmidt.d, x_hat, config.root_tol)
    logger.debug(f"threshold d={schmidt.d} method={method}: x_hat={x_hat:.6e} p_star={p_star}")
    return ThresholdResult(
        p_star=p_star,
        family=family if p_star is not None else None,
        x_hat=x_hat,
        method=method,
    )


def _min_eigenvalue(schmidt: SchmidtVector, p: float, config: SogliaConfig) -> float:
    return eigen_sym(rc_matrix_blocks(DepolarizedState(schmidt=schmidt, p=p)), config=config).min_eigenvalue


def bisection_threshold_oracle(
    schmidt: SchmidtVector,
    iterations: Optional[int] = None,
    config: Optional[SogliaConfig] = None,
) -> ThresholdResult:
    """Referee for ``threshold``: bisect p in [0, 1] on the sign of the Jacobi min eigenvalue.

    Absent when the min eigenvalue at p = 1 is not below -root_tol.
    """
    if config is None:
        config = get_config()
    if iterations is None:
        iterations = config.bisection_iterations

    if _min_eigenvalue(schmidt, 1.0, config) >= -config.root_tol:
        return ThresholdResult(method="bisection")

    lo, hi = 0.0, 1.0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if _min_eigenvalue(schmidt, mid, config) < 0.0:
            hi = mid
        else:
            lo = mid
    logger.debug(f"bisection d={schmidt.d}: bracket [{lo!r}, {hi!r}]")
    return ThresholdResult(p_star=hi, family="lambda1", method="bisection")


def verify_threshold(
    schmidt: SchmidtVector,
    result: ThresholdResult,
    config: Optional[SogliaConfig] = None,
) -> bool:
    """Check a present threshold: min eigenvalue ~0 at p*, negative just above it."""
    if config is None:
        config = get_config()
    if result.p_star is None:
        return _min_eigenvalue(schmidt, 1.0, config) >= -config.root_tol
    at_threshold = _min_eigenvalue(schmidt, result.p_star, config)
    above = _min_eigenvalue(schmidt, min(1.0, result.p_star + VERIFY_STEP), config)
    return abs(at_threshold) <= VERIFY_ZERO_TOL and above < 0.0
