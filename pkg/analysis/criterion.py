"""Reduction-criterion negativity test: rho_A (x) I - rho with a negative eigenvalue is distillable."""
import logging
from typing import Optional

from analysis.cubic import cubic3x3_roots
from analysis.schema import Method, RcVerdict
from charpoly.polynomial import full_spectrum_from_poly
from config import SogliaConfig, get_config
from linalg.jacobi import eigen_sym
from states.depolarized import DepolarizedState, f_d, rc_matrix_blocks

logger = logging.getLogger(__name__)


def min_rc_eigenvalue(
    state: DepolarizedState,
    method: Method = "oracle",
    config: Optional[SogliaConfig] = None,
) -> float:
    """Smallest RC eigenvalue by the chosen method.

    oracle: Jacobi on the assembled matrix; charpoly: factorized spectrum;
    cubic3x3: trigonometric roots plus the smallest trivial eigenvalue (d=3 only).
    """
    if config is None:
        config = get_config()
    if method == "oracle":
        return eigen_sym(rc_matrix_blocks(state), config=config).min_eigenvalue
    if method == "charpoly":
        return float(full_spectrum_from_poly(state.schmidt, state.p, config=config)[0])
    if method == "cubic3x3":
        roots = cubic3x3_roots(state.schmidt, state.p)
        trivial = f_d(3, state.p) + state.p * float(state.schmidt.squares.min())
        return min(min(roots.eigenvalues().values()), trivial)
    raise ValueError(f"Unknown method '{method}'. Use 'oracle', 'charpoly' or 'cubic3x3'.")


def rc_check(
    state: DepolarizedState,
    tol: Optional[float] = None,
    method: Method = "oracle",
    config: Optional[SogliaConfig] = None,
) -> RcVerdict:
    """Decide whether RC detects distillability of a depolarized state.

    Args:
        state: State to test.
        tol: Negativity tolerance on the min eigenvalue (default: config.rc_tol).
        method: "oracle", "charpoly" or "cubic3x3".
        config: Override config.

    Returns:
        RcVerdict with distillable_by_rc = min_eigenvalue < -tol.
    """
    if config is None:
        config = get_config()
    if tol is None:
        tol = config.rc_tol
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")

    min_eigenvalue = min_rc_eigenvalue(state, method=method, config=config)
    verdict = RcVerdict(
        min_eigenvalue=min_eigenvalue,
        distillable_by_rc=min_eigenvalue < -tol,
        method=method,
        tol=tol,
    )
    logger.debug(f"rc_check d={state.d} p={state.p} method={method}: min eigenvalue {min_eigenvalue:.6e}")
    return verdict
