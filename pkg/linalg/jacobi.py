"""Cyclic Jacobi eigensolver for dense real symmetric matrices.

This is the brute-force oracle every closed-form spectrum in the package is checked
against, so it relies on nothing but elementwise numpy arithmetic.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import SogliaConfig, get_config
from errors import ConvergenceError
from linalg.matrix import SymMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (ascending) with the rotations that diagonalize the input.

    Attributes:
        eigenvalues: Sorted ascending, one per matrix dimension
        eigenvectors: Columns are the eigenvectors, in eigenvalue order
        max_offdiag_residual: Largest off-diagonal magnitude left at exit
        tol: Convergence tolerance the solve ran with
        sweeps: Number of sweeps performed
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    max_offdiag_residual: float
    tol: float
    sweeps: int

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])

    def reconstruct(self) -> np.ndarray:
        """V diag(lambda) V^T."""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T


def default_tolerance(m: SymMatrix, config: Optional[SogliaConfig] = None) -> float:
    """Scale-aware tolerance: eigen_rel_tol * ||m||_F, never below eigen_tol_floor."""
    if config is None:
        config = get_config()
    return max(config.eigen_rel_tol * m.frobenius_norm(), config.eigen_tol_floor)


def _max_offdiag(a: np.ndarray) -> float:
    if a.shape[0] < 2:
        return 0.0
    off = np.abs(a - np.diag(np.diag(a)))
    return float(off.max())


def eigen_sym(
    m: SymMatrix,
    tol: Optional[float] = None,
    max_sweeps: Optional[int] = None,
    config: Optional[SogliaConfig] = None,
) -> Spectrum:
    """Diagonalize a symmetric matrix with cyclic Jacobi rotations.

    Sweeps over all (p, q) pairs in row order, rotating away every off-diagonal entry
    larger than ``tol``, until none is left.

    Args:
        m: Matrix to diagonalize.
        tol: Off-diagonal convergence tolerance (default: scale-aware, see default_tolerance).
        max_sweeps: Sweep budget (default: config.eigen_max_sweeps).
        config: Override config.

    Returns:
        Spectrum with ascending eigenvalues.

    Raises:
        ValueError: If tol is not positive.
        ConvergenceError: If the sweep budget runs out.
    """
    if config is None:
        config = get_config()
    if tol is None:
        tol = default_tolerance(m, config)
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_sweeps is None:
        max_sweeps = config.eigen_max_sweeps

    a = m.to_array()
    n = m.dim
    v = np.eye(n)

    sweeps = 0
    residual = _max_offdiag(a)
    while residual > tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (residual {residual:.3e}, tol {tol:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
        sweeps += 1
        residual = _max_offdiag(a)
        logger.debug(f"Jacobi sweep {sweeps}: residual {residual:.3e}")

    diagonal = np.diag(a)
    order = np.argsort(diagonal, kind="stable")
    return Spectrum(
        eigenvalues=diagonal[order].copy(),
        eigenvectors=v[:, order].copy(),
        max_offdiag_residual=residual,
        tol=tol,
        sweeps=sweeps,
    )
