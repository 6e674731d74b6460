"""Depolarized bipartite states and their reduction-criterion matrices.

rho = p |psi><psi| + (1 - p) / d^2 * I, with |psi> given by a SchmidtVector.
The RC matrix rho_A (x) I - rho is built two independent ways, by d x d block
assembly and by the direct operator formula, so each can referee the other.
"""
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from linalg.matrix import SymMatrix, kron
from states.schmidt import SchmidtVector


class DepolarizedState(BaseModel):
    """A pure Schmidt-form state mixed with white noise at weight 1 - p."""

    model_config = ConfigDict(frozen=True)

    schmidt: SchmidtVector
    p: float = Field(ge=0.0, le=1.0, description="Weight of the pure component")

    @property
    def d(self) -> int:
        return self.schmidt.d

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[float], p: float, d: Optional[int] = None) -> "DepolarizedState":
        """Build from unnormalized coefficients (normalized on the way in)."""
        return cls(schmidt=SchmidtVector.from_unnormalized(coeffs, d=d), p=p)


def f_d(d: int, p: float) -> float:
    """Isotropic shift of the RC matrix: (d - 1)(1 - p) / d^2."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    return (d - 1) * (1.0 - p) / (d * d)


def _psi_vector(schmidt: SchmidtVector) -> np.ndarray:
    d = schmidt.d
    psi = np.zeros(d * d)
    psi[np.arange(d) * (d + 1)] = schmidt.as_array()
    return psi


def density_matrix(state: DepolarizedState) -> SymMatrix:
    """The d^2 x d^2 density matrix."""
    d = state.d
    psi = _psi_vector(state.schmidt)
    rho = state.p * np.outer(psi, psi) + (1.0 - state.p) / (d * d) * np.eye(d * d)
    return SymMatrix(rho)


def reduced_state(state: DepolarizedState) -> SymMatrix:
    """Closed form of Tr_B rho: p diag(a_i^2) + (1 - p)/d I."""
    d = state.d
    return SymMatrix(state.p * np.diag(state.schmidt.squares) + (1.0 - state.p) / d * np.eye(d))


def rc_matrix_blocks(state: DepolarizedState) -> SymMatrix:
    """RC matrix assembled from d x d blocks.

    Block (i, i) is a_i^2 (I - D[i, i]), block (i, j) is -a_i a_j D[i, j]; the block
    matrix is scaled by p and f_d(p) is added on the diagonal.
    """
    d = state.d
    a = state.schmidt.as_array()
    blocks = np.zeros((d * d, d * d))
    for i in range(d):
        rows = slice(i * d, (i + 1) * d)
        diag_block = a[i] * a[i] * np.eye(d)
        diag_block[i, i] = 0.0
        blocks[rows, rows] = diag_block
        for j in range(d):
            if j != i:
                blocks[i * d + i, j * d + j] = -a[i] * a[j]
    return SymMatrix(state.p * blocks + f_d(d, state.p) * np.eye(d * d))


def rc_matrix_direct(state: DepolarizedState) -> SymMatrix:
    """RC matrix straight from its definition, rho_A (x) I - rho."""
    return kron(reduced_state(state), SymMatrix.identity(state.d)) - density_matrix(state)
