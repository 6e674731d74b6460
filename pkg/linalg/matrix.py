"""Dense real symmetric matrices: construction, Kronecker products, partial trace.

Basis ordering for bipartite d x d systems is row-major: |ij> maps to index i*d + j.
"""
from typing import Optional, Sequence, Union

import numpy as np

from config import get_config
from errors import AsymmetryError, DimensionMismatchError

ArrayLike = Union[np.ndarray, Sequence[Sequence[float]]]


class SymMatrix:
    """Immutable dense real symmetric matrix.

    The constructor symmetrizes its input as (M + M^T) / 2 and records the largest
    asymmetry it removed. Inputs further from symmetric than ``asymmetry_tol`` are
    rejected, since every matrix built here is symmetric by construction.
    """

    __slots__ = ("_entries", "asymmetry")

    def __init__(self, entries: ArrayLike, asymmetry_tol: Optional[float] = None):
        if asymmetry_tol is None:
            asymmetry_tol = get_config().asymmetry_tol
        arr = np.array(entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DimensionMismatchError(f"SymMatrix needs a non-empty square array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("SymMatrix entries must be finite")

        asymmetry = float(np.max(np.abs(arr - arr.T)))
        if asymmetry > asymmetry_tol:
            raise AsymmetryError(f"Matrix asymmetry {asymmetry:.3e} exceeds tolerance {asymmetry_tol:.1e}")

        sym = (arr + arr.T) / 2
        sym.setflags(write=False)
        self._entries = sym
        self.asymmetry = asymmetry

    @classmethod
    def identity(cls, dim: int) -> "SymMatrix":
        if dim < 1:
            raise DimensionMismatchError(f"dim must be >= 1, got {dim}")
        return cls(np.eye(dim))

    @classmethod
    def diag(cls, values: Sequence[float]) -> "SymMatrix":
        return cls(np.diag(np.asarray(values, dtype=float)))

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the (dim, dim) entry array."""
        return self._entries

    def to_array(self) -> np.ndarray:
        """Writable copy of the entries."""
        return self._entries.copy()

    def trace(self) -> float:
        return float(np.trace(self._entries))

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self._entries))

    def allclose(self, other: "SymMatrix", atol: float) -> bool:
        """Elementwise comparison within an absolute tolerance."""
        if self.dim != other.dim:
            return False
        return bool(np.max(np.abs(self._entries - other._entries)) <= atol)

    def __getitem__(self, index):
        return self._entries[index]

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        _require_same_dim(self, other)
        return SymMatrix(self._entries + other._entries)

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        _require_same_dim(self, other)
        return SymMatrix(self._entries - other._entries)

    def __mul__(self, scalar: float) -> "SymMatrix":
        return SymMatrix(self._entries * float(scalar))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SymMatrix(dim={self.dim})"


def _require_same_dim(a: SymMatrix, b: SymMatrix) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Dimension mismatch: {a.dim} vs {b.dim}")


def kron(a: SymMatrix, b: SymMatrix) -> SymMatrix:
    """Kronecker product: result[(i*nb + k), (j*nb + l)] = a[i, j] * b[k, l]."""
    return SymMatrix(np.kron(a.entries, b.entries))


def partial_trace_b(m: SymMatrix, d: int) -> SymMatrix:
    """Trace out the second factor of a d x d bipartite operator.

    result[i, j] = sum_k m[(i*d + k), (j*d + k)]

    Raises:
        DimensionMismatchError: If m.dim != d**2
    """
    if d < 1 or m.dim != d * d:
        raise DimensionMismatchError(f"partial_trace_b expects dim {d}^2 = {d * d}, got {m.dim}")
    blocks = m.entries.reshape(d, d, d, d)
    return SymMatrix(np.einsum("ikjk->ij", blocks))
