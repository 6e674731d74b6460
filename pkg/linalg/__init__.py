"""Dense real symmetric linear algebra and the Jacobi eigensolver oracle."""
from linalg.jacobi import Spectrum, default_tolerance, eigen_sym
from linalg.matrix import SymMatrix, kron, partial_trace_b

__all__ = [
    "SymMatrix",
    "kron",
    "partial_trace_b",
    "Spectrum",
    "eigen_sym",
    "default_tolerance",
]
