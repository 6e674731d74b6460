"""Exception types raised across Soglia.

Each class also derives from the builtin a caller would expect, so code that
catches ValueError or RuntimeError keeps working.
"""


class SogliaError(Exception):
    """Base class for all Soglia errors."""


class DimensionMismatchError(SogliaError, ValueError):
    """Matrix or state dimensions do not fit the requested operation."""


class AsymmetryError(SogliaError, ValueError):
    """A matrix handed to SymMatrix is too far from symmetric."""


class ConvergenceError(SogliaError, RuntimeError):
    """The Jacobi eigensolver exhausted its sweep budget."""


class NormalizationError(SogliaError, ValueError):
    """Schmidt coefficients cannot be (re)normalized."""


class RootExtractionError(SogliaError, RuntimeError):
    """Trivial eigenvalues could not be matched inside the block spectrum."""


class InvalidRankError(SogliaError, ValueError):
    """Too few nonzero Schmidt coefficients for an entangled limit."""
