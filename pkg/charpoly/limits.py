"""Closed-form thresholds for maximally entangled and rank-deficient states."""
from errors import InvalidRankError


def _require_dimension(d: int) -> None:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")


def maxent_threshold(d: int) -> float:
    """RC detects the depolarized maximally entangled state for p > 1/(d+1)."""
    _require_dimension(d)
    return 1.0 / (d + 1)


def maxent_min_eigenvalue(d: int, p: float) -> float:
    """The only eigenvalue that can turn negative in the maximally entangled case.

    lambda = (d - 1)/d^2 + (1 - d^2)/d^2 * p, which vanishes at p = 1/(d+1).
    """
    _require_dimension(d)
    return (d - 1) / (d * d) + (1 - d * d) / (d * d) * p


def _require_rank(d: int, j: int) -> None:
    _require_dimension(d)
    if j < 0:
        raise InvalidRankError(f"j must be >= 0, got {j}")
    if j > d - 2:
        raise InvalidRankError(
            f"j={j} leaves {d - j} nonzero coefficient(s) in d={d}; at least two are needed for entanglement"
        )


def rank_deficient_root(d: int, j: int, p: float) -> float:
    """Largest root x = p (d-j-1)/(d-j) of P_d for the embedded (d-j)-dimensional maximally entangled state."""
    _require_rank(d, j)
    return p * (d - j - 1) / (d - j)


def rank_deficient_threshold(d: int, j: int) -> float:
    """Minimum p for an embedded (d-j)-dimensional maximally entangled state.

    p* = (d-1)(d-j) / ((d^2-1)(d-j) - d j); j = 0 gives 1/(d+1).

    Raises:
        InvalidRankError: If j > d - 2
    """
    _require_rank(d, j)
    return (d - 1) * (d - j) / ((d * d - 1) * (d - j) - d * j)
