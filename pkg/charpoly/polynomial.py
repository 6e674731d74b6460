"""Characteristic polynomial of the RC matrix and its spectrum.

With the substitution x = f_d(p) - lambda the characteristic polynomial factors into

    P_d(x) * prod_i (f_d(p) - lambda + p a_i^2)^(d-1),

    P_d(x) = x^d - sum_{i=0}^{d-2} (d-i-1) p^(d-i) A_{d-i}^d x^i.

Only the roots of P_d can make an eigenvalue negative. Every coefficient of x^i
carries p^(d-i), so the roots scale linearly in p and one spectral decomposition at
p = 1 serves every p.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from config import SogliaConfig, get_config
from errors import RootExtractionError
from linalg.jacobi import eigen_sym
from states.depolarized import DepolarizedState, f_d, rc_matrix_blocks
from states.schmidt import SchmidtVector
from charpoly.coefficients import sym_coeffs_recursive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharPoly:
    """Nontrivial factor P_d(x) plus the roots of the trivial factor.

    Attributes:
        d: Local dimension
        p: Pure-state weight
        coeffs: d+1 coefficients of P_d in ascending powers of x (monic, x^(d-1) term 0)
        trivial_roots: (eigenvalue f_d(p) + p a_i^2, multiplicity d-1) per coefficient
    """

    d: int
    p: float
    coeffs: tuple[float, ...]
    trivial_roots: tuple[tuple[float, int], ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _trivial_roots(schmidt: SchmidtVector, p: float) -> tuple[tuple[float, int], ...]:
    shift = f_d(schmidt.d, p)
    return tuple((shift + p * float(s), schmidt.d - 1) for s in schmidt.squares)


def nontrivial_poly(schmidt: SchmidtVector, p: float) -> CharPoly:
    """P_d(x) for a Schmidt vector at weight p, coefficients from the A_k^d recursion."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    d = schmidt.d
    A = sym_coeffs_recursive(schmidt)
    coeffs = [0.0] * (d + 1)
    for i in range(d - 1):
        coeffs[i] = -(d - i - 1) * p ** (d - i) * A[d - i]
    coeffs[d - 1] = 0.0
    coeffs[d] = 1.0
    return CharPoly(d=d, p=p, coeffs=tuple(coeffs), trivial_roots=_trivial_roots(schmidt, p))


def eval_poly(cp: CharPoly, x: float) -> float:
    """Horner evaluation of P_d at x."""
    result = 0.0
    for c in reversed(cp.coeffs):
        result = result * x + c
    return result


def _match_and_remove(values: list[float], targets: list[float], tol: float) -> list[float]:
    """Delete the nearest entry of ``values`` for each target; ties go to the lowest index."""
    remaining = list(values)
    for target in targets:
        distances = [abs(v - target) for v in remaining]
        k = int(np.argmin(distances))
        if distances[k] > tol:
            raise RootExtractionError(
                f"No eigenvalue within {tol:.1e} of trivial value {target!r} (nearest off by {distances[k]:.3e})"
            )
        del remaining[k]
    return remaining


def nontrivial_roots(
    schmidt: SchmidtVector,
    p: float = 1.0,
    config: Optional[SogliaConfig] = None,
) -> np.ndarray:
    """The d real roots of P_d at weight p, ascending.

    The block matrix (the RC matrix at p = 1, where f_d vanishes) is diagonalized;
    its trivial eigenvalues a_i^2 (each d-1 times) are removed by nearest match and
    the d survivors give the roots at p = 1 as x = -lambda'. Roots at p are p times
    those.

    Raises:
        RootExtractionError: If a trivial eigenvalue is not found within root_match_tol
    """
    if config is None:
        config = get_config()
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")

    block = rc_matrix_blocks(DepolarizedState(schmidt=schmidt, p=1.0))
    spectrum = eigen_sym(block, config=config)
    trivial = [float(s) for s in schmidt.squares for _ in range(schmidt.d - 1)]
    survivors = _match_and_remove([float(x) for x in spectrum.eigenvalues], trivial, config.root_match_tol)
    logger.debug(f"Extracted {len(survivors)} nontrivial eigenvalues from {block.dim}x{block.dim} block matrix")

    roots = np.sort(-np.asarray(survivors)) * p
    return roots


def full_spectrum_from_poly(
    schmidt: SchmidtVector,
    p: float,
    config: Optional[SogliaConfig] = None,
) -> np.ndarray:
    """All d^2 RC eigenvalues from the factorization, ascending.

    Nontrivial: f_d(p) - x for each root x of P_d; trivial: f_d(p) + p a_i^2, d-1 times each.
    """
    shift = f_d(schmidt.d, p)
    nontrivial = shift - nontrivial_roots(schmidt, p, config=config)
    trivial = [value for value, mult in _trivial_roots(schmidt, p) for _ in range(mult)]
    return np.sort(np.concatenate([nontrivial, trivial]))


def _maxent_factor_coeffs(rank: int, p: float) -> np.ndarray:
    """Ascending coefficients of -(1/r^r) (p + r x)^(r-1) ((r-1) p - r x)."""
    factor = P.polymul(P.polypow([p, rank], rank - 1), [(rank - 1) * p, -rank])
    coeffs = -factor / rank ** rank
    full = np.zeros(rank + 1)
    full[: coeffs.size] = coeffs
    return full


def maxent_poly(d: int, p: float) -> CharPoly:
    """Factored form of P_d for the maximally entangled state a_i = d^(-1/2)."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    coeffs = _maxent_factor_coeffs(d, p)
    return CharPoly(
        d=d,
        p=p,
        coeffs=tuple(float(c) for c in coeffs),
        trivial_roots=_trivial_roots(SchmidtVector.maximally_entangled(d), p),
    )


def rank_deficient_poly(d: int, j: int, p: float) -> CharPoly:
    """P_d for a (d-j)-dimensional maximally entangled state embedded in d dimensions.

    Zero coefficients contribute nothing to any A_k, so P_d(x) = x^j P_{d-j}(x) with
    P_{d-j} in its factored maximally entangled form.
    """
    if not 0 <= j <= d - 2:
        raise ValueError(f"j must be in [0, {d - 2}], got {j}")
    reduced = _maxent_factor_coeffs(d - j, p)
    coeffs = np.concatenate([np.zeros(j), reduced])
    return CharPoly(
        d=d,
        p=p,
        coeffs=tuple(float(c) for c in coeffs),
        trivial_roots=_trivial_roots(SchmidtVector.maximally_entangled(d, j), p),
    )
