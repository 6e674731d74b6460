"""Characteristic-polynomial machinery for reduction-criterion spectra."""
from charpoly.coefficients import SymCoeffs, sym_coeffs_oracle, sym_coeffs_recursive
from charpoly.limits import (
    maxent_min_eigenvalue,
    maxent_threshold,
    rank_deficient_root,
    rank_deficient_threshold,
)
from charpoly.polynomial import (
    CharPoly,
    eval_poly,
    full_spectrum_from_poly,
    maxent_poly,
    nontrivial_poly,
    nontrivial_roots,
    rank_deficient_poly,
)

__all__ = [
    # Coefficients
    "SymCoeffs",
    "sym_coeffs_recursive",
    "sym_coeffs_oracle",
    # Polynomials
    "CharPoly",
    "nontrivial_poly",
    "eval_poly",
    "nontrivial_roots",
    "full_spectrum_from_poly",
    "maxent_poly",
    "rank_deficient_poly",
    # Closed forms
    "maxent_threshold",
    "maxent_min_eigenvalue",
    "rank_deficient_root",
    "rank_deficient_threshold",
]
