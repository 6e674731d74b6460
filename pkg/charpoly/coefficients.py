"""Coefficients A_k^d of the nontrivial characteristic factor.

A_k^d is the degree-k elementary symmetric polynomial of a_1^2..a_d^2. It is computed
twice: by the nested recursion over leading sub-vectors, and by convolving
prod_i (1 + a_i^2 t) as an independent referee.
"""
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from states.schmidt import SchmidtVector


@dataclass(frozen=True)
class SymCoeffs:
    """A[k] = A_k^d for k = 0..d, with A[0] = 1."""

    d: int
    A: tuple[float, ...]

    def __getitem__(self, k: int) -> float:
        return self.A[k]


def sym_coeffs_recursive(schmidt: SchmidtVector) -> SymCoeffs:
    """A_k^d by the recursion

        A_k^d = sum_{j=0}^{d-k} A_{k-1}^{d-j-1} (A_1^{d-j} - A_1^{d-j-1}),
        A_1^m = sum_{l<=m} a_l^2,

    where the superscript m means "using only a_1..a_m". Boundary values:
    A_0^m = 1 for m >= 0, A_k^m = 0 when k > m.
    """
    d = schmidt.d
    squares = schmidt.squares
    # table[k][m] = A_k^m
    table = np.zeros((d + 1, d + 1))
    table[0, :] = 1.0
    table[1, 1:] = np.cumsum(squares)

    for k in range(2, d + 1):
        for m in range(k, d + 1):
            total = 0.0
            for j in range(m - k + 1):
                total += table[k - 1, m - j - 1] * (table[1, m - j] - table[1, m - j - 1])
            table[k, m] = total

    return SymCoeffs(d=d, A=tuple(float(x) for x in table[:, d]))


def sym_coeffs_oracle(schmidt: SchmidtVector) -> SymCoeffs:
    """e_k(a_1^2, ..., a_d^2) read off prod_i (1 + a_i^2 t)."""
    product = np.array([1.0])
    for s in schmidt.squares:
        product = P.polymul(product, [1.0, s])
    coeffs = np.zeros(schmidt.d + 1)
    coeffs[: product.size] = product
    return SymCoeffs(d=schmidt.d, A=tuple(float(x) for x in coeffs))
