"""Johnson matrix and the headline invariants of a triple"""

from .frobenius import Invariants3, gap_generating_function, hilbert_series, invariants
from .johnson import DiagonalTriple, JohnsonMatrix, diagonal_via_psi, diagonal_via_xi, off_diagonal

__all__ = [
    "Invariants3",
    "invariants",
    "hilbert_series",
    "gap_generating_function",
    "DiagonalTriple",
    "JohnsonMatrix",
    "diagonal_via_xi",
    "diagonal_via_psi",
    "off_diagonal",
]
