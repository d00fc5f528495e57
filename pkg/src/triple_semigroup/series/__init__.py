"""Sparse power series, Hadamard products and the Psi_k construction"""

from .psi import PsiSeries, psi, psi_numeric, xi_numeric
from .sparse import SparseSeries, circ, hadamard, multisection, tau, tau_inverse

__all__ = [
    "SparseSeries",
    "hadamard",
    "circ",
    "multisection",
    "tau",
    "tau_inverse",
    "PsiSeries",
    "psi",
    "psi_numeric",
    "xi_numeric",
]
