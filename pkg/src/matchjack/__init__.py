"""
Exact computation of the connection coefficients c^lam_{mu,nu}(b) of Jack
polynomials, their marginal sums and cumulants, the matching counts at
b = 0 and b = 1, and the graded Farahat-Higman algebra.
"""

from .connection import (
    c_coeff,
    c_multi,
    c_table,
    cumulant_d,
    h_coeff,
    marginal,
    marginal_table,
    top_coeff_via_marginal,
)
from .exact import CertificationError, RatFunc, UniPoly
from .fh import matrix_L, matrix_M, matrix_M_sub, matrix_N, matrix_Q, matrix_U, top_coeff_via_fh
from .partitions import Partition, all_partitions
from .reconstruct import reconstruct_all
from .symfunc import jack

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "Partition",
    "RatFunc",
    "UniPoly",
    "all_partitions",
    "c_coeff",
    "c_multi",
    "c_table",
    "cumulant_d",
    "h_coeff",
    "jack",
    "marginal",
    "marginal_table",
    "matrix_L",
    "matrix_M",
    "matrix_M_sub",
    "matrix_N",
    "matrix_Q",
    "matrix_U",
    "reconstruct_all",
    "top_coeff_via_fh",
    "top_coeff_via_marginal",
]
