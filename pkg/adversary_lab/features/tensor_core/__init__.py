"""
Tensor core (facade): dense complex values, partial trace and validity checks.
"""

from __future__ import annotations

from .linear_algebra import (
    diffusion_operator,
    fidelity,
    full_offdiagonal_pairs,
    haar_unitary,
    householder_with_first_column,
    partial_trace_over_algorithm,
    restricted_offdiag_sum,
    tensor_product,
    uniform_vector,
)
from .tensor_contracts import BipartiteState, ComplexMatrix, StateVector, as_complex_matrix, ensure_dimension
from .validity_checks import check_density_matrix, check_hermitian, check_unitary, psd_cross_bound_violation

__all__ = [
    "BipartiteState",
    "ComplexMatrix",
    "StateVector",
    "as_complex_matrix",
    "check_density_matrix",
    "check_hermitian",
    "check_unitary",
    "diffusion_operator",
    "ensure_dimension",
    "fidelity",
    "full_offdiagonal_pairs",
    "haar_unitary",
    "householder_with_first_column",
    "partial_trace_over_algorithm",
    "psd_cross_bound_violation",
    "restricted_offdiag_sum",
    "tensor_product",
    "uniform_vector",
]
