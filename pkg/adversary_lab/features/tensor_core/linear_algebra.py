"""
Dense complex linear algebra used by the simulator.

Kronecker products, the partial trace over the algorithm register, relation
restricted off-diagonal sums and a few standard constructions (Householder
preparation, Haar-random unitaries).
"""

from __future__ import annotations

from typing import Iterable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from adversary_lab.platform.errors import InvalidInputError

from .tensor_contracts import BipartiteState, ComplexMatrix, StateVector, as_complex_matrix, ensure_dimension


def tensor_product(*factors: ArrayLike) -> ComplexMatrix:
    """
    Kronecker product of its arguments, left factor as the slow index.

    tensor_product(a, b, c) == kron(kron(a, b), c); the result size is checked
    against the configured dimension cap before it is materialised.
    """
    mats = [as_complex_matrix(np.atleast_2d(f)) for f in factors]
    rows = int(np.prod([m.shape[0] for m in mats], dtype=object))
    cols = int(np.prod([m.shape[1] for m in mats], dtype=object))
    ensure_dimension(rows * cols, what="tensor product")
    out: np.ndarray = np.ones((1, 1), dtype=np.complex128)
    for m in mats:
        out = np.kron(out, m)
    return as_complex_matrix(out)


def partial_trace_over_algorithm(state: BipartiteState) -> ComplexMatrix:
    """rho_xy = column_x^dagger column_y (= alpha_x^* alpha_y <psi_x|psi_y>)."""
    cols = state.columns
    return as_complex_matrix(cols.conj().T @ cols)


def restricted_offdiag_sum(rho: ArrayLike, pairs: Iterable[tuple[int, int]]) -> float:
    """
    Sum of |rho_xy| over the given (row, column) pairs.

    Pairs are taken as given: a full off-diagonal set must list both
    orientations to reproduce sum_{x != y}.
    """
    mat = np.asarray(rho)
    idx = np.array(list(pairs), dtype=np.int64).reshape(-1, 2)
    if idx.size == 0:
        return 0.0
    n = mat.shape[0]
    if idx.min() < 0 or idx.max() >= n:
        raise InvalidInputError(f"pair label out of range for a {n}x{n} matrix")
    return float(np.sum(np.abs(mat[idx[:, 0], idx[:, 1]])))


def full_offdiagonal_pairs(size: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(size) for y in range(size) if x != y]


def fidelity(u: StateVector | NDArray[np.complex128], v: StateVector | NDArray[np.complex128]) -> float:
    a = u.amplitudes if isinstance(u, StateVector) else np.asarray(u)
    b = v.amplitudes if isinstance(v, StateVector) else np.asarray(v)
    return float(abs(np.vdot(a, b)) ** 2)


def householder_with_first_column(v: ArrayLike) -> ComplexMatrix:
    """Real Householder reflection P with P e_0 = v (v a real unit vector)."""
    vec = np.asarray(v, dtype=np.float64).reshape(-1)
    dim = vec.shape[0]
    if abs(np.linalg.norm(vec) - 1.0) > 1e-12:
        raise InvalidInputError("householder target must be a unit vector")
    w = np.zeros(dim)
    w[0] = 1.0
    w = w - vec
    nrm2 = float(w @ w)
    if nrm2 < 1e-30:
        return as_complex_matrix(np.eye(dim))
    return as_complex_matrix(np.eye(dim) - 2.0 * np.outer(w, w) / nrm2)


def uniform_vector(dim: int) -> NDArray[np.float64]:
    return np.full(dim, 1.0 / np.sqrt(dim))


def diffusion_operator(dim: int) -> ComplexMatrix:
    """2|u><u| - I on a dim-level register."""
    u = uniform_vector(dim)
    return as_complex_matrix(2.0 * np.outer(u, u) - np.eye(dim))


def haar_unitary(dim: int, rng: np.random.Generator) -> ComplexMatrix:
    """Haar-random unitary: QR of a complex Ginibre matrix with R's diagonal phases removed."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    phases = d / np.abs(d)
    return as_complex_matrix(q * phases[np.newaxis, :])
