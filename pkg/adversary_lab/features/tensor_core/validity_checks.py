from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from adversary_lab.platform.errors import NonSquareMatrixError


def _square(m: ArrayLike) -> np.ndarray:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareMatrixError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def check_unitary(m: ArrayLike, tol: float = 1e-10) -> bool:
    """Max-entry deviation of M^dagger M from the identity is at most tol."""
    arr = _square(m)
    dev = arr.conj().T @ arr - np.eye(arr.shape[0])
    return bool(np.max(np.abs(dev), initial=0.0) <= tol)


def check_hermitian(m: ArrayLike, tol: float = 1e-10) -> bool:
    arr = _square(m)
    return bool(np.max(np.abs(arr - arr.conj().T), initial=0.0) <= tol)


def check_density_matrix(m: ArrayLike, tol: float = 1e-9) -> bool:
    """Hermitian within tol, trace within tol of 1, minimum eigenvalue >= -tol."""
    arr = _square(m)
    if not check_hermitian(arr, tol):
        return False
    if abs(np.trace(arr) - 1.0) > tol:
        return False
    herm = (arr + arr.conj().T) / 2.0
    return bool(float(np.linalg.eigvalsh(herm).min()) >= -tol)


def psd_cross_bound_violation(m: ArrayLike) -> float:
    """max_{x,y} |rho_xy| - sqrt(rho_xx rho_yy); non-positive (up to roundoff) for PSD input."""
    arr = _square(m)
    diag = np.clip(np.real(np.diagonal(arr)), 0.0, None)
    bound = np.sqrt(np.outer(diag, diag))
    return float(np.max(np.abs(arr) - bound, initial=-np.inf))
