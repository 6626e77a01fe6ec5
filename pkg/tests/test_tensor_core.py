from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from adversary_lab.features.tensor_core import (
    BipartiteState,
    StateVector,
    check_density_matrix,
    check_hermitian,
    check_unitary,
    diffusion_operator,
    fidelity,
    full_offdiagonal_pairs,
    haar_unitary,
    householder_with_first_column,
    partial_trace_over_algorithm,
    psd_cross_bound_violation,
    restricted_offdiag_sum,
    tensor_product,
    uniform_vector,
)
from adversary_lab.platform.errors import DimensionLimitError, InvalidInputError, NonSquareMatrixError

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _random_columns(rng: np.random.Generator, dim: int, k: int) -> np.ndarray:
    cols = rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))
    return cols / np.linalg.norm(cols)


def test_tensor_product_orders_left_factor_slowest():
    a = np.array([[0, 1], [1, 0]])
    b = np.diag([1, 2, 3])
    assert_allclose(tensor_product(a, b), np.kron(a, b))
    assert tensor_product(a, b, np.eye(2)).shape == (12, 12)


def test_tensor_product_respects_dimension_cap(monkeypatch):
    monkeypatch.setenv("ADVLAB_MAX_DIMENSION", "100")
    with pytest.raises(DimensionLimitError):
        tensor_product(np.eye(8), np.eye(2))


def test_partial_trace_of_product_state_is_rank_one():
    psi = StateVector.basis(3, 1)
    alphas = np.array([0.6, 0.8j])
    rho = partial_trace_over_algorithm(BipartiteState.product(psi, alphas))
    assert_allclose(rho, np.outer(alphas.conj(), alphas), atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(seed=seeds, dim=st.integers(1, 6), k=st.integers(1, 5))
def test_partial_trace_is_a_density_matrix(seed, dim, k):
    rng = np.random.default_rng(seed)
    rho = partial_trace_over_algorithm(BipartiteState(_random_columns(rng, dim, k)))
    assert check_density_matrix(rho)
    assert psd_cross_bound_violation(rho) <= 1e-9


@settings(max_examples=30, deadline=None)
@given(seed=seeds, dim=st.integers(1, 6), k=st.integers(1, 5))
def test_algorithm_side_unitaries_leave_rho_unchanged(seed, dim, k):
    rng = np.random.default_rng(seed)
    state = BipartiteState(_random_columns(rng, dim, k))
    u = haar_unitary(dim, rng)
    rotated = BipartiteState(u @ state.columns)
    assert_allclose(partial_trace_over_algorithm(rotated), partial_trace_over_algorithm(state), atol=1e-10)


@settings(max_examples=20, deadline=None)
@given(seed=seeds, dim=st.integers(1, 8))
def test_haar_unitary_is_unitary(seed, dim):
    assert check_unitary(haar_unitary(dim, np.random.default_rng(seed)))


def test_restricted_offdiag_sum_counts_listed_pairs_only():
    rho = np.array([[0.5, 0.25j, 0.0], [-0.25j, 0.25, 0.1], [0.0, 0.1, 0.25]])
    assert restricted_offdiag_sum(rho, [(0, 1)]) == pytest.approx(0.25)
    assert restricted_offdiag_sum(rho, full_offdiagonal_pairs(3)) == pytest.approx(0.7)
    assert restricted_offdiag_sum(rho, []) == 0.0
    with pytest.raises(InvalidInputError):
        restricted_offdiag_sum(rho, [(0, 3)])


def test_householder_first_column_is_the_target():
    u = uniform_vector(5)
    p = householder_with_first_column(u)
    assert check_unitary(p)
    assert_allclose(p[:, 0], u, atol=1e-12)
    assert_allclose(householder_with_first_column(np.eye(3)[0]), np.eye(3))


def test_diffusion_is_unitary_and_hermitian():
    d = diffusion_operator(4)
    assert check_unitary(d) and check_hermitian(d)
    assert_allclose(d @ uniform_vector(4), uniform_vector(4), atol=1e-12)


def test_checks_reject_non_square():
    with pytest.raises(NonSquareMatrixError):
        check_unitary(np.ones((2, 3)))


def test_density_check_rejects_negative_eigenvalue():
    assert not check_density_matrix(np.diag([1.5, -0.5]))
    assert not check_density_matrix(np.diag([0.5, 0.4]))


def test_state_vector_invariants():
    with pytest.raises(InvalidInputError):
        StateVector(np.array([1.0, 1.0]))
    v = StateVector(np.array([1.0, 1.0]), normalized=False)
    assert v.norm() == pytest.approx(np.sqrt(2))
    assert fidelity(StateVector.basis(2, 0), np.array([1, 1]) / np.sqrt(2)) == pytest.approx(0.5)


def test_bipartite_state_rejects_duplicate_labels_and_bad_norm():
    with pytest.raises(InvalidInputError):
        BipartiteState(np.eye(2) / np.sqrt(2), ("a", "a"))
    with pytest.raises(InvalidInputError):
        BipartiteState(np.eye(2))


@settings(max_examples=30, deadline=None)
@given(seed=seeds, da=st.integers(1, 4), db=st.integers(1, 4))
def test_tensor_product_of_unitaries_is_unitary(seed, da, db):
    rng = np.random.default_rng(seed)
    assert check_unitary(tensor_product(haar_unitary(da, rng), haar_unitary(db, rng)))


def test_density_check_rejects_cross_terms_beyond_the_diagonal():
    # unit trace and Hermitian, but the eigenvalues are 1.1 and -0.1
    assert not check_density_matrix(np.array([[0.5, 0.6], [0.6, 0.5]]))
