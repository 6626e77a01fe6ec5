"""
Oracle transformations O_x in both conventions.

XOR:   |i, a, z> -> |i, a xor enc(x_i), z>, enc(v) the answer_bits-bit pattern of v
PHASE: |i, b, z> -> (-1)^(b x_i) |i, b, z>      (Boolean inputs, one answer bit)
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from adversary_lab.features.tensor_core import StateVector
from adversary_lab.platform.errors import InvalidInputError

from .query_contracts import InputAssignment, OracleConvention, RegisterLayout


def check_input_fits(layout: RegisterLayout, x: InputAssignment, convention: OracleConvention) -> None:
    if x.n != layout.index_dim:
        raise InvalidInputError(f"input {x.label} has {x.n} positions, index register has {layout.index_dim}")
    if convention is OracleConvention.PHASE:
        if x.alphabet_size != 2 or layout.answer_bits != 1:
            raise InvalidInputError("the phase oracle needs Boolean inputs and a single answer bit")
    elif max(x.values) >= layout.answer_dim:
        raise InvalidInputError(
            f"value {max(x.values)} of {x.label} does not fit {layout.answer_bits} answer bit(s)"
        )


def xor_oracle_permutation(layout: RegisterLayout, x: InputAssignment) -> NDArray[np.int64]:
    """Target index of every basis state under O_x (an involution)."""
    check_input_fits(layout, x, OracleConvention.XOR)
    n_idx, n_ans, n_work = layout.factor_dims
    i, a, z = np.indices((n_idx, n_ans, n_work))
    enc = np.asarray(x.values, dtype=np.int64)
    return (((i * n_ans) + (a ^ enc[i])) * n_work + z).reshape(-1)


def phase_oracle_signs(layout: RegisterLayout, x: InputAssignment) -> NDArray[np.float64]:
    check_input_fits(layout, x, OracleConvention.PHASE)
    n_idx, n_ans, n_work = layout.factor_dims
    i, b, _ = np.indices((n_idx, n_ans, n_work))
    xi = np.asarray(x.values, dtype=np.int64)[i]
    return np.where((b * xi) % 2 == 1, -1.0, 1.0).reshape(-1)


def apply_oracle_block(
    block: np.ndarray,
    layout: RegisterLayout,
    x: InputAssignment,
    convention: OracleConvention,
) -> np.ndarray:
    """O_x applied to a (dimA,) vector or (dimA, k) block."""
    if convention is OracleConvention.XOR:
        out = np.empty_like(block)
        out[xor_oracle_permutation(layout, x)] = block
        return out
    signs = phase_oracle_signs(layout, x)
    return signs.reshape((-1,) + (1,) * (block.ndim - 1)) * block


def apply_xor_oracle(state: StateVector, layout: RegisterLayout, x: InputAssignment) -> StateVector:
    _check_state(state, layout)
    return StateVector(apply_oracle_block(state.amplitudes, layout, x, OracleConvention.XOR), state.normalized)


def apply_phase_oracle(state: StateVector, layout: RegisterLayout, x: InputAssignment) -> StateVector:
    _check_state(state, layout)
    return StateVector(apply_oracle_block(state.amplitudes, layout, x, OracleConvention.PHASE), state.normalized)


def _check_state(state: StateVector, layout: RegisterLayout) -> None:
    if state.dim != layout.dim_a:
        raise InvalidInputError(f"state dimension {state.dim} does not match layout dimension {layout.dim_a}")


def apply_oracle_columns(
    block: np.ndarray,
    layout: RegisterLayout,
    inputs: Sequence[InputAssignment],
    convention: OracleConvention,
) -> np.ndarray:
    """O' = sum_x O_x (x) |x><x|: column j of `block` sees the oracle of inputs[j]."""
    if block.shape[1] != len(inputs):
        raise InvalidInputError(f"{block.shape[1]} columns for {len(inputs)} inputs")
    out = np.empty_like(block)
    for j, x in enumerate(inputs):
        out[:, j] = apply_oracle_block(block[:, j], layout, x, convention)
    return out
