"""
Mutual simulation of the XOR and phase oracle conventions.

PHASE -> XOR keeps T: the phase oracle equals H_b O_xor H_b on the answer bit,
so the Hadamards are folded into the neighbouring unitaries.

XOR -> PHASE costs two phase queries per XOR query and one ancilla bit c, placed
as the slow part of the work register (host factors (N, b, c, z)). Per query:

    A = SWAP(b,c) . H_c          before the first phase query
    B = SWAP . H_c . CNOT(c->b) . H_c . SWAP   between the two queries
    C = H_c . SWAP(b,c)          after the second query

With c starting in |0>, the pair maps |i, b, 0, z> -> |i, b xor x_i, 0, z>.
"""

from __future__ import annotations

import numpy as np

from adversary_lab.features.tensor_core import StateVector
from adversary_lab.platform.errors import InvalidInputError

from .query_algorithm import QueryAlgorithm
from .query_contracts import OracleConvention, RegisterLayout
from .stages import AncillaStage, LocalStage, Stage, sequence

_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)
_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128)
# |b c>, control c, target b
_CNOT_C_TO_B = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=np.complex128)


def hosted_layout(alg: QueryAlgorithm) -> RegisterLayout:
    """Layout of `alg` converted XOR -> PHASE (the original layout when nothing is hosted)."""
    if alg.convention is not OracleConvention.XOR or alg.T == 0:
        return alg.layout
    return RegisterLayout(
        index_dim=alg.layout.index_dim,
        answer_bits=1,
        work_dim=2 * alg.layout.work_dim,
        output_slots=alg.layout.output_slots,
    )


def embed_state(state: StateVector, layout: RegisterLayout) -> StateVector:
    """Place an original-layout state into the hosted space with the ancilla at |0>."""
    n, a, w = layout.factor_dims
    if state.dim != layout.dim_a:
        raise InvalidInputError(f"state dimension {state.dim} does not match layout dimension {layout.dim_a}")
    host = np.zeros((n, a, 2, w), dtype=np.complex128)
    host[:, :, 0, :] = state.amplitudes.reshape(n, a, w)
    return StateVector(host.reshape(-1), state.normalized)


def convert_convention(alg: QueryAlgorithm, target: OracleConvention) -> QueryAlgorithm:
    if alg.convention is target:
        return alg
    if target is OracleConvention.PHASE and alg.layout.answer_bits != 1:
        raise InvalidInputError("only Boolean (single answer bit) algorithms convert to the phase convention")
    if alg.T == 0:
        return alg.with_unitaries(alg.unitaries, convention=target, name=f"{alg.name}@{target.value}")
    if target is OracleConvention.XOR:
        return _phase_to_xor(alg)
    return _xor_to_phase(alg)


def _phase_to_xor(alg: QueryAlgorithm) -> QueryAlgorithm:
    h_b = LocalStage(alg.layout.factor_dims, axis=1, span=1, operator=_H, name="H_b")
    us = alg.unitaries
    converted: list[Stage] = [sequence([us[0], h_b], name="U_0")]
    for k in range(1, alg.T):
        converted.append(sequence([h_b, us[k], h_b], name=f"U_{k}"))
    converted.append(sequence([h_b, us[alg.T]], name=f"U_{alg.T}"))
    return alg.with_unitaries(
        converted,
        convention=OracleConvention.XOR,
        name=f"{alg.name}@xor",
    )


def _xor_to_phase(alg: QueryAlgorithm) -> QueryAlgorithm:
    n, a, w = alg.layout.factor_dims
    host_dims = (n, a, 2, w)

    def local(op: np.ndarray, axis: int, span: int, name: str) -> LocalStage:
        return LocalStage(host_dims, axis=axis, span=span, operator=op, name=name)

    h_c = local(_H, 2, 1, "H_c")
    swap = local(_SWAP, 1, 2, "SWAP_bc")
    cnot = local(_CNOT_C_TO_B, 1, 2, "CNOT_cb")
    before = sequence([h_c, swap], name="A")
    between = sequence([swap, h_c, cnot, h_c, swap], name="B")
    after = sequence([swap, h_c], name="C")

    def host(u: Stage) -> Stage:
        return AncillaStage(u, inner_dims=(n, a, w), position=2, name=f"{u.name}+c")

    us = alg.unitaries
    converted: list[Stage] = [sequence([host(us[0]), before], name="U'_0")]
    for k in range(1, alg.T + 1):
        converted.append(between)
        tail = [after, host(us[k])] + ([before] if k < alg.T else [])
        converted.append(sequence(tail, name=f"U'_{2 * k}"))
    return QueryAlgorithm(
        layout=hosted_layout(alg),
        convention=OracleConvention.PHASE,
        unitaries=tuple(converted),
        name=f"{alg.name}@phase",
        params=dict(alg.params),
    )
