"""
Reference query algorithms used as test subjects.

- grover_search: phase convention, T = iterations, answers with the index register.
- classical_lookup: XOR convention, T = N, reads every position into the work register.
- constant_alg: T = 0, always answers the same index.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from adversary_lab.features.query_model import (
    LocalStage,
    OracleConvention,
    PermutationStage,
    QueryAlgorithm,
    Register,
    RegisterLayout,
    TruthTable,
    sequence,
)
from adversary_lab.features.tensor_core import (
    diffusion_operator,
    ensure_dimension,
    householder_with_first_column,
    uniform_vector,
)
from adversary_lab.platform.errors import FamilyConstraintError

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)


def grover_search(N: int, iterations: int) -> QueryAlgorithm:  # noqa: N803
    if N < 2:
        raise FamilyConstraintError(f"Grover search needs N >= 2, got {N}")
    if iterations < 0:
        raise FamilyConstraintError("iterations must be non-negative")
    layout = RegisterLayout(index_dim=N, answer_bits=1, work_dim=1, output_slots=(Register.INDEX,))
    dims = layout.factor_dims
    prepare = LocalStage(dims, axis=0, span=1, operator=householder_with_first_column(uniform_vector(N)), name="uniform")
    flip_answer = LocalStage(dims, axis=1, span=1, operator=_X, name="X_b")
    diffusion = LocalStage(dims, axis=0, span=1, operator=diffusion_operator(N), name="diffusion")
    unitaries = [sequence([prepare, flip_answer], name="U_0")] + [diffusion] * iterations
    return QueryAlgorithm(
        layout=layout,
        convention=OracleConvention.PHASE,
        unitaries=tuple(unitaries),
        name=f"grover(N={N},t={iterations})",
        params={"family": "grover", "N": N, "iterations": iterations},
    )


def lookup_answer_bits(alphabet_size: int) -> int:
    return max(1, math.ceil(math.log2(alphabet_size)))


def encode_lookup_answer(values: tuple[int, ...], alphabet_size: int = 2) -> int:
    """Work-register value holding `values`, first position most significant."""
    base = 2 ** lookup_answer_bits(alphabet_size)
    out = 0
    for v in values:
        out = out * base + int(v)
    return out


def decode_lookup_answer(value: int, N: int, alphabet_size: int = 2) -> tuple[int, ...]:  # noqa: N803
    base = 2 ** lookup_answer_bits(alphabet_size)
    digits = []
    for _ in range(N):
        value, digit = divmod(value, base)
        digits.append(digit)
    return tuple(reversed(digits))


def classical_lookup(
    N: int,  # noqa: N803
    readout: Optional[TruthTable] = None,
    alphabet_size: int = 2,
) -> QueryAlgorithm:
    """
    Exact T = N algorithm. Query k reads x_k into the answer register; U_k swaps it
    into work digit k and advances the index. With `readout` the last unitary also
    moves the index register to f(x) (0 where f is undefined), so the algorithm
    answers f; otherwise the work register holds the whole input.
    """
    if N < 1:
        raise FamilyConstraintError(f"classical lookup needs N >= 1, got {N}")
    if readout is not None:
        if readout.n != N or readout.alphabet_size > alphabet_size:
            raise FamilyConstraintError(
                f"readout {readout.name} (n={readout.n}, alphabet {readout.alphabet_size}) does not fit N={N}"
            )
        if readout.range_size > N:
            raise FamilyConstraintError(f"readout range {readout.range_size} exceeds the {N}-level index register")
    bits = lookup_answer_bits(alphabet_size)
    base = 2**bits
    ensure_dimension(N * base ** (N + 1), what=f"classical lookup N={N}")
    layout = RegisterLayout(
        index_dim=N,
        answer_bits=bits,
        work_dim=base**N,
        output_slots=(Register.INDEX,) if readout is not None else (Register.WORK,),
    )

    i, a, z = np.indices(layout.factor_dims, dtype=np.int64)
    weight = base ** (N - 1 - i)
    digit = (z // weight) % base
    new_z = z + (a - digit) * weight
    new_a = digit
    new_i = (i + 1) % N
    store = PermutationStage(_flat(layout, new_i, new_a, new_z), name="store")
    stages = [store] * N
    if readout is not None:
        shift = np.array(
            [readout.table.get(decode_lookup_answer(v, N, alphabet_size), 0) for v in range(layout.work_dim)],
            dtype=np.int64,
        )
        final_i = (new_i + shift[new_z]) % N
        stages[-1] = PermutationStage(_flat(layout, final_i, new_a, new_z), name="store+readout")
    return QueryAlgorithm(
        layout=layout,
        convention=OracleConvention.XOR,
        unitaries=(PermutationStage.identity(layout.dim_a, name="U_0"), *stages),
        name=f"lookup(N={N})",
        params={"family": "lookup", "N": N, "alphabet": alphabet_size, "readout": readout.name if readout else None},
    )


def _flat(layout: RegisterLayout, i: np.ndarray, a: np.ndarray, z: np.ndarray) -> np.ndarray:
    return ((i * layout.answer_dim + a) * layout.work_dim + z).reshape(-1)


def constant_alg(N: int, value: int, answer_bits: int = 1) -> QueryAlgorithm:  # noqa: N803
    if not 0 <= value < N:
        raise FamilyConstraintError(f"constant answer {value} outside the {N}-level index register")
    layout = RegisterLayout(index_dim=N, answer_bits=answer_bits, work_dim=1, output_slots=(Register.INDEX,))
    i, a, z = np.indices(layout.factor_dims, dtype=np.int64)
    shift = PermutationStage(_flat(layout, (i + value) % N, a, z), name=f"index+{value}")
    return QueryAlgorithm(
        layout=layout,
        convention=OracleConvention.XOR,
        unitaries=(shift,),
        name=f"constant(N={N},value={value})",
        params={"family": "constant", "N": N, "value": value},
    )
