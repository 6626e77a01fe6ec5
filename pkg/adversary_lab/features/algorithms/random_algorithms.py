from __future__ import annotations

import numpy as np

from adversary_lab.features.query_model import (
    DenseStage,
    OracleConvention,
    QueryAlgorithm,
    Register,
    RegisterLayout,
)
from adversary_lab.features.tensor_core import ensure_dimension, haar_unitary
from adversary_lab.platform.errors import FamilyConstraintError


def random_algorithm(
    N: int,  # noqa: N803
    T: int,  # noqa: N803
    convention: OracleConvention = OracleConvention.XOR,
    answer_bits: int = 1,
    work_dim: int = 1,
    seed: int = 0,
) -> QueryAlgorithm:
    """T-query algorithm with Haar-random U_0..U_T; the seed fixes every draw."""
    if T < 0:
        raise FamilyConstraintError("query count must be non-negative")
    if convention is OracleConvention.PHASE and answer_bits != 1:
        raise FamilyConstraintError("phase-convention algorithms use one answer bit")
    layout = RegisterLayout(index_dim=N, answer_bits=answer_bits, work_dim=work_dim, output_slots=(Register.INDEX,))
    ensure_dimension(layout.dim_a * layout.dim_a, what="random unitary")
    rng = np.random.default_rng(seed)
    unitaries = tuple(DenseStage(haar_unitary(layout.dim_a, rng), name=f"U_{k}") for k in range(T + 1))
    return QueryAlgorithm(
        layout=layout,
        convention=convention,
        unitaries=unitaries,
        name=f"random(N={N},T={T},seed={seed})",
        params={"family": "random", "N": N, "T": T, "seed": seed, "convention": convention.value},
    )
