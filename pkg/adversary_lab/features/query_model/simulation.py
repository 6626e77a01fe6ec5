"""
Single-input and column-batched simulation of query algorithms.

Sampling points: after U_0 and right after each query, before the following
unitary. A run over several columns applies the same U_k to every column and
the input-specific oracle to each column, which is exactly the block-diagonal
action on H_A (x) H_I.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from adversary_lab.features.tensor_core import StateVector, ensure_dimension
from adversary_lab.platform.errors import InvalidInputError

from .oracles import apply_oracle_columns, check_input_fits
from .query_algorithm import QueryAlgorithm
from .query_contracts import InputAssignment, RegisterLayout
from .truth_tables import TruthTable

PROBABILITY_FLOOR = 1e-14


@dataclass(frozen=True)
class ColumnRun:
    """
    Blocks of shape (dimA, k) observed during one run.

    samples[k]   : after U_0 (k = 0) or right after query k
    pre_query[k] : right before query k+1
    final        : after U_T
    """

    samples: tuple[np.ndarray, ...]
    pre_query: tuple[np.ndarray, ...]
    final: np.ndarray


def run_columns(alg: QueryAlgorithm, start: np.ndarray, inputs: Sequence[InputAssignment]) -> ColumnRun:
    block = np.array(start, dtype=np.complex128)
    if block.ndim != 2 or block.shape != (alg.layout.dim_a, len(inputs)):
        raise InvalidInputError(
            f"start block shape {block.shape} does not match ({alg.layout.dim_a}, {len(inputs)})"
        )
    ensure_dimension(block.size, what=f"run of {alg.name}")
    for x in inputs:
        check_input_fits(alg.layout, x, alg.convention)

    block = alg.unitaries[0].apply(block)
    samples = [block]
    pre_query = []
    for k in range(1, alg.T + 1):
        pre_query.append(block)
        block = apply_oracle_columns(block, alg.layout, inputs, alg.convention)
        samples.append(block)
        block = alg.unitaries[k].apply(block)
    return ColumnRun(samples=tuple(samples), pre_query=tuple(pre_query), final=block)


def _start_column(layout: RegisterLayout) -> np.ndarray:
    col = np.zeros((layout.dim_a, 1), dtype=np.complex128)
    col[0, 0] = 1.0
    return col


@dataclass(frozen=True)
class Trajectory:
    samples: tuple[StateVector, ...]
    final: StateVector


def simulate_trajectory(alg: QueryAlgorithm, x: InputAssignment) -> Trajectory:
    run = run_columns(alg, _start_column(alg.layout), [x])
    return Trajectory(
        samples=tuple(StateVector(s[:, 0]) for s in run.samples),
        final=StateVector(run.final[:, 0]),
    )


def simulate(alg: QueryAlgorithm, x: InputAssignment) -> StateVector:
    """U_T O_x U_{T-1} ... O_x U_0 |0>"""
    return simulate_trajectory(alg, x).final


def answer_distribution(final: StateVector, layout: RegisterLayout) -> dict[int, float]:
    """
    Probability of each answer value read from `layout.output_slots`.

    Several slots combine in mixed radix, the first slot most significant.
    Values below PROBABILITY_FLOOR are dropped.
    """
    if final.dim != layout.dim_a:
        raise InvalidInputError(f"state dimension {final.dim} does not match layout dimension {layout.dim_a}")
    probs = (np.abs(final.amplitudes) ** 2).reshape(layout.factor_dims)
    axes = {"index": 0, "answer": 1, "work": 2}
    keep = [axes[slot.value] for slot in layout.output_slots]
    drop = tuple(a for a in range(3) if a not in keep)
    marginal = probs.sum(axis=drop) if drop else probs
    remaining = sorted(keep)
    marginal = np.transpose(marginal, [remaining.index(a) for a in keep]).reshape(-1)
    return {int(v): float(p) for v, p in enumerate(marginal) if p > PROBABILITY_FLOOR}


def success_probabilities(alg: QueryAlgorithm, f: TruthTable) -> dict[str, float]:
    """Probability of reading f(x), per input label of f's domain."""
    if alg.layout.output_capacity < f.range_size:
        raise InvalidInputError(
            f"{alg.name} answers in {alg.layout.output_capacity} values; {f.name} has range {f.range_size}"
        )
    out: dict[str, float] = {}
    for x in f.inputs():
        dist = answer_distribution(simulate(alg, x), alg.layout)
        out[x.label] = dist.get(f(x), 0.0)
    return out


def worst_case_error(alg: QueryAlgorithm, f: TruthTable) -> float:
    """max over the promise of 1 - P[answer = f(x)]"""
    probs = success_probabilities(alg, f)
    if not probs:
        raise InvalidInputError(f"{f.name} has an empty domain")
    return float(min(max(1.0 - min(probs.values()), 0.0), 1.0))
