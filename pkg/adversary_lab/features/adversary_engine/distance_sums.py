"""
Distance sums Delta(t) between per-input algorithm states, and the Gram
identity linking them to the reduced input state.

Distances use ||u - v||^2 = 2 - 2 Re<u|v> for unit vectors.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from adversary_lab.features.query_model import InputAssignment, QueryAlgorithm, run_columns
from adversary_lab.platform.errors import InvalidInputError

from .bipartite_run import run_bipartite_states
from .engine_contracts import DistancePairing, DistanceTrace, GramIdentityReport, SuperpositionSpec


def _per_input_samples(alg: QueryAlgorithm, inputs: Sequence[InputAssignment]) -> tuple[np.ndarray, ...]:
    """Blocks (dimA, |inputs|) of single-input states at the T+1 sampling points."""
    start = np.zeros((alg.layout.dim_a, len(inputs)), dtype=np.complex128)
    start[0, :] = 1.0
    return run_columns(alg, start, inputs).samples


def distance_trace(
    alg: QueryAlgorithm,
    inputs: Sequence[InputAssignment],
    pairing: DistancePairing,
    *,
    reference: Optional[InputAssignment] = None,
    pairs: Optional[Sequence[tuple[str, str]]] = None,
) -> DistanceTrace:
    """
    REFERENCE: Delta(t) = sum_x ||phi_x^t - phi_ref^t||^2 over `inputs`.
    RELATION:  Delta(t) = sum_{(x,y)} ||phi_x^t - phi_y^t||^2 over labelled `pairs`.
    """
    inputs = list(inputs)
    if pairing is DistancePairing.REFERENCE:
        if reference is None:
            raise InvalidInputError("reference pairing needs a reference input")
        labels = [x.label for x in inputs]
        if reference.label not in labels:
            inputs.append(reference)
            labels.append(reference.label)
        ref = labels.index(reference.label)
        index_pairs = [(j, ref) for j in range(len(inputs)) if j != ref]
    else:
        if not pairs:
            raise InvalidInputError("relation pairing needs at least one pair")
        labels = [x.label for x in inputs]
        try:
            index_pairs = [(labels.index(a), labels.index(b)) for a, b in pairs]
        except ValueError:
            raise InvalidInputError("relation pair names an input outside the input list") from None

    idx = np.array(index_pairs, dtype=np.int64).reshape(-1, 2)
    series = []
    for block in _per_input_samples(alg, inputs):
        overlaps = np.einsum("dk,dk->k", block[:, idx[:, 0]].conj(), block[:, idx[:, 1]])
        series.append(float(np.sum(2.0 - 2.0 * overlaps.real)))
    return DistanceTrace(
        series=series,
        reference=pairing,
        reference_label=reference.label if reference is not None else None,
        pair_count=len(index_pairs),
    )


def density_innerproduct_relation(alg: QueryAlgorithm, sup: SuperpositionSpec) -> GramIdentityReport:
    """
    Max over steps and pairs of |(rho_t)_xy - alpha_x^* alpha_y <psi_x^t|psi_y^t>|.

    For two-sided superpositions the report also carries the X-Y constant
    alpha_x^* alpha_y actually in effect next to 1/(4|X||Y|).
    """
    run = run_bipartite_states(alg, sup)
    singles = _per_input_samples(alg, sup.inputs)
    weights = np.outer(sup.amplitudes.conj(), sup.amplitudes)
    deviation = 0.0
    for rho, block in zip(run.rhos(), singles):
        gram = block.conj().T @ block
        deviation = max(deviation, float(np.max(np.abs(rho - weights * gram))))

    measured: Optional[float] = None
    stated: Optional[float] = None
    if sup.sides is not None:
        sides = np.array(sup.sides)
        cross = np.abs(weights[np.ix_(sides == 0, sides == 1)])
        measured = float(cross.max())
        nx, ny = sup.side_sizes()
        stated = 1.0 / (4.0 * nx * ny)
    return GramIdentityReport(
        max_deviation=deviation,
        steps=len(singles),
        measured_constant=measured,
        stated_constant=stated,
    )
