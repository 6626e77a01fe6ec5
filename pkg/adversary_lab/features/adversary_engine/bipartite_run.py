"""
Joint run of an algorithm with a superposition of inputs on H_A (x) H_I.

U'_k = U_k (x) I acts on every column alike; O' applies O_x to column x. The
reduced input state rho_k is sampled after U_0 and right after every query.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from adversary_lab.features.query_model import QueryAlgorithm, run_columns
from adversary_lab.features.tensor_core import BipartiteState, ComplexMatrix, partial_trace_over_algorithm
from adversary_lab.platform.observability.run_context import RunTimer
from adversary_lab.platform.observability.smart_logger import SmartLogger

from .engine_contracts import SuperpositionSpec


@dataclass(frozen=True)
class BipartiteRun:
    algorithm: QueryAlgorithm
    superposition: SuperpositionSpec
    samples: tuple[BipartiteState, ...]
    pre_query: tuple[BipartiteState, ...]
    final: BipartiteState

    def rhos(self) -> list[ComplexMatrix]:
        return [partial_trace_over_algorithm(s) for s in self.samples]

    def rho_end(self) -> ComplexMatrix:
        return partial_trace_over_algorithm(self.final)


def run_bipartite_states(alg: QueryAlgorithm, sup: SuperpositionSpec) -> BipartiteRun:
    timer = RunTimer()
    SmartLogger.log(
        "INFO",
        "Bipartite run started",
        category="adversary_lab.engine.bipartite.start",
        params={"algorithm": alg.name, "T": alg.T, "dim_a": alg.layout.dim_a, "inputs": sup.size},
    )
    start = np.zeros((alg.layout.dim_a, sup.size), dtype=np.complex128)
    start[0, :] = sup.amplitudes
    run = run_columns(alg, start, sup.inputs)
    labels = sup.labels

    def wrap(block: np.ndarray) -> BipartiteState:
        return BipartiteState(block, labels)

    result = BipartiteRun(
        algorithm=alg,
        superposition=sup,
        samples=tuple(wrap(b) for b in run.samples),
        pre_query=tuple(wrap(b) for b in run.pre_query),
        final=wrap(run.final),
    )
    SmartLogger.log(
        "INFO",
        "Bipartite run finished",
        category="adversary_lab.engine.bipartite.done",
        params={"algorithm": alg.name, "samples": len(result.samples), "ms": timer.ms()},
    )
    return result


def run_bipartite(alg: QueryAlgorithm, sup: SuperpositionSpec) -> list[ComplexMatrix]:
    """rho_0..rho_T"""
    return run_bipartite_states(alg, sup).rhos()
