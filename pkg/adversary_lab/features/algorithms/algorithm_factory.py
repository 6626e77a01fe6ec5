"""
Build reference algorithms from an AlgorithmFamilySpec.
"""

from __future__ import annotations

from typing import Optional

from adversary_lab.features.query_model import OracleConvention, QueryAlgorithm, TruthTable, convert_convention
from adversary_lab.platform.observability.smart_logger import SmartLogger

from .algorithm_contracts import AlgorithmFamily, AlgorithmFamilySpec
from .random_algorithms import random_algorithm
from .reference_algorithms import classical_lookup, constant_alg, grover_search


def build_algorithm(spec: AlgorithmFamilySpec, readout: Optional[TruthTable] = None) -> QueryAlgorithm:
    """
    Construct the family's algorithm, then convert it when `spec.convention`
    differs from the family's native convention. `readout` is used by the
    lookup family to answer f(x) instead of the whole input.
    """
    if spec.family is AlgorithmFamily.GROVER_SEARCH:
        alg = grover_search(spec.N, spec.iterations)
    elif spec.family is AlgorithmFamily.CLASSICAL_LOOKUP:
        alphabet = max(spec.alphabet_size, readout.alphabet_size if readout else 2)
        alg = classical_lookup(spec.N, readout=readout, alphabet_size=alphabet)
    elif spec.family is AlgorithmFamily.CONSTANT:
        alg = constant_alg(spec.N, spec.constant_value, answer_bits=spec.answer_bits)
    else:
        alg = random_algorithm(
            spec.N,
            spec.queries,
            convention=spec.convention or OracleConvention.XOR,
            answer_bits=spec.answer_bits,
            work_dim=spec.work_dim,
            seed=spec.seed,
        )
    if spec.convention is not None and spec.convention is not alg.convention:
        alg = convert_convention(alg, spec.convention)
    SmartLogger.log(
        "DEBUG",
        "Algorithm built",
        category="adversary_lab.algorithms.build",
        params={"name": alg.name, "T": alg.T, "dim_a": alg.layout.dim_a, "convention": alg.convention.value},
    )
    return alg
