"""
Algorithms (facade): Grover search, exact classical lookup, constant and random baselines.
"""

from __future__ import annotations

from .algorithm_contracts import AlgorithmFamily, AlgorithmFamilySpec, parse_algorithm_spec
from .algorithm_factory import build_algorithm
from .random_algorithms import random_algorithm
from .reference_algorithms import (
    classical_lookup,
    constant_alg,
    decode_lookup_answer,
    encode_lookup_answer,
    grover_search,
    lookup_answer_bits,
)

__all__ = [
    "AlgorithmFamily",
    "AlgorithmFamilySpec",
    "build_algorithm",
    "classical_lookup",
    "constant_alg",
    "decode_lookup_answer",
    "encode_lookup_answer",
    "grover_search",
    "lookup_answer_bits",
    "parse_algorithm_spec",
    "random_algorithm",
]
