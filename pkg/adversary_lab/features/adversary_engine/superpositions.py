"""
Standard superpositions and pair sets for the two proof settings.

Search setting: uniform over the inputs, every ordered pair x != y.
Relation setting: 1/sqrt(2|X|) on X, 1/sqrt(2|Y|) on Y, pairs (x, y) in R.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from adversary_lab.features.query_model import InputAssignment
from adversary_lab.features.tensor_core import full_offdiagonal_pairs
from adversary_lab.platform.errors import DegenerateRelationError

from .engine_contracts import PairSet, SuperpositionSpec


def search_superposition(inputs: Sequence[InputAssignment]) -> tuple[SuperpositionSpec, PairSet]:
    sup = SuperpositionSpec.uniform(inputs)
    return sup, PairSet(tuple(full_offdiagonal_pairs(sup.size)), "full off-diagonal")


def relation_superposition(
    xs: Sequence[InputAssignment],
    ys: Sequence[InputAssignment],
    pairs: Iterable[tuple[str, str]],
    descriptor: str = "relation R",
) -> tuple[SuperpositionSpec, PairSet]:
    """`pairs` are (x label, y label) with x in X and y in Y."""
    sup = SuperpositionSpec.two_sided(xs, ys)
    x_pos = {x.label: i for i, x in enumerate(xs)}
    y_pos = {y.label: len(xs) + j for j, y in enumerate(ys)}
    index_pairs = []
    for x_label, y_label in pairs:
        if x_label not in x_pos or y_label not in y_pos:
            raise DegenerateRelationError(f"pair ({x_label}, {y_label}) is not in X x Y")
        index_pairs.append((x_pos[x_label], y_pos[y_label]))
    if not index_pairs:
        raise DegenerateRelationError("relation has no pairs")
    return sup, PairSet(tuple(index_pairs), descriptor)
