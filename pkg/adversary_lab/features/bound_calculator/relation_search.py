"""
Search for the relation with the largest sqrt(m m' / l_max), and the exact
deterministic query complexity used as its ceiling.

X and Y come from two distinct level sets of f; candidate pairs are limited to a
Hamming-distance cap. Small candidate sets are searched exhaustively over every
subset R (X and Y being the projections of R); larger ones only by greedy
pruning when heuristics are enabled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from adversary_lab.features.query_model import TruthTable
from adversary_lab.platform.env import get_search_max_hamming, get_search_max_pairs
from adversary_lab.platform.errors import DegenerateRelationError, InvalidInputError, SearchSpaceOverflowError
from adversary_lab.platform.observability.smart_logger import SmartLogger

from .bound_contracts import AdversaryRelation, BoundReport, Word
from .relation_parameters import bound_report

MAX_EXHAUSTIVE_N = 3
MAX_DECISION_TREE_N = 6


@dataclass(frozen=True)
class SearchLimits:
    max_pairs: int = field(default_factory=get_search_max_pairs)
    max_hamming: int = field(default_factory=get_search_max_hamming)
    heuristic: bool = False


Pair = tuple[Word, Word]


def _hamming(x: Word, y: Word) -> int:
    return sum(a != b for a, b in zip(x, y))


def _theorem3_ratio(pairs: list[Pair]) -> Optional[Fraction]:
    """m m' / l_max of the relation spanned by `pairs` (None when degenerate)."""
    deg_x: dict[Word, int] = {}
    deg_y: dict[Word, int] = {}
    l_x: dict[tuple[Word, int], int] = {}
    l_y: dict[tuple[Word, int], int] = {}
    for x, y in pairs:
        deg_x[x] = deg_x.get(x, 0) + 1
        deg_y[y] = deg_y.get(y, 0) + 1
        for i, (a, b) in enumerate(zip(x, y)):
            if a != b:
                l_x[x, i] = l_x.get((x, i), 0) + 1
                l_y[y, i] = l_y.get((y, i), 0) + 1
    l_max = 0
    for x, y in pairs:
        for i, (a, b) in enumerate(zip(x, y)):
            if a != b:
                l_max = max(l_max, l_x[x, i] * l_y[y, i])
    if not pairs or l_max == 0:
        return None
    return Fraction(min(deg_x.values()) * min(deg_y.values()), l_max)


def _to_relation(f: TruthTable, pairs: list[Pair]) -> AdversaryRelation:
    xs = sorted({x for x, _ in pairs})
    ys = sorted({y for _, y in pairs})
    x_pos = {x: i for i, x in enumerate(xs)}
    y_pos = {y: j for j, y in enumerate(ys)}
    return AdversaryRelation(
        xs=tuple(xs),
        ys=tuple(ys),
        pairs=tuple((x_pos[x], y_pos[y]) for x, y in pairs),
        alphabet_size=f.alphabet_size,
        truth_table=f,
        name=f"best({f.name})",
    )


def _exhaustive(candidates: list[Pair]) -> tuple[Optional[Fraction], list[Pair]]:
    best: Optional[Fraction] = None
    best_pairs: list[Pair] = []
    for mask in range(1, 2 ** len(candidates)):
        chosen = [p for k, p in enumerate(candidates) if mask >> k & 1]
        ratio = _theorem3_ratio(chosen)
        if ratio is not None and (best is None or ratio > best):
            best, best_pairs = ratio, chosen
    return best, best_pairs


def _greedy(candidates: list[Pair]) -> tuple[Optional[Fraction], list[Pair]]:
    """Drop one pair at a time while that strictly improves the ratio."""
    current = list(candidates)
    score = _theorem3_ratio(current)
    while len(current) > 1:
        step_best, step_index = score, None
        for k in range(len(current)):
            ratio = _theorem3_ratio(current[:k] + current[k + 1 :])
            if ratio is not None and (step_best is None or ratio > step_best):
                step_best, step_index = ratio, k
        if step_index is None:
            break
        current.pop(step_index)
        score = step_best
    return score, current


def search_best_relation(f: TruthTable, limits: Optional[SearchLimits] = None) -> BoundReport:
    limits = limits or SearchLimits()
    if f.n > MAX_EXHAUSTIVE_N and not limits.heuristic:
        raise SearchSpaceOverflowError(
            f"exhaustive relation search is limited to n <= {MAX_EXHAUSTIVE_N}; enable heuristics for n={f.n}"
        )
    values = sorted(set(f.table.values()))
    if len(values) < 2:
        raise DegenerateRelationError(f"{f.name} is constant on its domain")

    best: Optional[Fraction] = None
    best_pairs: list[Pair] = []
    for a, b in itertools.combinations(values, 2):
        candidates = [
            (x, y)
            for x in f.level_set(a)
            for y in f.level_set(b)
            if _hamming(x, y) <= limits.max_hamming
        ]
        if not candidates:
            continue
        if len(candidates) <= limits.max_pairs:
            ratio, pairs = _exhaustive(candidates)
        elif limits.heuristic:
            ratio, pairs = _greedy(candidates)
        else:
            raise SearchSpaceOverflowError(
                f"{len(candidates)} candidate pairs exceed the limit of {limits.max_pairs}; enable heuristics"
            )
        if ratio is not None and (best is None or ratio > best):
            best, best_pairs = ratio, pairs

    if best is None:
        raise DegenerateRelationError(f"no relation within Hamming distance {limits.max_hamming} for {f.name}")
    depth = decision_tree_depth(f) if f.n <= MAX_DECISION_TREE_N else None
    report = bound_report(_to_relation(f, best_pairs), family=f"search({f.name})", decision_tree_depth=depth)
    SmartLogger.log(
        "INFO",
        "Relation search finished",
        category="adversary_lab.bounds.search",
        params={"function": f.name, "ratio": str(best), "bound": report.theorem3_value, "depth": depth},
    )
    return report


def decision_tree_depth(f: TruthTable) -> int:
    """Exact deterministic query complexity of f on its domain."""
    if f.n > MAX_DECISION_TREE_N:
        raise InvalidInputError(f"decision-tree depth is limited to n <= {MAX_DECISION_TREE_N}, got {f.n}")
    domain = list(f.table.items())
    unknown = -1

    @lru_cache(maxsize=None)
    def depth(partial: tuple[int, ...]) -> int:
        consistent = {
            v for x, v in domain if all(p == unknown or p == xi for p, xi in zip(partial, x))
        }
        if len(consistent) <= 1:
            return 0
        best = f.n
        for i, p in enumerate(partial):
            if p != unknown:
                continue
            worst = 0
            for value in range(f.alphabet_size):
                child = partial[:i] + (value,) + partial[i + 1 :]
                worst = max(worst, depth(child))
                if worst + 1 >= best:
                    break
            best = min(best, 1 + worst)
        return best

    return depth((unknown,) * f.n)
