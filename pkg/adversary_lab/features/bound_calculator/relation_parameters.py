"""
Relation parameters and the two adversary bounds.

    m    = min over x in X of #{y : (x, y) in R}        m'  likewise over Y
    l    = max over x, i of l_{x,i} = #{y : (x,y) in R, x_i != y_i}
    l'   = max over y, i of l_{y,i}
    l_max = max over (x,y) in R and i with x_i != y_i of l_{x,i} l_{y,i}

All counts are exact integers; square roots are taken only for the final values.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from adversary_lab.features.adversary_engine import lemma1_factor
from adversary_lab.platform.errors import DegenerateRelationError

from .bound_contracts import AdversaryRelation, BoundReport, EnumerationCheck, RelationParameters, word_label


def relation_parameters(rel: AdversaryRelation) -> RelationParameters:
    if not rel.pairs:
        raise DegenerateRelationError(f"{rel.name}: R is empty")
    xs = np.asarray(rel.xs, dtype=np.int64)
    ys = np.asarray(rel.ys, dtype=np.int64)
    idx = np.asarray(rel.pairs, dtype=np.int64)
    px, py = idx[:, 0], idx[:, 1]
    differs = (xs[px] != ys[py]).astype(np.int64)

    l_x = np.zeros(xs.shape, dtype=np.int64)
    l_y = np.zeros(ys.shape, dtype=np.int64)
    np.add.at(l_x, px, differs)
    np.add.at(l_y, py, differs)
    deg_x = np.bincount(px, minlength=len(rel.xs))
    deg_y = np.bincount(py, minlength=len(rel.ys))
    m, m_prime = int(deg_x.min()), int(deg_y.min())
    if m == 0 or m_prime == 0:
        side = "X" if m == 0 else "Y"
        raise DegenerateRelationError(f"{rel.name}: some input of {side} has no partner in R")

    products = l_x[px] * l_y[py] * differs
    return RelationParameters(
        m=m,
        m_prime=m_prime,
        l=int(l_x.max()),
        l_prime=int(l_y.max()),
        l_max=int(products.max()),
        x_size=len(rel.xs),
        y_size=len(rel.ys),
        relation_size=len(rel.pairs),
        l_x={word_label(x): [int(v) for v in row] for x, row in zip(rel.xs, l_x)},
        l_y={word_label(y): [int(v) for v in row] for y, row in zip(rel.ys, l_y)},
    )


def theorem2_bound(p: RelationParameters) -> float:
    """sqrt(m m' / (l l'))"""
    if p.l * p.l_prime <= 0:
        raise DegenerateRelationError("l l' must be positive")
    return math.sqrt(p.m * p.m_prime / (p.l * p.l_prime))


def theorem3_bound(p: RelationParameters) -> float:
    """sqrt(m m' / l_max)"""
    if p.l_max <= 0:
        raise DegenerateRelationError("l_max must be positive")
    return math.sqrt(p.m * p.m_prime / p.l_max)


def implied_query_lower_bound(p: RelationParameters, eps: float) -> float:
    """Finite-instance query bound (1 - c(eps)) sqrt(m m' / l_max) / 2."""
    return (1.0 - lemma1_factor(eps)) * theorem3_bound(p) / 2.0


def bound_report(
    rel: AdversaryRelation,
    *,
    family: Optional[str] = None,
    closed_form: Optional[dict[str, int]] = None,
    params: Optional[RelationParameters] = None,
    decision_tree_depth: Optional[int] = None,
) -> BoundReport:
    p = params or relation_parameters(rel)
    check = None
    if closed_form is not None:
        enumerated = p.degrees()
        check = EnumerationCheck(
            closed_form=dict(closed_form),
            enumerated=enumerated,
            matches=all(enumerated[k] == v for k, v in closed_form.items()),
        )
    return BoundReport(
        theorem2_value=theorem2_bound(p),
        theorem3_value=theorem3_bound(p),
        theorem2_ratio=str(p.theorem2_ratio),
        theorem3_ratio=str(p.theorem3_ratio),
        parameters=p,
        family=family or rel.name,
        relation=rel.describe(),
        enumeration_check=check,
        decision_tree_depth=decision_tree_depth,
    )
