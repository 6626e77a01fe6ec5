from __future__ import annotations

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from adversary_lab.features.query_model import TruthTable
from adversary_lab.platform.env import get_check_slack
from adversary_lab.platform.errors import InvalidInputError

from .engine_contracts import Lemma1Report, PairViolation, SuperpositionSpec
from .progress import lemma1_factor


def check_lemma1(
    rho_end: ArrayLike,
    sup: SuperpositionSpec,
    f: TruthTable,
    eps: float,
    slack: Optional[float] = None,
) -> Lemma1Report:
    """
    For every pair with f(x) != f(y): |rho_xy| <= 2 sqrt(eps(1-eps)) |alpha_x| |alpha_y| + slack.

    Each unordered pair is checked once (rho is Hermitian).
    """
    if not 0.0 <= eps < 0.5:
        raise InvalidInputError(f"the overlap bound needs eps in [0, 1/2), got {eps}")
    slack = get_check_slack() if slack is None else slack
    rho = np.asarray(rho_end)
    if rho.shape != (sup.size, sup.size):
        raise InvalidInputError(f"rho shape {rho.shape} does not match {sup.size} inputs")
    missing = [x.label for x in sup.inputs if x not in f]
    if missing:
        raise InvalidInputError(f"{f.name} is undefined on {', '.join(missing[:5])}")

    c = lemma1_factor(eps)
    values = [f(x) for x in sup.inputs]
    mags = np.abs(sup.amplitudes)
    violations: list[PairViolation] = []
    checked = 0
    worst: Optional[float] = None
    for a in range(sup.size):
        for b in range(a + 1, sup.size):
            if values[a] == values[b]:
                continue
            checked += 1
            weight = mags[a] * mags[b]
            magnitude = float(abs(rho[a, b]))
            bound = c * float(weight)
            if weight > 0:
                ratio = magnitude / float(weight)
                worst = ratio if worst is None else max(worst, ratio)
            if magnitude > bound + slack:
                violations.append(
                    PairViolation(x=sup.inputs[a].label, y=sup.inputs[b].label, magnitude=magnitude, bound=bound)
                )
    return Lemma1Report(epsilon=eps, factor=c, checked_pairs=checked, max_ratio=worst, violations=violations)
