"""
Progress measures S_k and the proof-chain checks built on them.

S_k = sum over the pair set of |(rho_k)_xy|. Both settings follow the same chain:
S_0 is large, S_T is small for an algorithm with error eps, and one query can
only decrease S by a bounded amount, so T is bounded from below.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from adversary_lab.features.query_model import RegisterLayout
from adversary_lab.features.tensor_core import BipartiteState, restricted_offdiag_sum
from adversary_lab.platform.env import get_check_slack
from adversary_lab.platform.errors import InvalidInputError

from .engine_contracts import PairSet, ProgressTrace, RelationDegrees, TheoremCheck


def lemma1_factor(eps: float) -> float:
    """c(eps) = 2 sqrt(eps (1 - eps)) for eps < 1/2; the overlap bound is vacuous (1) above."""
    if eps < 0:
        raise InvalidInputError(f"error probability must be non-negative, got {eps}")
    if eps >= 0.5:
        return 1.0
    return 2.0 * math.sqrt(eps * (1.0 - eps))


def progress_trace(
    rhos: Sequence[ArrayLike],
    pairs: PairSet,
    *,
    epsilon: Optional[float] = None,
    bound: Optional[float] = None,
) -> ProgressTrace:
    if not rhos:
        raise InvalidInputError("progress trace needs at least rho_0")
    series = [restricted_offdiag_sum(rho, pairs.pairs) for rho in rhos]
    deltas = [series[k - 1] - series[k] for k in range(1, len(series))]
    return ProgressTrace(
        series=series,
        deltas=deltas,
        epsilon_measured=epsilon,
        bound_per_step=bound,
        pair_set_descriptor=pairs.descriptor,
    )


def step_violations(trace: ProgressTrace, bound: float, slack: Optional[float] = None) -> list[int]:
    """1-based query numbers whose decrease exceeds bound + slack."""
    if bound <= 0:
        raise InvalidInputError(f"step bound must be positive, got {bound}")
    slack = get_check_slack() if slack is None else slack
    return [k for k, d in enumerate(trace.deltas, start=1) if d > bound + slack]


def check_step_bound(trace: ProgressTrace, bound: float, slack: Optional[float] = None) -> bool:
    return not step_violations(trace, bound, slack)


def search_setting_checks(
    trace: ProgressTrace,
    N: int,  # noqa: N803
    eps: float,
    slack: Optional[float] = None,
) -> list[TheoremCheck]:
    """Uniform superposition over the N single-marked inputs, all ordered pairs."""
    slack = get_check_slack() if slack is None else slack
    c = lemma1_factor(eps)
    step = 2.0 * math.sqrt(N - 1)
    need = (1.0 - c) * math.sqrt(N - 1) / 2.0
    return [
        TheoremCheck.equals("search.initial_mass", trace.series[0], float(N - 1), slack, "S_0 = N-1"),
        TheoremCheck.at_most("search.final_mass", trace.series[-1], c * (N - 1), slack, "S_T <= c(eps)(N-1)"),
        TheoremCheck.at_most("search.step_decrease", trace.max_delta, step, slack, "S_{k-1} - S_k <= 2 sqrt(N-1)"),
        TheoremCheck.at_least("search.query_count", float(trace.T), need, slack, "T >= (1-c(eps)) sqrt(N-1)/2"),
    ]


def relation_setting_checks(
    trace: ProgressTrace,
    params: RelationDegrees,
    x_size: int,
    y_size: int,
    relation_size: int,
    eps: Optional[float],
    slack: Optional[float] = None,
) -> list[TheoremCheck]:
    """
    Two-sided superposition over X and Y, pairs (x, y) in R.

    Without a measured eps only the initial mass and the per-query bounds are checked.
    """
    slack = get_check_slack() if slack is None else slack
    s0, s_t = trace.series[0], trace.series[-1]
    checks = [
        TheoremCheck.equals(
            "relation.initial_mass", s0, relation_size / (2.0 * math.sqrt(x_size * y_size)), slack,
            "S_0 = |R| / (2 sqrt(|X||Y|))",
        ),
        TheoremCheck.at_most(
            "relation.step_decrease_lmax", trace.max_delta, math.sqrt(params.l_max), slack,
            "S_{k-1} - S_k <= sqrt(l_max)",
        ),
        TheoremCheck.at_most(
            "relation.step_decrease_ll", trace.max_delta, math.sqrt(params.l * params.l_prime), slack,
            "S_{k-1} - S_k <= sqrt(l l')",
        ),
    ]
    if eps is None:
        return checks
    c = lemma1_factor(eps)
    progress_needed = (1.0 - c) * math.sqrt(params.m * params.m_prime) / 2.0
    return checks + [
        TheoremCheck.at_most("relation.final_mass", s_t, c * s0, slack, "S_T <= c(eps) S_0"),
        TheoremCheck.at_least(
            "relation.total_progress", s0 - s_t, progress_needed, slack, "S_0 - S_T >= (1-c(eps)) sqrt(m m')/2"
        ),
        TheoremCheck.at_least(
            "relation.query_count", float(trace.T), progress_needed / math.sqrt(params.l_max), slack,
            "T >= (1-c(eps)) sqrt(m m' / l_max)/2",
        ),
    ]


def _index_split_rhos(state: BipartiteState, layout: RegisterLayout) -> np.ndarray:
    """rho_i for every index value i; sum_i rho_i = rho."""
    cols = state.columns.reshape(layout.index_dim, -1, state.columns.shape[1])
    return np.einsum("irx,iry->ixy", cols.conj(), cols)


def query_contributions(
    before: BipartiteState,
    after: BipartiteState,
    pairs: PairSet,
    layout: RegisterLayout,
) -> np.ndarray:
    """
    Per-index change of one query: entry i is sum over pairs of |(rho_i)_xy before - after|.

    The oracle keeps every index subspace invariant, so the total of this
    vector bounds |S_{k-1} - S_k| by the triangle inequality.
    """
    if before.columns.shape != after.columns.shape or before.dim_a != layout.dim_a:
        raise InvalidInputError("states before and after the query must share the layout's shape")
    idx = np.array(pairs.pairs, dtype=np.int64).reshape(-1, 2)
    diff = _index_split_rhos(before, layout) - _index_split_rhos(after, layout)
    if idx.size == 0:
        return np.zeros(layout.index_dim)
    return np.abs(diff[:, idx[:, 0], idx[:, 1]]).sum(axis=1)
