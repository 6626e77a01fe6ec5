"""
Adversary engine (facade): bipartite runs, progress traces, overlap checks and distance sums.
"""

from __future__ import annotations

from .bipartite_run import BipartiteRun, run_bipartite, run_bipartite_states
from .distance_sums import density_innerproduct_relation, distance_trace
from .engine_contracts import (
    DistancePairing,
    DistanceTrace,
    GramIdentityReport,
    Lemma1Report,
    PairSet,
    PairViolation,
    ProgressTrace,
    RelationDegrees,
    SuperpositionSpec,
    TheoremCheck,
)
from .lemma_checks import check_lemma1
from .progress import (
    check_step_bound,
    lemma1_factor,
    progress_trace,
    query_contributions,
    relation_setting_checks,
    search_setting_checks,
    step_violations,
)
from .superpositions import relation_superposition, search_superposition

__all__ = [
    "BipartiteRun",
    "DistancePairing",
    "DistanceTrace",
    "GramIdentityReport",
    "Lemma1Report",
    "PairSet",
    "PairViolation",
    "ProgressTrace",
    "RelationDegrees",
    "SuperpositionSpec",
    "TheoremCheck",
    "check_lemma1",
    "check_step_bound",
    "density_innerproduct_relation",
    "distance_trace",
    "lemma1_factor",
    "progress_trace",
    "query_contributions",
    "relation_setting_checks",
    "relation_superposition",
    "run_bipartite",
    "run_bipartite_states",
    "search_setting_checks",
    "search_superposition",
    "step_violations",
]
