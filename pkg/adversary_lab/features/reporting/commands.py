"""
Experiment commands: simulate, trace, bound, bs, and concurrent sweeps.

Each command turns an ExperimentConfig into a CommandOutcome; writing the
outcome and mapping errors to exit codes is left to the caller.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence

from adversary_lab.features.adversary_engine import (
    BipartiteRun,
    DistancePairing,
    PairSet,
    ProgressTrace,
    TheoremCheck,
    check_lemma1,
    density_innerproduct_relation,
    distance_trace,
    progress_trace,
    query_contributions,
    relation_setting_checks,
    relation_superposition,
    run_bipartite_states,
    search_setting_checks,
    search_superposition,
    step_violations,
)
from adversary_lab.features.algorithms import (
    AlgorithmFamilySpec,
    build_algorithm,
    lookup_answer_bits,
    parse_algorithm_spec,
)
from adversary_lab.features.bound_calculator import (
    AdversaryRelation,
    RelationFamily,
    and_of_ors_table,
    block_sensitivity,
    bound_report,
    bs_relation,
    closed_form_parameters,
    counting_table,
    family_relation,
    implied_query_lower_bound,
    majority_table,
    parity_table,
    permutation_inversion_table,
    read_relation,
    relation_parameters,
    search_best_relation,
    search_identification_table,
    theorem2_bound,
)
from adversary_lab.features.query_model import (
    InputAssignment,
    QueryAlgorithm,
    TruthTable,
    read_truth_table,
    success_probabilities,
)
from adversary_lab.features.tensor_core import check_density_matrix
from adversary_lab.platform.env import get_check_slack, get_psd_tol, get_sweep_workers
from adversary_lab.platform.errors import AdversaryLabError, ConfigError
from adversary_lab.platform.observability.run_context import RunTimer, new_run_id, set_run_id
from adversary_lab.platform.observability.smart_logger import SmartLogger

from .config_loader import build_config
from .report_contracts import REPORT_SCHEMA, CommandKind, CommandOutcome, ExitCode, ExperimentConfig, OutputFormat
from .report_writer import render_csv, render_json, write_atomic

TRACE_COLUMNS = ("k", "S_k", "delta", "bound", "pass")
SIMULATE_COLUMNS = ("input", "f", "success_probability")
GRAM_TOLERANCE = 1e-10
# per-position tables are echoed only for small relations
DETAIL_LIMIT = 64


def _slack(config: ExperimentConfig) -> float:
    return config.tol if config.tol is not None else get_check_slack()


def _require_file(path: Optional[Path], what: str) -> Path:
    if path is None:
        raise ConfigError(f"{what} is required for this command")
    if not Path(path).is_file():
        raise ConfigError(f"{what} not found", path=path)
    return Path(path)


def _family(config: ExperimentConfig) -> RelationFamily:
    try:
        return RelationFamily(config.family)
    except ValueError:
        names = ", ".join(f.value for f in RelationFamily)
        raise ConfigError(f"unknown family {config.family!r}; expected one of {names}") from None


def _size(config: ExperimentConfig, fallback: Optional[int] = None) -> int:
    n = config.n or fallback
    if n is None:
        raise ConfigError("--n is required for this family")
    return n


def family_truth_table(config: ExperimentConfig, n: int) -> TruthTable:
    """The promise function a family's algorithms are judged against."""
    family = _family(config)
    if family is RelationFamily.SEARCH:
        return search_identification_table(n)
    if family is RelationFamily.AND_OF_ORS:
        return and_of_ors_table(n)
    if family is RelationFamily.COUNTING:
        if config.eps_value is None:
            raise ConfigError("counting needs --eps")
        return counting_table(n, config.eps_value)
    if family is RelationFamily.PERMUTATION_INVERSION:
        return permutation_inversion_table(n)
    if family is RelationFamily.PARITY:
        return parity_table(n)
    return majority_table(n)


def _algorithm_spec(config: ExperimentConfig, n: Optional[int], alphabet: int = 2) -> AlgorithmFamilySpec:
    return parse_algorithm_spec(
        config.algorithm or "family=lookup",
        N=n,
        iterations=config.iterations,
        convention=config.convention,
        seed=config.seed,
        alphabet=alphabet,
        answer_bits=lookup_answer_bits(alphabet),
    )


def _verdict(checks: Sequence[TheoremCheck]) -> ExitCode:
    return ExitCode.OK if all(c.passed for c in checks) else ExitCode.VIOLATION


def _check_rows(checks: Sequence[TheoremCheck]) -> list[tuple[str, str]]:
    return [
        (c.label, f"{'pass' if c.passed else 'FAIL'}  {c.measured:.6g} {c.relation} {c.bound:.6g}") for c in checks
    ]


# =============================================================================
# simulate
# =============================================================================

def cmd_simulate(config: ExperimentConfig) -> CommandOutcome:
    if config.truth_table is not None:
        f = read_truth_table(_require_file(config.truth_table, "truth table"))
    elif config.family is not None:
        f = family_truth_table(config, _size(config))
    else:
        raise ConfigError("simulate needs --truth-table or --family")
    spec = _algorithm_spec(config, config.n or f.n, f.alphabet_size)
    alg = build_algorithm(spec, readout=f)
    probs = success_probabilities(alg, f)
    eps = float(min(max(1.0 - min(probs.values()), 0.0), 1.0))
    report = {
        "schema": REPORT_SCHEMA,
        "command": CommandKind.SIMULATE.value,
        "config": config.describe(),
        "algorithm": alg.describe(),
        "function": f.name,
        "success_probabilities": probs,
        "epsilon": eps,
    }
    rows = [{"input": x.label, "f": f(x), "success_probability": probs[x.label]} for x in f.inputs()]
    return CommandOutcome(
        report=report,
        csv_columns=SIMULATE_COLUMNS,
        csv_rows=rows,
        summary=[("algorithm", alg.name), ("function", f.name), ("epsilon", f"{eps:.6g}")],
    )


# =============================================================================
# trace
# =============================================================================

def _structural_checks(rhos, slack: float) -> list[TheoremCheck]:
    invalid = [k for k, rho in enumerate(rhos) if not check_density_matrix(rho, get_psd_tol())]
    return [
        TheoremCheck.equals(
            "structure.density_matrices", float(len(invalid)), 0.0, 0.0,
            "every rho_k is Hermitian, PSD and of unit trace"
            + (f"; failing k: {invalid}" if invalid else ""),
        )
    ]


def _trace_rows(trace: ProgressTrace, bound: float, slack: float) -> list[dict]:
    rows = [{"k": 0, "S_k": trace.series[0], "delta": None, "bound": bound, "pass": None}]
    for k, (s, d) in enumerate(zip(trace.series[1:], trace.deltas), start=1):
        rows.append({"k": k, "S_k": s, "delta": d, "bound": bound, "pass": d <= bound + slack})
    return rows


def _contributions(run: BipartiteRun, pairs: PairSet) -> list[list[float]]:
    """Per query k, the change of S carried by each index i (sums bound the k-th decrease)."""
    layout = run.algorithm.layout
    return [
        query_contributions(before, after, pairs, layout).tolist()
        for before, after in zip(run.pre_query, run.samples[1:])
    ]


def _search_trace(config: ExperimentConfig, slack: float) -> tuple[dict, list[TheoremCheck], QueryAlgorithm, ProgressTrace]:
    spec = _algorithm_spec(config, config.n)
    N = spec.N  # noqa: N806
    f = search_identification_table(N)
    alg = build_algorithm(spec, readout=f)
    probs = success_probabilities(alg, f)
    eps = float(min(max(1.0 - min(probs.values()), 0.0), 1.0))

    sup, pairs = search_superposition(list(f.inputs()))
    run = run_bipartite_states(alg, sup)
    rhos = run.rhos()
    bound = config.bound or 2.0 * math.sqrt(N - 1)
    trace = progress_trace(rhos, pairs, epsilon=eps, bound=bound)
    checks = search_setting_checks(trace, N, eps, slack) + _structural_checks(rhos, slack)

    lemma = check_lemma1(run.rho_end(), sup, f, eps, slack) if eps < 0.5 else None
    if lemma is not None:
        checks.append(
            TheoremCheck.equals("lemma1.cross_class_overlap", float(len(lemma.violations)), 0.0, 0.0,
                                f"{lemma.checked_pairs} pairs checked at c(eps) = {lemma.factor:.6g}")
        )

    zero = InputAssignment.boolean([0] * N)
    distance = distance_trace(alg, list(f.inputs()), DistancePairing.REFERENCE, reference=zero)
    growth = max(d - 4.0 * t * t for t, d in enumerate(distance.series))
    checks.append(TheoremCheck.at_most("distance.growth", growth, 0.0, slack, "Delta(t) <= 4 t^2"))
    if eps <= slack:
        checks.append(
            TheoremCheck.at_least("distance.final", distance.series[-1], 2.0 * N - 2.0 * math.sqrt(N), slack,
                                  "Delta(T) >= 2N - 2 sqrt(N) for an exact algorithm")
        )
    report = {
        "setting": "search",
        "algorithm": alg.describe(),
        "epsilon": eps,
        "trace": trace,
        "query_contributions": _contributions(run, pairs),
        "lemma1": lemma,
        "distance": distance,
    }
    return report, checks, alg, trace


def _relation_for(config: ExperimentConfig) -> AdversaryRelation:
    if config.relation_file is not None:
        return read_relation(_require_file(config.relation_file, "relation file"))
    if config.family is None:
        raise ConfigError("trace needs --family or --relation-file")
    return family_relation(_family(config), n=_size(config), eps=config.eps_value)


def _relation_trace(config: ExperimentConfig, slack: float) -> tuple[dict, list[TheoremCheck], QueryAlgorithm, ProgressTrace]:
    rel = _relation_for(config)
    f = rel.truth_table
    if f is None and config.truth_table is not None:
        f = read_truth_table(_require_file(config.truth_table, "truth table"))
    spec = _algorithm_spec(config, rel.n, rel.alphabet_size)
    alg = build_algorithm(spec, readout=f)
    eps = None
    if f is not None:
        probs = success_probabilities(alg, f)
        eps = float(min(max(1.0 - min(probs.values()), 0.0), 1.0))

    params = relation_parameters(rel)
    sup, pairs = relation_superposition(rel.x_inputs(), rel.y_inputs(), rel.labelled_pairs(), rel.name)
    run = run_bipartite_states(alg, sup)
    rhos = run.rhos()
    bound = config.bound or math.sqrt(params.l_max)
    trace = progress_trace(rhos, pairs, epsilon=eps, bound=bound)
    checks = relation_setting_checks(
        trace, params, params.x_size, params.y_size, params.relation_size, eps, slack
    ) + _structural_checks(rhos, slack)

    lemma = check_lemma1(run.rho_end(), sup, f, eps, slack) if f is not None and eps < 0.5 else None
    if lemma is not None:
        checks.append(
            TheoremCheck.equals("lemma1.cross_class_overlap", float(len(lemma.violations)), 0.0, 0.0,
                                f"{lemma.checked_pairs} pairs checked at c(eps) = {lemma.factor:.6g}")
        )
    gram = density_innerproduct_relation(alg, sup)
    checks.append(
        TheoremCheck.at_most("gram_identity", gram.max_deviation, 0.0, GRAM_TOLERANCE,
                             "rho_xy = conj(alpha_x) alpha_y <psi_x|psi_y>")
    )
    report = {
        "setting": "relation",
        "relation": rel.describe(),
        "parameters": params.degrees(),
        "algorithm": alg.describe(),
        "epsilon": eps,
        "trace": trace,
        "query_contributions": _contributions(run, pairs),
        "lemma1": lemma,
        "gram_identity": gram,
    }
    return report, checks, alg, trace


def cmd_trace(config: ExperimentConfig) -> CommandOutcome:
    slack = _slack(config)
    search = config.relation_file is None and config.family == RelationFamily.SEARCH.value
    body, checks, alg, trace = (_search_trace if search else _relation_trace)(config, slack)
    violating: list[int] = []
    if config.bound is not None:
        violating = step_violations(trace, config.bound, slack)
        checks.append(
            TheoremCheck.at_most("step_bound.requested", trace.max_delta, config.bound, slack,
                                 f"violating steps: {violating}" if violating else "")
        )
    exit_code = _verdict(checks)
    report = {
        "schema": REPORT_SCHEMA,
        "command": CommandKind.TRACE.value,
        "config": config.describe(),
        **body,
        "checks": checks,
        "violating_steps": violating,
        "passed": exit_code is ExitCode.OK,
    }
    return CommandOutcome(
        report=report,
        exit_code=exit_code,
        csv_columns=TRACE_COLUMNS,
        csv_rows=_trace_rows(trace, trace.bound_per_step, slack),
        summary=[("algorithm", alg.name), ("T", str(trace.T))] + _check_rows(checks),
    )


# =============================================================================
# bound
# =============================================================================

def _bound_dump(report) -> dict:
    p = report.parameters
    exclude = {"parameters": {"l_x", "l_y"}} if p.x_size + p.y_size > DETAIL_LIMIT else None
    return report.model_dump(mode="python", exclude=exclude)


def cmd_bound(config: ExperimentConfig) -> CommandOutcome:
    slack = _slack(config)
    checks: list[TheoremCheck] = []
    if config.relation_file is not None or config.family is not None:
        rel = _relation_for(config)
        closed = None
        if config.relation_file is None:
            family = _family(config)
            closed = closed_form_parameters(family, n=_size(config), eps=config.eps_value)
        report = bound_report(rel, family=config.family or rel.name, closed_form=closed)
        if report.enumeration_check is not None:
            checks.append(
                TheoremCheck.equals("enumeration.closed_form", float(report.enumeration_check.matches), 1.0, 0.0,
                                    "enumerated degrees equal the closed forms")
            )
        if config.family == RelationFamily.COUNTING.value and config.eps_value is not None:
            eps = config.eps_value
            checks.append(
                TheoremCheck.exact("counting.ratio_identity", report.parameters.theorem2_ratio,
                                   (1 + eps) / (eps * eps), "m m' / (l l') = (1+eps)/eps^2")
            )
    elif config.truth_table is not None:
        f = read_truth_table(_require_file(config.truth_table, "truth table"))
        report = search_best_relation(f)
        if report.decision_tree_depth is not None:
            checks.append(
                TheoremCheck.at_most("relation_search.ceiling", report.theorem3_value,
                                     float(report.decision_tree_depth), slack,
                                     "best bound never exceeds the decision-tree depth")
            )
    else:
        raise ConfigError("bound needs --family, --relation-file or --truth-table")

    checks.append(
        TheoremCheck.at_least("bounds.lmax_refines", report.theorem3_value, report.theorem2_value, 1e-12,
                              "sqrt(m m'/l_max) >= sqrt(m m'/(l l'))")
    )
    exit_code = _verdict(checks)
    payload = {
        "schema": REPORT_SCHEMA,
        "command": CommandKind.BOUND.value,
        "config": config.describe(),
        "report": _bound_dump(report),
        "implied_queries_exact": implied_query_lower_bound(report.parameters, 0.0),
        "checks": checks,
        "passed": exit_code is ExitCode.OK,
    }
    return CommandOutcome(
        report=payload,
        exit_code=exit_code,
        summary=[
            ("relation", report.family),
            ("degrees", ", ".join(f"{k}={v}" for k, v in report.parameters.degrees().items())),
            ("sqrt(mm'/ll')", f"{report.theorem2_value:.6g}"),
            ("sqrt(mm'/l_max)", f"{report.theorem3_value:.6g}"),
        ] + _check_rows(checks),
    )


# =============================================================================
# bs
# =============================================================================

def cmd_bs(config: ExperimentConfig) -> CommandOutcome:
    f = read_truth_table(_require_file(config.truth_table, "truth table"))
    result = block_sensitivity(f)
    checks: list[TheoremCheck] = []
    params = None
    bound = None
    if result.bs > 0:
        params = relation_parameters(bs_relation(f, result))
        bound = theorem2_bound(params)
        checks.append(
            TheoremCheck.exact("bs.relation_ratio", params.theorem2_ratio, Fraction(result.bs), "m m' / (l l') = bs(f)")
        )
    exit_code = _verdict(checks)
    report = {
        "schema": REPORT_SCHEMA,
        "command": CommandKind.BS.value,
        "config": config.describe(),
        "function": f.name,
        "block_sensitivity": result,
        "parameters": params.degrees() if params else None,
        "bound": bound,
        "checks": checks,
        "passed": exit_code is ExitCode.OK,
    }
    return CommandOutcome(
        report=report,
        exit_code=exit_code,
        summary=[("function", f.name), ("bs", str(result.bs)), ("witness", result.witness),
                 ("bound", "-" if bound is None else f"{bound:.6g}")],
    )


# =============================================================================
# dispatch, output and sweeps
# =============================================================================

COMMANDS: dict[CommandKind, Callable[[ExperimentConfig], CommandOutcome]] = {
    CommandKind.SIMULATE: cmd_simulate,
    CommandKind.TRACE: cmd_trace,
    CommandKind.BOUND: cmd_bound,
    CommandKind.BS: cmd_bs,
}


def run_command(config: ExperimentConfig) -> CommandOutcome:
    timer = RunTimer()
    SmartLogger.log(
        "INFO",
        "Command started",
        category=f"adversary_lab.cli.{config.command.value}.start",
        params=config.describe(),
    )
    outcome = COMMANDS[config.command](config)
    SmartLogger.log(
        "INFO",
        "Command finished",
        category=f"adversary_lab.cli.{config.command.value}.done",
        params={"exit_code": int(outcome.exit_code), "ms": timer.ms()},
    )
    return outcome


def write_outcome(outcome: CommandOutcome, config: ExperimentConfig) -> Optional[str]:
    """
    Write the outcome where the config asks; returns the JSON text when it
    should go to stdout instead.
    """
    text = render_json(outcome.report)
    if config.format is OutputFormat.CSV:
        if not outcome.csv_columns:
            raise ConfigError(f"csv output is not available for {config.command.value}")
        if config.out is None:
            raise ConfigError("csv output needs --out")
        out = Path(config.out)
        write_atomic(out, render_csv(outcome.csv_columns, outcome.csv_rows))
        write_atomic(out.with_suffix(".json"), text)
        return None
    if config.out is None:
        return text
    write_atomic(config.out, text)
    return None


def _sweep_one(path: Path) -> tuple[Path, ExitCode, str]:
    set_run_id(new_run_id("sweep"))
    try:
        config = build_config(None, {}, path)
        if config.out is None:
            config = config.model_copy(update={"out": path.with_suffix(".json")})
        outcome = run_command(config)
        write_outcome(outcome, config)
        return path, outcome.exit_code, str(config.out)
    except (AdversaryLabError, OSError) as exc:
        SmartLogger.log(
            "ERROR",
            "Sweep experiment failed",
            category="adversary_lab.cli.sweep.error",
            params={"config": str(path), "error": str(exc)},
        )
        return path, ExitCode.USAGE, str(exc)


def run_sweep(paths: Sequence[Path | str], workers: Optional[int] = None) -> list[tuple[Path, ExitCode, str]]:
    """Run independent experiment configs concurrently; results keep the input order."""
    workers = workers or get_sweep_workers()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_one, [Path(p) for p in paths]))
