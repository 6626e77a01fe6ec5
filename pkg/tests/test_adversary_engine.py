from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from adversary_lab.features.adversary_engine import (
    DistancePairing,
    PairSet,
    ProgressTrace,
    SuperpositionSpec,
    TheoremCheck,
    check_lemma1,
    check_step_bound,
    density_innerproduct_relation,
    distance_trace,
    lemma1_factor,
    progress_trace,
    query_contributions,
    relation_setting_checks,
    relation_superposition,
    run_bipartite,
    run_bipartite_states,
    search_setting_checks,
    search_superposition,
    step_violations,
)
from adversary_lab.features.algorithms import classical_lookup, grover_search, random_algorithm
from adversary_lab.features.bound_calculator import (
    family_relation,
    relation_parameters,
    search_identification_table,
)
from adversary_lab.features.query_model import InputAssignment, simulate_trajectory, worst_case_error
from adversary_lab.features.tensor_core import StateVector, check_density_matrix
from adversary_lab.platform.errors import DegenerateRelationError, InvalidInputError

SLACK = 1e-9


def _search_run(alg, N):  # noqa: N803
    f = search_identification_table(N)
    sup, pairs = search_superposition(list(f.inputs()))
    return f, sup, pairs, run_bipartite_states(alg, sup)


def test_lemma1_factor_saturates_at_one_half():
    assert lemma1_factor(0.0) == 0.0
    assert lemma1_factor(0.1) == pytest.approx(2 * math.sqrt(0.09))
    assert lemma1_factor(0.5) == 1.0
    assert lemma1_factor(0.9) == 1.0
    with pytest.raises(InvalidInputError):
        lemma1_factor(-0.1)


def test_superposition_validation():
    x = InputAssignment.boolean((0, 1))
    with pytest.raises(InvalidInputError):
        SuperpositionSpec((x, x), np.array([0.6, 0.8]))
    with pytest.raises(InvalidInputError):
        SuperpositionSpec((x,), np.array([0.5]))
    sup = SuperpositionSpec.two_sided([x], [InputAssignment.boolean((1, 1)), InputAssignment.boolean((0, 0))])
    assert sup.side_sizes() == (1, 2)
    assert float(np.sum(np.abs(sup.amplitudes) ** 2)) == pytest.approx(1.0)


def test_relation_superposition_rejects_pairs_outside_sides():
    xs = [InputAssignment.boolean((0, 0))]
    ys = [InputAssignment.boolean((0, 1))]
    with pytest.raises(DegenerateRelationError):
        relation_superposition(xs, ys, [("00", "11")])
    with pytest.raises(DegenerateRelationError):
        relation_superposition(xs, ys, [])


@pytest.mark.parametrize("N", [4, 8, 16])
@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_search_chain_holds_for_grover(N, t):  # noqa: N803
    alg = grover_search(N, t)
    f, sup, pairs, run = _search_run(alg, N)
    eps = worst_case_error(alg, f)
    trace = progress_trace(run.rhos(), pairs, epsilon=eps, bound=2 * math.sqrt(N - 1))
    assert trace.T == t
    assert trace.series[0] == pytest.approx(N - 1, abs=SLACK)
    checks = search_setting_checks(trace, N, eps, SLACK)
    failed = [c.label for c in checks if not c.passed]
    assert failed == []
    assert check_step_bound(trace, 2 * math.sqrt(N - 1), SLACK)
    assert all(check_density_matrix(rho) for rho in run.rhos())


def test_exact_algorithm_ends_with_no_cross_mass(lookup_search4):
    f, sup, pairs, run = _search_run(lookup_search4, 4)
    trace = progress_trace(run.rhos(), pairs, epsilon=0.0)
    assert trace.series[-1] == pytest.approx(0.0, abs=SLACK)
    assert sum(trace.deltas) == pytest.approx(3.0, abs=SLACK)


def test_step_violations_are_one_based():
    trace = ProgressTrace(series=[3.0, 2.5, 0.5, 0.4], deltas=[0.5, 2.0, 0.1])
    assert step_violations(trace, 1.0, 0.0) == [2]
    assert not check_step_bound(trace, 1.0, 0.0)
    with pytest.raises(InvalidInputError):
        step_violations(trace, 0.0)


def test_progress_trace_requires_consistent_lengths():
    with pytest.raises(ValueError):
        ProgressTrace(series=[1.0, 0.5], deltas=[])


def test_theorem_check_margins():
    assert TheoremCheck.at_most("a", 1.0, 2.0, 0.0).margin == 1.0
    assert not TheoremCheck.at_least("b", 1.0, 2.0, 0.5).passed
    assert TheoremCheck.equals("c", 1.0, 1.0 + 1e-12, 1e-9).passed


def test_lemma1_on_exact_lookup_search(lookup_search4):
    f, sup, _, run = _search_run(lookup_search4, 4)
    report = check_lemma1(run.rho_end(), sup, f, 0.0, SLACK)
    assert report.passed
    assert report.checked_pairs == 6
    assert report.max_ratio == pytest.approx(0.0, abs=SLACK)


def test_lemma1_on_exact_lookup_permutation_inversion():
    rel = family_relation("perminv", n=4)
    f = rel.truth_table
    alg = classical_lookup(4, readout=f, alphabet_size=4)
    sup, _ = relation_superposition(rel.x_inputs(), rel.y_inputs(), rel.labelled_pairs())
    rho_end = run_bipartite_states(alg, sup).rho_end()
    report = check_lemma1(rho_end, sup, f, 0.0, SLACK)
    assert report.passed
    assert report.checked_pairs == 12 * 12


def test_lemma1_on_grover_with_measured_error():
    alg = grover_search(8, 2)
    f, sup, _, run = _search_run(alg, 8)
    eps = worst_case_error(alg, f)
    assert 0 < eps < 0.5
    report = check_lemma1(run.rho_end(), sup, f, eps, SLACK)
    assert report.passed
    rho = run.rho_end()
    bound = lemma1_factor(eps) / sup.size
    off = rho[~np.eye(sup.size, dtype=bool)]
    assert np.max(np.abs(off)) <= bound + SLACK


def test_lemma1_rejects_large_error(lookup_search4):
    f, sup, _, run = _search_run(lookup_search4, 4)
    with pytest.raises(InvalidInputError):
        check_lemma1(run.rho_end(), sup, f, 0.5)


@pytest.mark.parametrize("seed", range(34))
def test_search_step_bound_for_random_algorithms(seed):
    alg = random_algorithm(8, 1 + seed % 3, seed=seed)
    _, _, pairs, run = _search_run(alg, 8)
    trace = progress_trace(run.rhos(), pairs)
    assert trace.series[0] == pytest.approx(7.0, abs=SLACK)
    assert trace.max_delta <= 2 * math.sqrt(7) + SLACK


@pytest.mark.parametrize("seed", range(33))
def test_and_of_ors_step_bound_for_random_algorithms(seed):
    rel = family_relation("andofors", n=4)
    params = relation_parameters(rel)
    alg = random_algorithm(4, 1 + seed % 3, seed=1000 + seed)
    sup, pairs = relation_superposition(rel.x_inputs(), rel.y_inputs(), rel.labelled_pairs())
    trace = progress_trace(run_bipartite(alg, sup), pairs)
    checks = relation_setting_checks(trace, params, params.x_size, params.y_size, params.relation_size, None, SLACK)
    assert [c.label for c in checks] == [
        "relation.initial_mass",
        "relation.step_decrease_lmax",
        "relation.step_decrease_ll",
    ]
    assert all(c.passed for c in checks)


@pytest.mark.parametrize("seed", range(33))
def test_permutation_inversion_step_bound_for_random_algorithms(seed):
    rel = family_relation("perminv", n=4)
    params = relation_parameters(rel)
    alg = random_algorithm(4, 1 + seed % 3, answer_bits=2, seed=2000 + seed)
    sup, pairs = relation_superposition(rel.x_inputs(), rel.y_inputs(), rel.labelled_pairs())
    trace = progress_trace(run_bipartite(alg, sup), pairs)
    assert trace.max_delta <= math.sqrt(params.l_max) + SLACK


def test_relation_chain_with_exact_lookup_on_and_of_ors():
    rel = family_relation("andofors", n=4)
    params = relation_parameters(rel)
    alg = classical_lookup(4, readout=rel.truth_table)
    sup, pairs = relation_superposition(rel.x_inputs(), rel.y_inputs(), rel.labelled_pairs())
    trace = progress_trace(run_bipartite(alg, sup), pairs, epsilon=0.0)
    checks = relation_setting_checks(trace, params, params.x_size, params.y_size, params.relation_size, 0.0, SLACK)
    assert len(checks) == 6
    assert all(c.passed for c in checks)
    assert trace.series[0] == pytest.approx(8 / (2 * math.sqrt(16)))


def test_query_contributions_bound_each_step():
    alg = random_algorithm(4, 2, seed=7)
    rel = family_relation("andofors", n=4)
    sup, pairs = relation_superposition(rel.x_inputs(), rel.y_inputs(), rel.labelled_pairs())
    run = run_bipartite_states(alg, sup)
    trace = progress_trace(run.rhos(), pairs)
    for k, before in enumerate(run.pre_query):
        per_index = query_contributions(before, run.samples[k + 1], pairs, alg.layout)
        assert per_index.shape == (4,)
        assert abs(trace.deltas[k]) <= per_index.sum() + SLACK


def test_distance_sum_growth_for_grover():
    alg = grover_search(16, 3)
    f = search_identification_table(16)
    trace = distance_trace(alg, list(f.inputs()), DistancePairing.REFERENCE,
                           reference=InputAssignment.boolean([0] * 16))
    assert trace.pair_count == 16
    assert trace.series[0] == pytest.approx(0.0, abs=1e-12)
    for t, delta in enumerate(trace.series):
        assert delta <= 4 * t * t + SLACK


def test_distance_sum_of_exact_lookup_reaches_two_n(lookup_search4):
    f = search_identification_table(4)
    trace = distance_trace(lookup_search4, list(f.inputs()), DistancePairing.REFERENCE,
                           reference=InputAssignment.boolean([0] * 4))
    assert trace.series[-1] >= 2 * 4 - 2 * math.sqrt(4) - SLACK
    assert trace.series[-1] == pytest.approx(8.0)


def test_distance_relation_pairing_needs_pairs(grover4):
    f = search_identification_table(4)
    with pytest.raises(InvalidInputError):
        distance_trace(grover4, list(f.inputs()), DistancePairing.RELATION)
    trace = distance_trace(grover4, list(f.inputs()), DistancePairing.RELATION, pairs=[("1000", "0100")])
    assert trace.series[-1] == pytest.approx(2.0)


def test_gram_identity_reports_constants():
    rel = family_relation("andofors", n=4)
    sup, _ = relation_superposition(rel.x_inputs(), rel.y_inputs(), rel.labelled_pairs())
    report = density_innerproduct_relation(random_algorithm(4, 3, seed=3), sup)
    assert report.max_deviation <= 1e-10
    assert report.steps == 4
    assert report.measured_constant == pytest.approx(1 / (2 * math.sqrt(4 * 4)))
    assert report.stated_constant == pytest.approx(1 / (4 * 4 * 4))


def test_pair_set_labels():
    f = search_identification_table(4)
    sup, pairs = search_superposition(list(f.inputs()))
    assert len(pairs) == 12
    assert pairs.labelled(sup)[0] == ("0001", "0010")
    assert_allclose(np.abs(sup.amplitudes), 0.5)


@pytest.mark.parametrize("seed", [9, 23])
def test_bipartite_columns_are_weighted_single_input_states(seed):
    alg = random_algorithm(4, 3, seed=seed)
    f = search_identification_table(4)
    sup, _ = search_superposition(list(f.inputs()))
    run = run_bipartite_states(alg, sup)
    for x, alpha in zip(sup.inputs, sup.amplitudes):
        trajectory = simulate_trajectory(alg, x)
        for sample, psi in zip(run.samples + (run.final,), trajectory.samples + (trajectory.final,)):
            column = StateVector(sample.column(x.label) / alpha)
            assert column.inner(psi) == pytest.approx(1.0, abs=1e-10)
            assert_allclose(sample.column(x.label), alpha * psi.amplitudes, atol=1e-10)


@pytest.mark.parametrize("seed", [5, 17])
def test_global_phases_on_unitaries_leave_rho_and_distances_unchanged(seed):
    alg = random_algorithm(4, 3, seed=seed)
    phased = alg.with_unitaries([u.scaled(np.exp(0.7j * k)) for k, u in enumerate(alg.unitaries)])
    assert phased.validate() == []
    f = search_identification_table(4)
    sup, pairs = search_superposition(list(f.inputs()))

    for rho, rho_phased in zip(run_bipartite(alg, sup), run_bipartite(phased, sup), strict=True):
        assert_allclose(rho_phased, rho, atol=1e-10)
    assert_allclose(progress_trace(run_bipartite(phased, sup), pairs).series,
                    progress_trace(run_bipartite(alg, sup), pairs).series, atol=1e-10)

    zero = InputAssignment.boolean([0] * 4)
    plain = distance_trace(alg, list(f.inputs()), DistancePairing.REFERENCE, reference=zero)
    shifted = distance_trace(phased, list(f.inputs()), DistancePairing.REFERENCE, reference=zero)
    assert_allclose(shifted.series, plain.series, atol=1e-10)
