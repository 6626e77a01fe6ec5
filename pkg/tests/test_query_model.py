from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from adversary_lab.features.algorithms import classical_lookup, constant_alg, grover_search, random_algorithm
from adversary_lab.features.bound_calculator import or_table, search_identification_table
from adversary_lab.features.query_model import (
    DenseStage,
    InputAssignment,
    OracleConvention,
    QueryAlgorithm,
    Register,
    RegisterLayout,
    TruthTable,
    answer_distribution,
    apply_phase_oracle,
    apply_xor_oracle,
    convert_convention,
    embed_state,
    format_truth_table,
    hosted_layout,
    parse_truth_table,
    read_truth_table,
    simulate,
    simulate_trajectory,
    success_probabilities,
    worst_case_error,
    write_truth_table,
)
from adversary_lab.features.tensor_core import StateVector, fidelity
from adversary_lab.platform.errors import ConfigError, InvalidInputError


def _boolean_inputs(n: int) -> list[InputAssignment]:
    return [InputAssignment.boolean(bits) for bits in itertools.product((0, 1), repeat=n)]


def test_layout_flat_index_puts_index_slowest():
    layout = RegisterLayout(index_dim=3, answer_bits=2, work_dim=5)
    assert layout.dim_a == 60
    assert layout.flat_index(1, 2, 3) == (1 * 4 + 2) * 5 + 3
    assert layout.output_capacity == 3


def test_input_assignment_validation():
    with pytest.raises(ValueError):
        InputAssignment(values=(0, 2), alphabet_size=2)
    with pytest.raises(ValueError):
        InputAssignment(values=(0, 0, 1), alphabet_size=3, permutation=True)
    assert InputAssignment.from_label("0a", alphabet_size=11).values == (0, 10)


def test_xor_oracle_flips_answer_by_queried_bit():
    layout = RegisterLayout(index_dim=3, answer_bits=1, work_dim=1)
    x = InputAssignment.boolean((0, 1, 0))
    out = apply_xor_oracle(StateVector.basis(layout.dim_a, layout.flat_index(1, 0)), layout, x)
    assert out.amplitudes[layout.flat_index(1, 1)] == pytest.approx(1.0)
    same = apply_xor_oracle(StateVector.basis(layout.dim_a, layout.flat_index(2, 1)), layout, x)
    assert same.amplitudes[layout.flat_index(2, 1)] == pytest.approx(1.0)


def test_xor_oracle_writes_multi_bit_values():
    layout = RegisterLayout(index_dim=4, answer_bits=2, work_dim=1)
    x = InputAssignment(values=(2, 0, 3, 1), alphabet_size=4, permutation=True)
    out = apply_xor_oracle(StateVector.basis(layout.dim_a, layout.flat_index(2, 1)), layout, x)
    assert out.amplitudes[layout.flat_index(2, 1 ^ 3)] == pytest.approx(1.0)


def test_phase_oracle_signs_only_answer_one():
    layout = RegisterLayout(index_dim=2, answer_bits=1, work_dim=1)
    psi = StateVector(np.full(4, 0.5))
    out = apply_phase_oracle(psi, layout, InputAssignment.boolean((1, 0)))
    assert_allclose(out.amplitudes, [0.5, -0.5, 0.5, 0.5])


def test_phase_oracle_refuses_non_boolean_inputs():
    layout = RegisterLayout(index_dim=2, answer_bits=1, work_dim=1)
    with pytest.raises(InvalidInputError):
        apply_phase_oracle(StateVector.basis(4), layout, InputAssignment(values=(0, 2), alphabet_size=3))


def test_algorithm_checks_unitary_dimensions():
    layout = RegisterLayout(index_dim=2)
    with pytest.raises(InvalidInputError):
        QueryAlgorithm(layout, OracleConvention.XOR, (DenseStage(np.eye(3)),))
    alg = QueryAlgorithm(layout, OracleConvention.XOR, (DenseStage(np.eye(4)), DenseStage(2 * np.eye(4))))
    assert alg.T == 1
    assert alg.validate() == [1]


def test_grover_n4_one_iteration_is_exact(search4, grover4):
    probs = success_probabilities(grover4, search4)
    assert set(probs) == {"1000", "0100", "0010", "0001"}
    assert all(p == pytest.approx(1.0, abs=1e-12) for p in probs.values())
    assert worst_case_error(grover4, search4) == pytest.approx(0.0, abs=1e-12)


def test_grover_zero_iterations_guesses_uniformly():
    f = search_identification_table(8)
    assert worst_case_error(grover_search(8, 0), f) == pytest.approx(7 / 8)


def test_trajectory_samples_after_u0_and_each_query(grover4):
    traj = simulate_trajectory(grover4, InputAssignment.boolean((0, 0, 1, 0)))
    assert len(traj.samples) == grover4.T + 1
    for state in (*traj.samples, traj.final):
        assert state.norm() == pytest.approx(1.0, abs=1e-12)


def test_lookup_reads_whole_input_into_work_register():
    alg = classical_lookup(3)
    assert alg.T == 3
    for x in _boolean_inputs(3):
        dist = answer_distribution(simulate(alg, x), alg.layout)
        value = int(x.label, 2)
        assert dist == {value: pytest.approx(1.0)}


def test_lookup_with_readout_answers_f(search4, lookup_search4):
    assert worst_case_error(lookup_search4, search4) == pytest.approx(0.0, abs=1e-12)
    f = or_table(3)
    assert worst_case_error(classical_lookup(3, readout=f), f) == pytest.approx(0.0, abs=1e-12)


def test_constant_algorithm_answers_its_value():
    f = or_table(2)
    probs = success_probabilities(constant_alg(2, 0), f)
    assert probs == {"00": pytest.approx(1.0), "01": 0.0, "10": 0.0, "11": 0.0}


def test_success_probabilities_need_enough_answer_values():
    alg = grover_search(2, 1)
    f = search_identification_table(3)
    with pytest.raises(InvalidInputError):
        success_probabilities(alg, f)


def test_answer_distribution_combines_slots_first_most_significant():
    layout = RegisterLayout(index_dim=2, answer_bits=1, work_dim=3, output_slots=(Register.WORK, Register.INDEX))
    state = StateVector.basis(layout.dim_a, layout.flat_index(1, 0, 2))
    assert answer_distribution(state, layout) == {2 * 2 + 1: pytest.approx(1.0)}


def _assert_same_final_states(alg: QueryAlgorithm, converted: QueryAlgorithm) -> None:
    for x in _boolean_inputs(alg.layout.index_dim):
        original = simulate(alg, x)
        if converted.layout != alg.layout:
            original = embed_state(original, alg.layout)
        assert fidelity(simulate(converted, x), original) >= 1 - 1e-9


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(1, 4), t=st.integers(0, 3))
def test_xor_to_phase_reproduces_final_states(seed, n, t):
    alg = random_algorithm(n, t, convention=OracleConvention.XOR, seed=seed)
    converted = convert_convention(alg, OracleConvention.PHASE)
    assert converted.convention is OracleConvention.PHASE
    assert converted.T == 2 * t
    assert converted.layout == hosted_layout(alg)
    _assert_same_final_states(alg, converted)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(1, 4), t=st.integers(0, 3))
def test_phase_to_xor_keeps_query_count(seed, n, t):
    alg = random_algorithm(n, t, convention=OracleConvention.PHASE, seed=seed)
    converted = convert_convention(alg, OracleConvention.XOR)
    assert converted.T == t
    _assert_same_final_states(alg, converted)


def test_converted_grover_still_solves_search(search4, grover4):
    converted = convert_convention(grover4, OracleConvention.XOR)
    assert worst_case_error(converted, search4) == pytest.approx(0.0, abs=1e-12)
    assert converted.validate() == []


def test_multi_bit_algorithms_do_not_convert_to_phase():
    with pytest.raises(InvalidInputError):
        convert_convention(random_algorithm(2, 1, answer_bits=2), OracleConvention.PHASE)


def test_truth_table_text_round_trip(tmp_path):
    f = TruthTable.from_function(3, lambda w: None if sum(w) == 2 else sum(w) % 2, name="promise")
    path = write_truth_table(f, tmp_path / "promise.tt")
    g = read_truth_table(path)
    assert g == f
    assert not g.is_total and g.is_boolean
    assert g.name == "promise"
    assert format_truth_table(g).splitlines()[0] == "n 3 alphabet 2 range 2"


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("n 2 alphabet 2\n", 1),
        ("# header\nn 2 alphabet 2 range 2\n00 0\n0 1\n", 4),
        ("n 2 alphabet 2 range 2\n00 0\n00 1\n", 3),
        ("n 2 alphabet 2 range 2\n02 0\n", 2),
        ("n 2 alphabet 2 range 2\n01 2\n", 2),
    ],
)
def test_truth_table_errors_carry_line_numbers(text, line):
    with pytest.raises(ConfigError) as err:
        parse_truth_table(text, path="t.tt")
    assert err.value.line == line
    assert str(err.value).startswith(f"t.tt:{line}:")


def test_undefined_input_raises():
    f = search_identification_table(3)
    with pytest.raises(InvalidInputError):
        f(InputAssignment.boolean((1, 1, 0)))
    assert (0, 1, 0) in f and f((0, 1, 0)) == 1


def _random_state(rng: np.random.Generator, dim: int) -> StateVector:
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector(amps / np.linalg.norm(amps))


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(1, 4), work=st.integers(1, 3))
def test_oracles_are_involutions(seed, n, work):
    rng = np.random.default_rng(seed)
    layout = RegisterLayout(index_dim=n, answer_bits=1, work_dim=work)
    x = InputAssignment.boolean(tuple(int(b) for b in rng.integers(0, 2, size=n)))
    state = _random_state(rng, layout.dim_a)
    for oracle in (apply_xor_oracle, apply_phase_oracle):
        once = oracle(state, layout, x)
        assert abs(once.norm() - 1.0) < 1e-12
        assert_allclose(oracle(once, layout, x).amplitudes, state.amplitudes, atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(1, 4), t=st.integers(0, 3))
def test_every_step_preserves_the_norm(seed, n, t):
    rng = np.random.default_rng(seed)
    alg = random_algorithm(n, t, seed=seed)
    for u in alg.unitaries:
        assert abs(np.linalg.norm(u.apply(_random_state(rng, alg.layout.dim_a).amplitudes)) - 1.0) < 1e-12
    x = InputAssignment.boolean(tuple(int(b) for b in rng.integers(0, 2, size=n)))
    trajectory = simulate_trajectory(alg, x)
    for state in trajectory.samples + (trajectory.final,):
        assert abs(state.norm() - 1.0) < 1e-12
