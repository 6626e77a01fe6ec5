from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from adversary_lab.features.algorithms import (
    AlgorithmFamily,
    build_algorithm,
    classical_lookup,
    constant_alg,
    decode_lookup_answer,
    encode_lookup_answer,
    grover_search,
    lookup_answer_bits,
    parse_algorithm_spec,
    random_algorithm,
)
from adversary_lab.features.bound_calculator import (
    permutation_inversion_table,
    random_truth_table,
    search_identification_table,
)
from adversary_lab.features.query_model import OracleConvention, Register, TruthTable, worst_case_error
from adversary_lab.platform.errors import FamilyConstraintError, InvalidInputError


def test_parse_algorithm_spec_reads_aliases_and_defaults():
    spec = parse_algorithm_spec("family=grover, n=8, iterations=2", seed=5)
    assert spec.family is AlgorithmFamily.GROVER_SEARCH
    assert (spec.N, spec.iterations, spec.seed) == (8, 2, 5)

    spec = parse_algorithm_spec("family=random,T=3,convention=phase", N=4, iterations=None)
    assert spec.queries == 3 and spec.N == 4
    assert spec.convention is OracleConvention.PHASE


def test_parse_algorithm_spec_string_overrides_defaults():
    assert parse_algorithm_spec("family=grover,N=16", N=4).N == 16


@pytest.mark.parametrize("text", ["family=grover,N=4,colour=red", "family=teleport,N=4", "family=grover", "N4"])
def test_parse_algorithm_spec_rejects_bad_text(text):
    with pytest.raises(InvalidInputError):
        parse_algorithm_spec(text)


def test_grover_layout_and_params():
    alg = grover_search(16, 3)
    assert alg.T == 3
    assert alg.convention is OracleConvention.PHASE
    assert alg.layout.dim_a == 32
    assert alg.validate() == []
    with pytest.raises(FamilyConstraintError):
        grover_search(1, 1)


def test_grover_success_grows_then_overshoots():
    f = search_identification_table(16)
    errors = [worst_case_error(grover_search(16, t), f) for t in range(6)]
    assert errors[3] < errors[2] < errors[1] < errors[0]
    assert errors[3] == pytest.approx(1 - 0.9613189697265625, abs=1e-9)
    assert errors[5] > errors[3]


def test_lookup_answer_encoding_first_position_most_significant():
    assert lookup_answer_bits(2) == 1
    assert lookup_answer_bits(4) == 2
    assert lookup_answer_bits(5) == 3
    assert encode_lookup_answer((1, 0, 1)) == 5
    assert encode_lookup_answer((3, 0, 1, 2), alphabet_size=4) == 0b11000110
    assert decode_lookup_answer(0b11000110, 4, alphabet_size=4) == (3, 0, 1, 2)


def test_lookup_solves_permutation_inversion_exactly():
    f = permutation_inversion_table(4)
    alg = classical_lookup(4, readout=f, alphabet_size=4)
    assert alg.layout.answer_bits == 2
    assert worst_case_error(alg, f) == pytest.approx(0.0, abs=1e-12)


def test_lookup_rejects_readout_that_does_not_fit():
    with pytest.raises(FamilyConstraintError):
        classical_lookup(3, readout=search_identification_table(4))
    with pytest.raises(FamilyConstraintError):
        classical_lookup(4, readout=permutation_inversion_table(4), alphabet_size=2)


def test_constant_alg_has_no_queries():
    alg = constant_alg(4, 3, answer_bits=2)
    assert alg.T == 0
    assert alg.layout.output_slots == (Register.INDEX,)
    with pytest.raises(FamilyConstraintError):
        constant_alg(4, 4)


def test_random_algorithm_is_reproducible_per_seed():
    a = random_algorithm(3, 2, seed=11)
    b = random_algorithm(3, 2, seed=11)
    c = random_algorithm(3, 2, seed=12)
    assert_allclose(a.unitaries[1].matrix(), b.unitaries[1].matrix())
    assert not np.allclose(a.unitaries[1].matrix(), c.unitaries[1].matrix())
    assert a.validate() == []


def test_random_phase_algorithm_needs_one_answer_bit():
    with pytest.raises(FamilyConstraintError):
        random_algorithm(2, 1, convention=OracleConvention.PHASE, answer_bits=2)


def test_build_algorithm_converts_when_convention_differs():
    spec = parse_algorithm_spec("family=grover,N=4,iterations=1,convention=xor")
    alg = build_algorithm(spec)
    assert alg.convention is OracleConvention.XOR
    assert alg.T == 1
    assert worst_case_error(alg, search_identification_table(4)) == pytest.approx(0.0, abs=1e-12)

    lookup = build_algorithm(parse_algorithm_spec("family=lookup,N=4,convention=phase"),
                             readout=search_identification_table(4))
    assert lookup.convention is OracleConvention.PHASE
    assert lookup.T == 8


def test_build_algorithm_lookup_widens_alphabet_for_readout():
    f = permutation_inversion_table(4)
    alg = build_algorithm(parse_algorithm_spec("family=lookup,N=4"), readout=f)
    assert alg.layout.answer_bits == 2
    assert worst_case_error(alg, f) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("N", [4, 8, 16])
@pytest.mark.parametrize("t", range(5))
def test_grover_success_matches_closed_form(N, t):  # noqa: N803
    expected = math.sin((2 * t + 1) * math.asin(1 / math.sqrt(N))) ** 2
    error = worst_case_error(grover_search(N, t), search_identification_table(N))
    assert 1 - error == pytest.approx(expected, abs=1e-9)


def test_lookup_is_exact_on_every_total_function_of_three_bits():
    words = list(itertools.product((0, 1), repeat=3))
    for values in itertools.product((0, 1), repeat=len(words)):
        f = TruthTable(n=3, alphabet_size=2, range_size=2, table=dict(zip(words, values)))
        assert worst_case_error(classical_lookup(3, readout=f), f) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("seed", range(12))
def test_lookup_is_exact_on_random_four_bit_functions(seed):
    f = random_truth_table(4, seed)
    assert worst_case_error(classical_lookup(4, readout=f), f) == pytest.approx(0.0, abs=1e-12)
