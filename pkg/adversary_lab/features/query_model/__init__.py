"""
Query model (facade): register layouts, oracles, algorithms, simulation and truth tables.
"""

from __future__ import annotations

from .convention_conversion import convert_convention, embed_state, hosted_layout
from .oracles import apply_oracle_block, apply_oracle_columns, apply_phase_oracle, apply_xor_oracle
from .query_algorithm import QueryAlgorithm
from .query_contracts import SYMBOLS, InputAssignment, OracleConvention, Register, RegisterLayout
from .simulation import (
    ColumnRun,
    Trajectory,
    answer_distribution,
    run_columns,
    simulate,
    simulate_trajectory,
    success_probabilities,
    worst_case_error,
)
from .stages import (
    AncillaStage,
    DenseStage,
    LocalStage,
    PermutationStage,
    ScaledStage,
    SequenceStage,
    Stage,
    sequence,
)
from .truth_tables import (
    TruthTable,
    format_truth_table,
    parse_truth_table,
    read_truth_table,
    write_truth_table,
)

__all__ = [
    "SYMBOLS",
    "AncillaStage",
    "ColumnRun",
    "DenseStage",
    "InputAssignment",
    "LocalStage",
    "OracleConvention",
    "PermutationStage",
    "QueryAlgorithm",
    "Register",
    "RegisterLayout",
    "ScaledStage",
    "SequenceStage",
    "Stage",
    "Trajectory",
    "TruthTable",
    "answer_distribution",
    "apply_oracle_block",
    "apply_oracle_columns",
    "apply_phase_oracle",
    "apply_xor_oracle",
    "convert_convention",
    "embed_state",
    "format_truth_table",
    "hosted_layout",
    "parse_truth_table",
    "read_truth_table",
    "run_columns",
    "sequence",
    "simulate",
    "simulate_trajectory",
    "success_probabilities",
    "worst_case_error",
    "write_truth_table",
]
