"""
Reporting (facade): experiment configs, the four commands, sweeps and deterministic output.
"""

from __future__ import annotations

from .commands import (
    COMMANDS,
    cmd_bound,
    cmd_bs,
    cmd_simulate,
    cmd_trace,
    family_truth_table,
    run_command,
    run_sweep,
    write_outcome,
)
from .config_loader import build_config, load_config_file, parse_config_text
from .report_contracts import (
    REPORT_SCHEMA,
    CommandKind,
    CommandOutcome,
    ExitCode,
    ExperimentConfig,
    OutputFormat,
)
from .report_writer import render_csv, render_json, to_jsonable, write_atomic

__all__ = [
    "COMMANDS",
    "REPORT_SCHEMA",
    "CommandKind",
    "CommandOutcome",
    "ExitCode",
    "ExperimentConfig",
    "OutputFormat",
    "build_config",
    "cmd_bound",
    "cmd_bs",
    "cmd_simulate",
    "cmd_trace",
    "family_truth_table",
    "load_config_file",
    "parse_config_text",
    "render_csv",
    "render_json",
    "run_command",
    "run_sweep",
    "to_jsonable",
    "write_atomic",
    "write_outcome",
]
