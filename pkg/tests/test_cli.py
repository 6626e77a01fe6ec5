from __future__ import annotations

import json
import math

import pytest
from typer.testing import CliRunner

from adversary_lab.cli import app
from adversary_lab.features.bound_calculator import or_table
from adversary_lab.features.query_model import write_truth_table

runner = CliRunner()


def _report(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_bound_writes_report(tmp_path):
    out = tmp_path / "perminv.json"
    result = runner.invoke(app, ["bound", "--family", "perminv", "--n", "4", "--out", str(out)])
    assert result.exit_code == 0, result.output
    report = _report(out)
    assert report["command"] == "bound"
    assert report["report"]["theorem3_value"] == pytest.approx(math.sqrt(2))


def test_trace_exit_code_reflects_violations(tmp_path):
    ok = runner.invoke(app, ["trace", "--family", "search", "--n", "8", "--algorithm", "family=grover,iterations=2",
                             "--out", str(tmp_path / "ok.json")])
    assert ok.exit_code == 0, ok.output
    bad = runner.invoke(app, ["trace", "--family", "search", "--n", "8", "--algorithm", "family=grover,iterations=2",
                              "--bound", "0.1", "--out", str(tmp_path / "bad.json")])
    assert bad.exit_code == 1
    assert _report(tmp_path / "bad.json")["violating_steps"] == [1, 2]


def test_trace_csv_format(tmp_path):
    out = tmp_path / "trace.csv"
    result = runner.invoke(app, ["trace", "--family", "search", "--n", "4", "--format", "csv", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert out.read_text(encoding="utf-8").splitlines()[0] == "k,S_k,delta,bound,pass"
    assert (tmp_path / "trace.json").exists()


def test_bs_from_truth_table(tmp_path):
    tt = write_truth_table(or_table(3), tmp_path / "or3.tt")
    out = tmp_path / "bs.json"
    result = runner.invoke(app, ["bs", "--truth-table", str(tt), "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert _report(out)["block_sensitivity"]["bs"] == 3


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "counting.cfg"
    cfg.write_text("family = counting\nn = 8\neps = 1/3\n", encoding="utf-8")
    out = tmp_path / "counting.json"
    result = runner.invoke(app, ["bound", "--config", str(cfg), "--eps", "1/2", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert _report(out)["config"]["eps"] == "1/2"


def test_usage_errors_exit_with_two(tmp_path):
    assert runner.invoke(app, ["bs", "--truth-table", str(tmp_path / "missing.tt")]).exit_code == 2
    assert runner.invoke(app, ["bound", "--family", "sorting", "--n", "4"]).exit_code == 2
    assert runner.invoke(app, ["bound", "--family", "andofors", "--n", "5"]).exit_code == 2
    assert runner.invoke(app, ["bound", "--family", "counting", "--n", "8", "--eps", "x"]).exit_code == 2


def test_sweep_reports_the_worst_exit_code(tmp_path):
    (tmp_path / "a.cfg").write_text("command = bound\nfamily = search\nn = 9\n", encoding="utf-8")
    (tmp_path / "b.cfg").write_text("command = trace\nfamily = search\nn = 8\nalgorithm = family=grover,iterations=1\n"
                                    "bound = 0.1\n", encoding="utf-8")
    result = runner.invoke(app, ["sweep", str(tmp_path / "a.cfg"), str(tmp_path / "b.cfg"), "--workers", "2"])
    assert result.exit_code == 1
    assert _report(tmp_path / "a.json")["report"]["theorem2_value"] == 3.0
    assert _report(tmp_path / "b.json")["passed"] is False


def test_bound_and_bs_accept_the_shared_flags(tmp_path):
    tt = write_truth_table(or_table(2), tmp_path / "or2.tt")
    bound = runner.invoke(app, ["bound", "--truth-table", str(tt), "--seed", "3", "--tol", "1e-8",
                                "--format", "json", "--out", str(tmp_path / "bound.json")])
    assert bound.exit_code == 0, bound.output
    assert _report(tmp_path / "bound.json")["config"]["seed"] == 3
    bs = runner.invoke(app, ["bs", "--truth-table", str(tt), "--tol", "1e-8", "--format", "json",
                             "--out", str(tmp_path / "bs.json")])
    assert bs.exit_code == 0, bs.output
    assert _report(tmp_path / "bs.json")["config"]["tol"] == 1e-8
    assert runner.invoke(app, ["bs", "--truth-table", str(tt), "--format", "csv",
                               "--out", str(tmp_path / "bs.csv")]).exit_code == 2


def test_repeated_runs_write_identical_bytes(tmp_path):
    args = ["trace", "--family", "andofors", "--n", "4"]
    assert runner.invoke(app, args + ["--out", str(tmp_path / "one.json")]).exit_code == 0
    assert runner.invoke(app, args + ["--out", str(tmp_path / "two.json")]).exit_code == 0
    assert (tmp_path / "one.json").read_bytes() == (tmp_path / "two.json").read_bytes()
