from __future__ import annotations

import re

import numpy as np
import pytest

from adversary_lab.platform.env import (
    get_check_slack,
    get_log_level,
    get_max_dimension,
    get_sweep_workers,
)
from adversary_lab.platform.errors import AdversaryLabError, ConfigError, DimensionLimitError
from adversary_lab.platform.observability.run_context import (
    RunTimer,
    get_run_id,
    new_run_id,
    set_run_id,
    summarize_for_log,
)
from adversary_lab.platform.observability.smart_logger import SmartLogger


def test_env_getters_read_overrides_and_fall_back(monkeypatch):
    monkeypatch.setenv("ADVLAB_MAX_DIMENSION", "4096")
    monkeypatch.setenv("ADVLAB_CHECK_SLACK", "not-a-number")
    monkeypatch.setenv("ADVLAB_SWEEP_WORKERS", "0")
    assert get_max_dimension() == 4096
    assert get_check_slack() == 1e-9
    assert get_sweep_workers() == 1
    monkeypatch.delenv("ADVLAB_MAX_DIMENSION")
    assert get_max_dimension() == 2**20


def test_log_level_prefers_workbench_variable(monkeypatch):
    monkeypatch.delenv("ADVLAB_LOG_LEVEL", raising=False)
    monkeypatch.setenv("SMART_LOGGER_MIN_LEVEL", "debug")
    assert get_log_level() == "DEBUG"
    monkeypatch.setenv("ADVLAB_LOG_LEVEL", "error")
    assert get_log_level() == "ERROR"


def test_config_error_locations():
    assert str(ConfigError("bad", path="a.cfg", line=3)) == "a.cfg:3: bad"
    assert str(ConfigError("bad", path="a.cfg")) == "a.cfg: bad"
    assert str(ConfigError("bad", line=7)) == "line 7: bad"
    assert str(ConfigError("bad")) == "bad"
    assert issubclass(DimensionLimitError, AdversaryLabError)
    assert issubclass(AdversaryLabError, ValueError)


def test_run_ids_are_prefixed_and_context_local():
    run_id = new_run_id("trace")
    assert re.fullmatch(r"trace_[0-9a-f]{12}", run_id)
    set_run_id(run_id)
    assert get_run_id() == run_id
    set_run_id(None)
    assert get_run_id() is None


def test_summarize_for_log_shrinks_large_payloads():
    summary = summarize_for_log({"rho": np.eye(3), "label": "x" * 2000, "steps": list(range(100))})
    assert summary["rho"] == {"__type__": "ndarray", "shape": [3, 3], "dtype": "float64",
                              "fro_norm": pytest.approx(np.sqrt(3))}
    assert summary["label"]["__len__"] == 2000
    assert summary["steps"][-1] == {"__truncated_items__": 60}
    assert summarize_for_log(1 + 2j) == {"re": 1.0, "im": 2.0}


def test_smart_logger_writes_to_stderr_and_respects_level(monkeypatch, capsys):
    monkeypatch.setenv("ADVLAB_LOG_LEVEL", "INFO")
    set_run_id("test_000000000000")
    SmartLogger.log("INFO", "hello", category="adversary_lab.tests", params={"n": 4})
    SmartLogger.log("DEBUG", "hidden", category="adversary_lab.tests")
    set_run_id(None)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "hello" in captured.err and "test_000000000000" in captured.err
    assert "hidden" not in captured.err


def test_run_timer_is_monotonic():
    timer = RunTimer()
    assert timer.ms() >= 0
