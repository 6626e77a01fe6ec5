"""Shared fixtures: quiet logging and small reference instances."""

from __future__ import annotations

import pytest

from adversary_lab.features.algorithms import classical_lookup, grover_search
from adversary_lab.features.bound_calculator import search_identification_table


@pytest.fixture(autouse=True)
def _quiet_logs(monkeypatch):
    monkeypatch.setenv("ADVLAB_LOG_LEVEL", "WARNING")


@pytest.fixture
def search4():
    return search_identification_table(4)


@pytest.fixture
def grover4():
    return grover_search(4, 1)


@pytest.fixture
def lookup_search4(search4):
    return classical_lookup(4, readout=search4)
