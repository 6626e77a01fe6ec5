"""
Shared environment variable helpers and workbench-wide settings.

Goal: centralize env parsing rules (truthy handling, stripping, fallbacks) so
feature modules can import consistent behavior instead of duplicating logic.
"""

from __future__ import annotations

import os
from typing import Iterable


def env_str(key: str, default: str | None = None, *, strip: bool = True) -> str | None:
    """Read an environment variable as string with optional stripping."""
    val = os.getenv(key)
    if val is None:
        return default
    if strip:
        val = val.strip()
    return val if val != "" else default


def env_first(keys: Iterable[str], default: str | None = None, *, strip: bool = True) -> str | None:
    """Return the first non-empty environment variable value from keys."""
    for key in keys:
        val = env_str(key, None, strip=strip)
        if val is not None:
            return val
    return default


def env_int(key: str, default: int) -> int:
    try:
        return int(env_str(key) or default)
    except ValueError:
        return default


def env_float(key: str, default: float) -> float:
    try:
        return float(env_str(key) or default)
    except ValueError:
        return default


# =============================================================================
# Numerical limits and tolerances
# =============================================================================

def get_max_dimension(default: int = 2**20) -> int:
    """Hard cap on stored amplitudes (dimA * |S|) and on expanded matrix sides squared."""
    return env_int("ADVLAB_MAX_DIMENSION", default)


def get_norm_tol(default: float = 1e-10) -> float:
    return env_float("ADVLAB_NORM_TOL", default)


def get_psd_tol(default: float = 1e-9) -> float:
    return env_float("ADVLAB_PSD_TOL", default)


def get_check_slack(default: float = 1e-9) -> float:
    """Additive slack applied to every inequality verdict."""
    return env_float("ADVLAB_CHECK_SLACK", default)


# =============================================================================
# Relation search and sweeps
# =============================================================================

def get_search_max_pairs(default: int = 16) -> int:
    """Largest candidate-pair set searched exhaustively (2**pairs subsets)."""
    return env_int("ADVLAB_SEARCH_MAX_PAIRS", default)


def get_search_max_hamming(default: int = 2) -> int:
    return env_int("ADVLAB_SEARCH_MAX_HAMMING", default)


def get_sweep_workers(default: int = 4) -> int:
    return max(1, env_int("ADVLAB_SWEEP_WORKERS", default))


def get_log_level(default: str = "INFO") -> str:
    return (env_first(["ADVLAB_LOG_LEVEL", "SMART_LOGGER_MIN_LEVEL"], default) or default).upper()
