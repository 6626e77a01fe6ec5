from __future__ import annotations

import importlib
import importlib.util
import json
import traceback
from pathlib import Path
from typing import Protocol

from rich.console import Console

from adversary_lab.platform.env import env_str, get_log_level

from .run_context import get_run_id, summarize_for_log

_LEVELS = {"DEBUG": 10, "INFO": 20, "WARNING": 30, "ERROR": 40, "CRITICAL": 50}
_STYLES = {"DEBUG": "dim", "INFO": "cyan", "WARNING": "yellow", "ERROR": "bold red", "CRITICAL": "bold red"}


class _SmartLoggerLike(Protocol):
    @classmethod
    def log(
        cls,
        level: str,
        message: str,
        category: str | None = None,
        params: dict | None = None,
        max_inline_chars: int = 100,
    ) -> None: ...


def _load_smart_logger_from_file(py_file: Path) -> type[_SmartLoggerLike]:
    spec = importlib.util.spec_from_file_location("private_smart_logger", str(py_file))
    if spec is None or spec.loader is None:
        raise ImportError(f"Failed to create import spec from file: {py_file}")
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)  # type: ignore[call-arg]
    return _smart_logger_class(module, str(py_file))


def _smart_logger_class(module: object, origin: str) -> type[_SmartLoggerLike]:
    cls = getattr(module, "SmartLogger", None)
    if cls is None:
        raise ImportError(f"`SmartLogger` not found in {origin}")
    if not callable(getattr(cls, "log", None)):
        raise TypeError(f"`SmartLogger.log` missing or not callable in {origin}")
    return cls


class _ConsoleLogger:
    """Default sink: one line per record on stderr, filtered by ADVLAB_LOG_LEVEL."""

    _console = Console(stderr=True, highlight=False, soft_wrap=True)

    @classmethod
    def log(
        cls,
        level: str,
        message: str,
        category: str | None = None,
        params: dict | None = None,
        max_inline_chars: int = 100,
    ) -> None:
        level = level.upper()
        if _LEVELS.get(level, 20) < _LEVELS.get(get_log_level(), 20):
            return
        cat = f"[{category}] " if category else ""
        line = f"[{_STYLES.get(level, 'white')}]{level}[/] {cat}{message}"
        payload = dict(params or {})
        run_id = get_run_id()
        if run_id:
            payload.setdefault("run_id", run_id)
        if payload:
            text = json.dumps(summarize_for_log(payload), default=str, sort_keys=True)
            if len(text) > max_inline_chars:
                line += f"\n    {text}"
            else:
                line += f" {text}"
        cls._console.print(line, markup=True)


def _resolve_impl() -> tuple[type[_SmartLoggerLike], str]:
    """
    Returns (SmartLoggerClass, source_description)
    """
    private = env_str("ADVLAB_LOGGER_PATH") or ""
    if private:
        p = Path(private)
        if p.exists() and p.is_file():
            return _load_smart_logger_from_file(p), f"ADVLAB_LOGGER_PATH(file)={p}"
        module = importlib.import_module(private)
        return _smart_logger_class(module, private), f"ADVLAB_LOGGER_PATH(module)={private}"
    return _ConsoleLogger, "rich(stderr)"


_IMPL, _IMPL_SOURCE = _resolve_impl()


class SmartLogger:
    """
    Project-wide logger entry point.

    Always import and use this class:
        from adversary_lab.platform.observability.smart_logger import SmartLogger
        SmartLogger.log("INFO", "message", category="...", params={...})
    """

    impl_source: str = _IMPL_SOURCE

    @classmethod
    def log(
        cls,
        level: str,
        message: str,
        category: str | None = None,
        params: dict | None = None,
        max_inline_chars: int = 100,
    ) -> None:
        try:
            _IMPL.log(level, message, category=category, params=params, max_inline_chars=max_inline_chars)
        except Exception:
            # Keep the run going and still emit something.
            err = traceback.format_exc()
            cat = f"[{category}] " if category else ""
            print(f"{level}: {cat}{message}")
            print(f"LOGGER_ERROR: {err}")
