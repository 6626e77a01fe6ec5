"""
Flat experiment config files and their merge with command-line flags.

    # comment
    algorithm = family=grover,N=16,iterations=3
    family = search
    n = 16

Keys are flag names with dashes or underscores. Flags override file values.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Mapping, Optional

from pydantic import ValidationError

from adversary_lab.platform.errors import ConfigError

from .report_contracts import CommandKind, ExperimentConfig

KNOWN_KEYS = frozenset(ExperimentConfig.model_fields)


def _normalise_key(key: str) -> str:
    return key.strip().lower().replace("-", "_")


def parse_config_text(text: str, *, path: Path | str | None = None) -> tuple[dict[str, str], dict[str, int]]:
    """(values, line number of every key)"""
    values: dict[str, str] = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"expected 'key = value', got {line!r}", path=path, line=lineno)
        key = _normalise_key(key)
        if key not in KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}", path=path, line=lineno)
        if key in values:
            raise ConfigError(f"key {key!r} set twice (first on line {lines[key]})", path=path, line=lineno)
        values[key] = value.strip()
        lines[key] = lineno
    return values, lines


def load_config_file(path: Path | str) -> tuple[dict[str, str], dict[str, int]]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}", path=p) from exc
    return parse_config_text(text, path=p)


def build_config(
    command: Optional[CommandKind],
    flags: Mapping[str, Any],
    config_path: Optional[Path | str] = None,
) -> ExperimentConfig:
    """File values first, then every flag that was given; `command` wins over the file's."""
    file_values: dict[str, str] = {}
    file_lines: dict[str, int] = {}
    if config_path is not None:
        file_values, file_lines = load_config_file(config_path)
    given = {_normalise_key(k): v for k, v in flags.items() if v is not None}
    merged: dict[str, Any] = dict(file_values)
    if config_path is not None:
        # relative paths in a config file are relative to that file
        base = Path(config_path).parent
        for key in ("relation_file", "truth_table", "out"):
            if key in file_values:
                merged[key] = str(base / file_values[key])
    merged.update(given)
    if command is not None:
        merged["command"] = command
    if "command" not in merged:
        raise ConfigError("no command given", path=config_path)
    try:
        return ExperimentConfig.model_validate(merged)
    except ValidationError as exc:
        first = exc.errors()[0]
        key = str(first["loc"][0]) if first["loc"] else "config"
        from_file = key in file_lines and key not in given
        raise ConfigError(
            f"{key}: {first['msg']}",
            path=config_path if from_file else None,
            line=file_lines.get(key) if from_file else None,
        ) from None
