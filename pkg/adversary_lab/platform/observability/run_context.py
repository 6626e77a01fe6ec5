from __future__ import annotations

import contextvars
import hashlib
import json
import time
import uuid
from typing import Any, Mapping, Sequence

import numpy as np

_run_id_var: contextvars.ContextVar[str | None] = contextvars.ContextVar("run_id", default=None)


def new_run_id(prefix: str = "run") -> str:
    """Create a short, human-friendly run id for log correlation."""
    return f"{prefix}_{uuid.uuid4().hex[:12]}"


def set_run_id(run_id: str | None) -> None:
    _run_id_var.set(run_id)


def get_run_id() -> str | None:
    return _run_id_var.get()


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8", errors="replace")).hexdigest()


def _is_sequence(value: Any) -> bool:
    return isinstance(value, Sequence) and not isinstance(value, (str, bytes, bytearray))


def summarize_for_log(
    value: Any,
    *,
    max_depth: int = 5,
    max_str: int = 800,
    max_list: int = 40,
    max_dict_items: int = 100,
) -> Any:
    """
    Summarize potentially-large payloads for logging:
    - arrays: shape, dtype and a norm instead of the entries
    - long strings: len, sha256, preview
    - large lists/dicts: truncated with counts
    """
    if max_depth <= 0:
        return {"__truncated__": True, "__type__": type(value).__name__}

    if value is None or isinstance(value, (bool, int)):
        return value

    if isinstance(value, (float, np.floating)):
        return float(value)

    if isinstance(value, np.integer):
        return int(value)

    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}

    if isinstance(value, np.ndarray):
        return {
            "__type__": "ndarray",
            "shape": list(value.shape),
            "dtype": str(value.dtype),
            "fro_norm": float(np.linalg.norm(value)) if value.size else 0.0,
        }

    if isinstance(value, str):
        if len(value) <= max_str:
            return value
        return {
            "__type__": "str",
            "__len__": len(value),
            "__sha256__": sha256_text(value),
            "__preview__": value[: max_str // 2],
        }

    kwargs = dict(max_depth=max_depth - 1, max_str=max_str, max_list=max_list, max_dict_items=max_dict_items)

    if isinstance(value, Mapping):
        items = list(value.items())
        out: dict[str, Any] = {str(k): summarize_for_log(v, **kwargs) for k, v in items[:max_dict_items]}
        if len(items) > max_dict_items:
            out["__truncated_items__"] = len(items) - max_dict_items
        return out

    if _is_sequence(value) or isinstance(value, (set, frozenset)):
        seq = list(value)
        out_list = [summarize_for_log(x, **kwargs) for x in seq[:max_list]]
        if len(seq) > max_list:
            out_list.append({"__truncated_items__": len(seq) - max_list})
        return out_list

    try:
        json.dumps(value)
        return value
    except Exception:
        return {"__type__": type(value).__name__, "__repr__": repr(value)[:max_str]}


class RunTimer:
    """Small helper for measuring durations of commands and engine runs."""

    def __init__(self) -> None:
        self._t0 = time.perf_counter()

    def ms(self) -> int:
        return int((time.perf_counter() - self._t0) * 1000)
