"""
Reporting Contracts

Business capability: one experiment = one command with its parameters; one
outcome = a JSON-able report, an exit code and optional CSV rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from adversary_lab.features.query_model import OracleConvention

REPORT_SCHEMA = 1


class CommandKind(str, Enum):
    SIMULATE = "simulate"
    TRACE = "trace"
    BOUND = "bound"
    BS = "bs"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class ExitCode(int, Enum):
    OK = 0
    VIOLATION = 1
    USAGE = 2


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    command: CommandKind
    algorithm: Optional[str] = Field(default=None, description='e.g. "family=grover,N=4,iterations=1"')
    family: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1)
    eps: Optional[str] = Field(default=None, description="exact rational, e.g. 1/2 or 0.5")
    iterations: Optional[int] = Field(default=None, ge=0)
    convention: Optional[OracleConvention] = None
    relation_file: Optional[Path] = None
    truth_table: Optional[Path] = None
    tol: Optional[float] = Field(default=None, ge=0)
    bound: Optional[float] = Field(default=None, gt=0, description="override of the per-query bound")
    seed: int = 0
    out: Optional[Path] = None
    format: OutputFormat = OutputFormat.JSON

    @field_validator("eps")
    @classmethod
    def _exact_eps(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return None
        try:
            return str(Fraction(str(v).strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"eps must be a rational number, got {v!r}") from None

    @field_validator("family")
    @classmethod
    def _lower_family(cls, v: Optional[str]) -> Optional[str]:
        return v.strip().lower() if v else None

    @property
    def eps_value(self) -> Optional[Fraction]:
        return Fraction(self.eps) if self.eps is not None else None

    def describe(self) -> dict[str, Any]:
        """Parameters echoed into reports (output location excluded)."""
        return self.model_dump(mode="json", exclude={"out", "format"}, exclude_none=True)


@dataclass
class CommandOutcome:
    report: dict[str, Any]
    exit_code: ExitCode = ExitCode.OK
    csv_columns: tuple[str, ...] = ()
    csv_rows: list[dict[str, Any]] = field(default_factory=list)
    summary: list[tuple[str, str]] = field(default_factory=list)
