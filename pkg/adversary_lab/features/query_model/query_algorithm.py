"""
Query algorithm: U_0 -> O -> U_1 -> O -> ... -> O -> U_T over a register layout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from adversary_lab.platform.errors import InvalidInputError

from .query_contracts import OracleConvention, RegisterLayout
from .stages import Stage


@dataclass(frozen=True)
class QueryAlgorithm:
    layout: RegisterLayout
    convention: OracleConvention
    unitaries: tuple[Stage, ...]
    name: str = "algorithm"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        unitaries = tuple(self.unitaries)
        if not unitaries:
            raise InvalidInputError("an algorithm needs at least U_0")
        for k, u in enumerate(unitaries):
            if u.dim != self.layout.dim_a:
                raise InvalidInputError(f"U_{k} has dimension {u.dim}, layout needs {self.layout.dim_a}")
        if self.convention is OracleConvention.PHASE and self.layout.answer_bits != 1:
            raise InvalidInputError("phase-convention algorithms use a single answer bit")
        object.__setattr__(self, "unitaries", unitaries)

    @property
    def T(self) -> int:  # noqa: N802 - query count keeps its customary name
        return len(self.unitaries) - 1

    def validate(self, tol: float = 1e-10) -> list[int]:
        """Indices k whose U_k fails the unitarity check (empty when valid)."""
        return [k for k, u in enumerate(self.unitaries) if not u.is_unitary(tol)]

    def with_unitaries(self, unitaries: Sequence[Stage], **changes) -> "QueryAlgorithm":
        return QueryAlgorithm(
            layout=changes.get("layout", self.layout),
            convention=changes.get("convention", self.convention),
            unitaries=tuple(unitaries),
            name=changes.get("name", self.name),
            params=changes.get("params", dict(self.params)),
        )

    def describe(self) -> dict:
        return {
            "name": self.name,
            "convention": self.convention.value,
            "T": self.T,
            "layout": self.layout.model_dump(mode="json"),
            "params": dict(self.params),
        }
