"""
Query Model Contracts

Business capability: describe the algorithm register |i, a, z> and the inputs
an oracle answers for.

Basis ordering is (index, answer, work) with index the slow factor:
flat = (i * 2**answer_bits + a) * work_dim + z.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


class OracleConvention(str, Enum):
    """XOR: |i,a,z> -> |i, a xor x_i, z>.  PHASE: |i,b,z> -> (-1)^(b x_i) |i,b,z>."""

    XOR = "xor"
    PHASE = "phase"


class Register(str, Enum):
    INDEX = "index"
    ANSWER = "answer"
    WORK = "work"


class RegisterLayout(BaseModel):
    """Register dimensions plus the registers read out as the answer."""

    model_config = ConfigDict(frozen=True)

    index_dim: int = Field(..., ge=1, description="N, one level per input position")
    answer_bits: int = Field(default=1, ge=1, description="oracle answer register width in bits")
    work_dim: int = Field(default=1, ge=1)
    output_slots: tuple[Register, ...] = (Register.INDEX,)

    @model_validator(mode="after")
    def _check_slots(self) -> "RegisterLayout":
        if not self.output_slots:
            raise ValueError("output_slots must name at least one register")
        if len(set(self.output_slots)) != len(self.output_slots):
            raise ValueError("output_slots must be distinct")
        return self

    @property
    def answer_dim(self) -> int:
        return 2**self.answer_bits

    @property
    def dim_a(self) -> int:
        return self.index_dim * self.answer_dim * self.work_dim

    @property
    def factor_dims(self) -> tuple[int, int, int]:
        return (self.index_dim, self.answer_dim, self.work_dim)

    def register_dim(self, register: Register) -> int:
        return {
            Register.INDEX: self.index_dim,
            Register.ANSWER: self.answer_dim,
            Register.WORK: self.work_dim,
        }[register]

    def flat_index(self, i: int, a: int = 0, z: int = 0) -> int:
        return (i * self.answer_dim + a) * self.work_dim + z

    @property
    def output_capacity(self) -> int:
        cap = 1
        for reg in self.output_slots:
            cap *= self.register_dim(reg)
        return cap


class InputAssignment(BaseModel):
    """An oracle input x = (x_1..x_n) over {0..alphabet_size-1}."""

    model_config = ConfigDict(frozen=True)

    values: tuple[int, ...]
    alphabet_size: int = Field(default=2, ge=2, le=len(SYMBOLS))
    permutation: bool = False

    @model_validator(mode="after")
    def _check_values(self) -> "InputAssignment":
        if not self.values:
            raise ValueError("an input needs at least one position")
        bad = [v for v in self.values if not 0 <= v < self.alphabet_size]
        if bad:
            raise ValueError(f"values {bad} outside alphabet of size {self.alphabet_size}")
        if self.permutation and sorted(self.values) != list(range(len(self.values))):
            raise ValueError(f"{self.values} is not a permutation of 0..{len(self.values) - 1}")
        return self

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def label(self) -> str:
        return "".join(SYMBOLS[v] for v in self.values)

    @classmethod
    def boolean(cls, bits: Iterable[int]) -> "InputAssignment":
        return cls(values=tuple(int(b) for b in bits), alphabet_size=2)

    @classmethod
    def from_label(cls, label: str, alphabet_size: int = 2, *, permutation: bool = False) -> "InputAssignment":
        try:
            values = tuple(SYMBOLS.index(ch) for ch in label.strip().lower())
        except ValueError as exc:
            raise ValueError(f"invalid symbol in input {label!r}") from exc
        return cls(values=values, alphabet_size=alphabet_size, permutation=permutation)

    def __str__(self) -> str:
        return self.label
