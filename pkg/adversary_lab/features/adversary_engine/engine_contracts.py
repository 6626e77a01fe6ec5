"""
Adversary Engine Contracts

Business capability: describe the input superposition an algorithm runs
against and the traces / verdicts extracted from such runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Hashable, Optional, Protocol, Sequence

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from adversary_lab.features.query_model import InputAssignment
from adversary_lab.platform.errors import DegenerateRelationError, InvalidInputError


@dataclass(frozen=True)
class SuperpositionSpec:
    """
    Input superposition sum_x alpha_x |x> over an ordered input set S.

    `sides` marks each input as X (0) or Y (1) for two-sided relation runs.
    """

    inputs: tuple[InputAssignment, ...]
    amplitudes: NDArray[np.complex128]
    sides: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        inputs = tuple(self.inputs)
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if not inputs:
            raise InvalidInputError("a superposition needs at least one input")
        if amps.shape[0] != len(inputs):
            raise InvalidInputError(f"{amps.shape[0]} amplitudes for {len(inputs)} inputs")
        labels = [x.label for x in inputs]
        if len(set(labels)) != len(labels):
            raise InvalidInputError("superposition inputs must be distinct")
        if len({(x.n, x.alphabet_size) for x in inputs}) != 1:
            raise InvalidInputError("superposition inputs mix lengths or alphabets")
        total = float(np.sum(np.abs(amps) ** 2))
        if abs(total - 1.0) > 1e-12:
            raise InvalidInputError(f"squared amplitudes sum to {total:.15g}, expected 1")
        if self.sides is not None:
            sides = tuple(int(s) for s in self.sides)
            if len(sides) != len(inputs) or set(sides) - {0, 1}:
                raise InvalidInputError("sides must mark every input with 0 (X) or 1 (Y)")
            object.__setattr__(self, "sides", sides)
        amps.setflags(write=False)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def uniform(cls, inputs: Sequence[InputAssignment]) -> "SuperpositionSpec":
        inputs = tuple(inputs)
        return cls(inputs, np.full(len(inputs), 1.0 / np.sqrt(len(inputs)), dtype=np.complex128))

    @classmethod
    def two_sided(cls, xs: Sequence[InputAssignment], ys: Sequence[InputAssignment]) -> "SuperpositionSpec":
        """1/sqrt(2|X|) on X and 1/sqrt(2|Y|) on Y."""
        xs, ys = tuple(xs), tuple(ys)
        if not xs or not ys:
            raise DegenerateRelationError("two-sided superposition needs non-empty X and Y")
        amps = [1.0 / np.sqrt(2 * len(xs))] * len(xs) + [1.0 / np.sqrt(2 * len(ys))] * len(ys)
        return cls(xs + ys, np.asarray(amps, dtype=np.complex128), sides=(0,) * len(xs) + (1,) * len(ys))

    @property
    def size(self) -> int:
        return len(self.inputs)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(x.label for x in self.inputs)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidInputError(f"input {label} is not in the superposition") from None

    def side_sizes(self) -> tuple[int, int]:
        if self.sides is None:
            raise InvalidInputError("superposition is not two-sided")
        return self.sides.count(0), self.sides.count(1)


@dataclass(frozen=True)
class PairSet:
    """(row, column) index pairs into a superposition, plus what they describe."""

    pairs: tuple[tuple[int, int], ...]
    descriptor: str

    def __len__(self) -> int:
        return len(self.pairs)

    def labelled(self, sup: SuperpositionSpec) -> list[tuple[Hashable, Hashable]]:
        return [(sup.inputs[a].label, sup.inputs[b].label) for a, b in self.pairs]


class RelationDegrees(Protocol):
    """Degree parameters of an adversary relation (m, m', l, l', l_max)."""

    m: int
    m_prime: int
    l: int  # noqa: E741
    l_prime: int
    l_max: int


class ProgressTrace(BaseModel):
    """S_0..S_T over a pair set, with per-query decreases."""

    model_config = ConfigDict(frozen=True)

    series: list[float]
    deltas: list[float]
    epsilon_measured: Optional[float] = None
    bound_per_step: Optional[float] = None
    pair_set_descriptor: str = "full off-diagonal"

    @model_validator(mode="after")
    def _check_lengths(self) -> "ProgressTrace":
        if not self.series:
            raise ValueError("a progress trace has at least S_0")
        if len(self.deltas) != len(self.series) - 1:
            raise ValueError("deltas must have one entry per query")
        if any(s < 0 for s in self.series):
            raise ValueError("off-diagonal sums are non-negative")
        return self

    @property
    def T(self) -> int:  # noqa: N802
        return len(self.deltas)

    @property
    def max_delta(self) -> float:
        return max(self.deltas, default=0.0)


class DistancePairing(str, Enum):
    REFERENCE = "reference"  # every input against one distinguished input
    RELATION = "relation"  # pairs (x, y) in R


class DistanceTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    series: list[float]
    reference: DistancePairing
    reference_label: Optional[str] = None
    pair_count: int = Field(default=0, ge=0)


class TheoremCheck(BaseModel):
    """One inequality (or identity) of a proof chain, checked on a finite instance."""

    model_config = ConfigDict(frozen=True)

    label: str
    relation: str  # "<=", ">=", "=="
    measured: float
    bound: float
    slack: float
    passed: bool
    detail: str = ""

    @classmethod
    def at_most(cls, label: str, measured: float, bound: float, slack: float, detail: str = "") -> "TheoremCheck":
        return cls(label=label, relation="<=", measured=measured, bound=bound, slack=slack,
                   passed=measured <= bound + slack, detail=detail)

    @classmethod
    def at_least(cls, label: str, measured: float, bound: float, slack: float, detail: str = "") -> "TheoremCheck":
        return cls(label=label, relation=">=", measured=measured, bound=bound, slack=slack,
                   passed=measured >= bound - slack, detail=detail)

    @classmethod
    def equals(cls, label: str, measured: float, bound: float, slack: float, detail: str = "") -> "TheoremCheck":
        return cls(label=label, relation="==", measured=measured, bound=bound, slack=slack,
                   passed=abs(measured - bound) <= slack, detail=detail)

    @classmethod
    def exact(cls, label: str, measured: Fraction, bound: Fraction, detail: str = "") -> "TheoremCheck":
        """Rational identity, compared without rounding."""
        return cls(label=label, relation="==", measured=float(measured), bound=float(bound), slack=0.0,
                   passed=measured == bound, detail=detail or f"{measured} vs {bound}")

    @property
    def margin(self) -> float:
        """Distance to the bound on the passing side (negative when violated)."""
        if self.relation == "<=":
            return self.bound - self.measured
        if self.relation == ">=":
            return self.measured - self.bound
        return -abs(self.measured - self.bound)


class PairViolation(BaseModel):
    x: str
    y: str
    magnitude: float
    bound: float


class Lemma1Report(BaseModel):
    """Cross-class overlap check |rho_xy| <= c(eps) |alpha_x| |alpha_y| at the end of a run."""

    epsilon: float
    factor: float
    checked_pairs: int
    max_ratio: Optional[float] = None
    violations: list[PairViolation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class GramIdentityReport(BaseModel):
    """rho_xy against alpha_x^* alpha_y <psi_x|psi_y> over every step of a run."""

    max_deviation: float
    steps: int
    measured_constant: Optional[float] = None
    stated_constant: Optional[float] = None
