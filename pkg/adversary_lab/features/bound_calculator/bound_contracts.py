"""
Bound Calculator Contracts

Business capability: adversary relations (X, Y, R), their combinatorial
parameters and the lower bounds derived from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from adversary_lab.features.query_model import SYMBOLS, InputAssignment, TruthTable
from adversary_lab.platform.errors import DegenerateRelationError, InvalidInputError

Word = tuple[int, ...]


def word_label(word: Word) -> str:
    return "".join(SYMBOLS[v] for v in word)


@dataclass(frozen=True)
class AdversaryRelation:
    """
    Input sets X, Y and pairs R, stored as (index into xs, index into ys).
    """

    xs: tuple[Word, ...]
    ys: tuple[Word, ...]
    pairs: tuple[tuple[int, int], ...]
    alphabet_size: int = 2
    truth_table: Optional[TruthTable] = field(default=None, compare=False)
    name: str = field(default="relation", compare=False)
    permutation: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        xs = tuple(tuple(int(v) for v in x) for x in self.xs)
        ys = tuple(tuple(int(v) for v in y) for y in self.ys)
        pairs = tuple(sorted({(int(a), int(b)) for a, b in self.pairs}))
        words = xs + ys
        if not xs or not ys:
            raise DegenerateRelationError(f"{self.name}: X and Y must be non-empty")
        if len({len(w) for w in words}) != 1:
            raise InvalidInputError(f"{self.name}: inputs have different lengths")
        if any(not 0 <= v < self.alphabet_size for w in words for v in w):
            raise InvalidInputError(f"{self.name}: input symbol outside alphabet {self.alphabet_size}")
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise InvalidInputError(f"{self.name}: repeated input within X or Y")
        overlap = set(xs) & set(ys)
        if overlap:
            raise DegenerateRelationError(f"{self.name}: X and Y share {word_label(min(overlap))}")
        if any(not (0 <= a < len(xs) and 0 <= b < len(ys)) for a, b in pairs):
            raise InvalidInputError(f"{self.name}: pair index outside X or Y")
        if self.truth_table is not None:
            f = self.truth_table
            fx = {f(x) for x in xs}
            fy = {f(y) for y in ys}
            if fx & fy:
                raise DegenerateRelationError(f"{self.name}: f takes value {min(fx & fy)} on both X and Y")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "pairs", pairs)

    @property
    def n(self) -> int:
        return len(self.xs[0])

    def x_inputs(self) -> list[InputAssignment]:
        return [InputAssignment(values=x, alphabet_size=self.alphabet_size, permutation=self.permutation) for x in self.xs]

    def y_inputs(self) -> list[InputAssignment]:
        return [InputAssignment(values=y, alphabet_size=self.alphabet_size, permutation=self.permutation) for y in self.ys]

    def labelled_pairs(self) -> list[tuple[str, str]]:
        return [(word_label(self.xs[a]), word_label(self.ys[b])) for a, b in self.pairs]

    def describe(self) -> dict:
        return {"name": self.name, "n": self.n, "X": len(self.xs), "Y": len(self.ys), "R": len(self.pairs)}


class RelationParameters(BaseModel):
    """Exact degrees of a relation; l_x / l_y map an input label to its per-position flip counts."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1)
    m_prime: int = Field(..., ge=1)
    l: int = Field(..., ge=1)  # noqa: E741
    l_prime: int = Field(..., ge=1)
    l_max: int = Field(..., ge=1)
    x_size: int
    y_size: int
    relation_size: int
    l_x: dict[str, list[int]] = Field(default_factory=dict)
    l_y: dict[str, list[int]] = Field(default_factory=dict)

    @property
    def theorem2_ratio(self) -> Fraction:
        """m m' / (l l')"""
        return Fraction(self.m * self.m_prime, self.l * self.l_prime)

    @property
    def theorem3_ratio(self) -> Fraction:
        """m m' / l_max"""
        return Fraction(self.m * self.m_prime, self.l_max)

    def degrees(self) -> dict[str, int]:
        return {"m": self.m, "m_prime": self.m_prime, "l": self.l, "l_prime": self.l_prime, "l_max": self.l_max}


class EnumerationCheck(BaseModel):
    """Closed-form degrees against the enumerated ones."""

    closed_form: dict[str, int]
    enumerated: dict[str, int]
    matches: bool


class BoundReport(BaseModel):
    theorem2_value: float
    theorem3_value: float
    theorem2_ratio: str
    theorem3_ratio: str
    parameters: RelationParameters
    family: str
    relation: dict = Field(default_factory=dict)
    enumeration_check: Optional[EnumerationCheck] = None
    decision_tree_depth: Optional[int] = None


class BlockSensitivityResult(BaseModel):
    bs: int = Field(..., ge=0)
    witness: str  # label of the input x attaining bs
    blocks: list[list[int]] = Field(default_factory=list)  # 0-based positions
