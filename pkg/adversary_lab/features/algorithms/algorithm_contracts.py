"""
Algorithm Contracts

Business capability: name reference algorithms by family + parameters, the
way experiment configs and the CLI refer to them.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from adversary_lab.features.query_model import OracleConvention
from adversary_lab.platform.errors import InvalidInputError


class AlgorithmFamily(str, Enum):
    GROVER_SEARCH = "grover"
    CLASSICAL_LOOKUP = "lookup"
    CONSTANT = "constant"
    RANDOM = "random"


class AlgorithmFamilySpec(BaseModel):
    """Parameters of one reference algorithm (unused fields are ignored by the family)."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    family: AlgorithmFamily
    N: int = Field(..., ge=1)
    iterations: int = Field(default=1, ge=0, description="Grover iterations")
    constant_value: int = Field(default=0, ge=0, alias="value")
    queries: int = Field(default=1, ge=0, alias="T", description="random algorithms only")
    answer_bits: int = Field(default=1, ge=1)
    work_dim: int = Field(default=1, ge=1)
    alphabet_size: int = Field(default=2, ge=2, alias="alphabet")
    convention: Optional[OracleConvention] = None
    seed: int = 0


_KEY_ALIASES = {
    "n": "N",
    "family": "family",
    "iterations": "iterations",
    "t": "T",
    "queries": "T",
    "value": "value",
    "constant_value": "value",
    "answer_bits": "answer_bits",
    "work_dim": "work_dim",
    "alphabet": "alphabet",
    "alphabet_size": "alphabet",
    "convention": "convention",
    "seed": "seed",
}


def parse_algorithm_spec(text: str, **defaults: object) -> AlgorithmFamilySpec:
    """
    Parse "family=grover,N=4,iterations=1".

    `defaults` fill keys the string does not set (flags such as --iterations).
    """
    values: dict[str, object] = {k: v for k, v in defaults.items() if v is not None}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = part.partition("=")
        canonical = _KEY_ALIASES.get(key.strip().lower().replace("-", "_"))
        if not sep or canonical is None:
            raise InvalidInputError(f"bad algorithm parameter {part!r} in {text!r}")
        values[canonical] = value.strip()
    try:
        return AlgorithmFamilySpec.model_validate(values)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "algorithm"
        raise InvalidInputError(f"{where}: {first['msg']} (in {text!r})") from None
