"""
Tensor Core Contracts

Business capability: immutable dense complex values shared by every simulation stage.

ComplexMatrix is a plain 2-D complex128 ndarray (read-only once validated);
StateVector and BipartiteState wrap their amplitudes with the invariants the
simulation relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from adversary_lab.platform.env import get_max_dimension, get_norm_tol
from adversary_lab.platform.errors import DimensionLimitError, InvalidInputError

ComplexMatrix = NDArray[np.complex128]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def ensure_dimension(amplitudes: int, *, what: str = "instance") -> None:
    """Raise DimensionLimitError when an instance exceeds ADVLAB_MAX_DIMENSION amplitudes."""
    limit = get_max_dimension()
    if amplitudes > limit:
        raise DimensionLimitError(f"{what} needs {amplitudes} amplitudes; limit is {limit}")


def as_complex_matrix(data: ArrayLike) -> ComplexMatrix:
    """Validate and freeze a 2-D finite complex matrix."""
    arr = np.array(data, dtype=np.complex128)
    if arr.ndim != 2:
        raise InvalidInputError(f"expected a 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("matrix has non-finite entries")
    return _frozen(arr)


@dataclass(frozen=True)
class StateVector:
    """Pure state of the algorithm register (length dimA)."""

    amplitudes: NDArray[np.complex128]
    normalized: bool = True

    def __post_init__(self) -> None:
        arr = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError("state has non-finite amplitudes")
        if self.normalized:
            norm = float(np.linalg.norm(arr))
            if abs(norm - 1.0) > get_norm_tol():
                raise InvalidInputError(f"state marked normalized has norm {norm:.12g}")
        object.__setattr__(self, "amplitudes", _frozen(arr))

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    @classmethod
    def basis(cls, dim: int, index: int = 0) -> "StateVector":
        amps = np.zeros(dim, dtype=np.complex128)
        amps[index] = 1.0
        return cls(amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "StateVector") -> complex:
        """<self|other>"""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class BipartiteState:
    """
    Joint state sum_x alpha_x |psi_x> (x) |x>, stored one column per input label.

    `columns[:, j]` holds alpha_{x_j} |psi_{x_j}>; every transformation of the
    bipartite run is block diagonal across inputs, so the column layout keeps the
    partial trace a Gram matrix.
    """

    columns: NDArray[np.complex128]
    inputs: tuple[Hashable, ...] = field(default=())

    def __post_init__(self) -> None:
        cols = np.array(self.columns, dtype=np.complex128)
        if cols.ndim != 2:
            raise InvalidInputError(f"bipartite columns must be 2-D, got shape {cols.shape}")
        inputs = tuple(self.inputs) if self.inputs else tuple(range(cols.shape[1]))
        if len(inputs) != cols.shape[1]:
            raise InvalidInputError(f"{len(inputs)} labels for {cols.shape[1]} columns")
        if len(set(inputs)) != len(inputs):
            raise InvalidInputError("input labels must be distinct")
        ensure_dimension(cols.size, what="bipartite state")
        total = float(np.sum(np.abs(cols) ** 2))
        if abs(total - 1.0) > get_norm_tol():
            raise InvalidInputError(f"bipartite state has squared norm {total:.12g}")
        object.__setattr__(self, "columns", _frozen(cols))
        object.__setattr__(self, "inputs", inputs)

    @property
    def dim_a(self) -> int:
        return int(self.columns.shape[0])

    def column(self, label: Hashable) -> NDArray[np.complex128]:
        return self.columns[:, self.inputs.index(label)]

    @classmethod
    def product(cls, psi: StateVector, alphas: Sequence[complex], inputs: Sequence[Hashable] = ()) -> "BipartiteState":
        """|psi> (x) sum_x alpha_x |x>"""
        cols = np.outer(psi.amplitudes, np.asarray(alphas, dtype=np.complex128))
        return cls(cols, tuple(inputs))
