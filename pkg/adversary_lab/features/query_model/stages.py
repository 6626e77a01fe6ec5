"""
Input-independent unitaries ("stages") of a query algorithm.

A stage acts on a block of column vectors of shape (dim, k). Structured stages
avoid materialising dimA x dimA matrices: local operators on adjacent register
factors, basis permutations for classical reversible steps, sequences, and
ancilla embeddings. `matrix()` expands any stage explicitly when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from adversary_lab.features.tensor_core import as_complex_matrix, check_unitary, ensure_dimension
from adversary_lab.platform.errors import InvalidInputError


def _as_block(block: ArrayLike, dim: int) -> tuple[np.ndarray, bool]:
    arr = np.asarray(block, dtype=np.complex128)
    vector = arr.ndim == 1
    if vector:
        arr = arr[:, np.newaxis]
    if arr.shape[0] != dim:
        raise InvalidInputError(f"stage of dimension {dim} applied to block with {arr.shape[0]} rows")
    return arr, vector


class Stage:
    """Base class: subclasses implement `_apply_block` on (dim, k) arrays."""

    dim: int
    name: str = "stage"

    def apply(self, block: ArrayLike) -> NDArray[np.complex128]:
        arr, vector = _as_block(block, self.dim)
        out = self._apply_block(arr)
        return out[:, 0] if vector else out

    def _apply_block(self, block: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def matrix(self) -> NDArray[np.complex128]:
        ensure_dimension(self.dim * self.dim, what=f"explicit matrix of {self.name}")
        return self._apply_block(np.eye(self.dim, dtype=np.complex128))

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return check_unitary(self.matrix(), tol)

    def scaled(self, phase: complex) -> "Stage":
        return ScaledStage(self, complex(phase), name=f"{self.name}*phase")


@dataclass(frozen=True, eq=False)
class DenseStage(Stage):
    """Explicit dim x dim matrix."""

    matrix_: NDArray[np.complex128]
    name: str = "dense"

    def __post_init__(self) -> None:
        mat = as_complex_matrix(self.matrix_)
        if mat.shape[0] != mat.shape[1]:
            raise InvalidInputError(f"dense stage must be square, got {mat.shape}")
        object.__setattr__(self, "matrix_", mat)

    @property
    def dim(self) -> int:  # type: ignore[override]
        return int(self.matrix_.shape[0])

    def _apply_block(self, block: np.ndarray) -> np.ndarray:
        return self.matrix_ @ block

    def matrix(self) -> NDArray[np.complex128]:
        return np.array(self.matrix_)


@dataclass(frozen=True, eq=False)
class LocalStage(Stage):
    """Operator on the adjacent factors dims[axis:axis+span], identity elsewhere."""

    dims: tuple[int, ...]
    axis: int
    span: int
    operator: NDArray[np.complex128]
    name: str = "local"

    def __post_init__(self) -> None:
        op = as_complex_matrix(self.operator)
        if self.span < 1 or self.axis < 0 or self.axis + self.span > len(self.dims):
            raise InvalidInputError(f"factor range [{self.axis}, {self.axis + self.span}) outside {self.dims}")
        local = int(np.prod(self.dims[self.axis : self.axis + self.span]))
        if op.shape != (local, local):
            raise InvalidInputError(f"local operator shape {op.shape} does not match factor size {local}")
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "operator", op)

    @property
    def dim(self) -> int:  # type: ignore[override]
        return int(np.prod(self.dims))

    def _apply_block(self, block: np.ndarray) -> np.ndarray:
        pre = int(np.prod(self.dims[: self.axis]))
        loc = self.operator.shape[0]
        post = int(np.prod(self.dims[self.axis + self.span :]))
        k = block.shape[1]
        r = block.reshape(pre, loc, post, k)
        out = np.einsum("ab,pbqk->paqk", self.operator, r)
        return out.reshape(self.dim, k)

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return check_unitary(self.operator, tol)


@dataclass(frozen=True, eq=False)
class PermutationStage(Stage):
    """Basis permutation |j> -> |perm[j]>."""

    perm: NDArray[np.int64]
    name: str = "permutation"

    def __post_init__(self) -> None:
        perm = np.array(self.perm, dtype=np.int64).reshape(-1)
        perm.setflags(write=False)
        object.__setattr__(self, "perm", perm)

    @property
    def dim(self) -> int:  # type: ignore[override]
        return int(self.perm.shape[0])

    @classmethod
    def identity(cls, dim: int, name: str = "identity") -> "PermutationStage":
        return cls(np.arange(dim), name=name)

    def _apply_block(self, block: np.ndarray) -> np.ndarray:
        out = np.empty_like(block)
        out[self.perm] = block
        return out

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return bool(np.array_equal(np.sort(self.perm), np.arange(self.dim)))


@dataclass(frozen=True, eq=False)
class SequenceStage(Stage):
    """Stages applied left to right (the first element acts first)."""

    stages: tuple[Stage, ...]
    name: str = "sequence"

    def __post_init__(self) -> None:
        stages = tuple(self.stages)
        if not stages:
            raise InvalidInputError("a sequence stage needs at least one stage")
        dims = {s.dim for s in stages}
        if len(dims) != 1:
            raise InvalidInputError(f"sequence mixes stage dimensions {sorted(dims)}")
        object.__setattr__(self, "stages", stages)

    @property
    def dim(self) -> int:  # type: ignore[override]
        return self.stages[0].dim

    def _apply_block(self, block: np.ndarray) -> np.ndarray:
        for stage in self.stages:
            block = stage._apply_block(block)
        return block

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return all(s.is_unitary(tol) for s in self.stages)


@dataclass(frozen=True, eq=False)
class AncillaStage(Stage):
    """
    `inner` acting on every slice of an ancilla factor inserted at `position`.

    With inner factor dims (d0, ..., dm) the host dims are
    (d0, ..., d_{position-1}, ancilla_dim, d_position, ..., dm).
    """

    inner: Stage
    inner_dims: tuple[int, ...]
    position: int
    ancilla_dim: int = 2
    name: str = "ancilla"

    def __post_init__(self) -> None:
        if int(np.prod(self.inner_dims)) != self.inner.dim:
            raise InvalidInputError(f"inner dims {self.inner_dims} do not match inner stage dimension {self.inner.dim}")
        if not 0 <= self.position <= len(self.inner_dims):
            raise InvalidInputError(f"ancilla position {self.position} outside {self.inner_dims}")

    @property
    def dim(self) -> int:  # type: ignore[override]
        return self.inner.dim * self.ancilla_dim

    def _apply_block(self, block: np.ndarray) -> np.ndarray:
        pre = int(np.prod(self.inner_dims[: self.position]))
        post = int(np.prod(self.inner_dims[self.position :]))
        k = block.shape[1]
        r = block.reshape(pre, self.ancilla_dim, post, k).transpose(0, 2, 1, 3)
        out = self.inner._apply_block(r.reshape(pre * post, self.ancilla_dim * k))
        out = out.reshape(pre, post, self.ancilla_dim, k).transpose(0, 2, 1, 3)
        return out.reshape(self.dim, k)

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return self.inner.is_unitary(tol)


@dataclass(frozen=True, eq=False)
class ScaledStage(Stage):
    """`inner` followed by multiplication with a unit scalar (a global phase)."""

    inner: Stage
    phase: complex
    name: str = "scaled"

    @property
    def dim(self) -> int:  # type: ignore[override]
        return self.inner.dim

    def _apply_block(self, block: np.ndarray) -> np.ndarray:
        return self.phase * self.inner._apply_block(block)

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return abs(abs(self.phase) - 1.0) <= tol and self.inner.is_unitary(tol)


def sequence(stages: Sequence[Stage], name: str = "sequence") -> Stage:
    """Collapse trivial sequences."""
    stages = tuple(stages)
    return stages[0] if len(stages) == 1 else SequenceStage(stages, name=name)
