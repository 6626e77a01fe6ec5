"""
Standard truth tables: total Boolean functions and the promise problems of the
relation families. Positions and values are 0-based.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from adversary_lab.features.query_model import TruthTable
from adversary_lab.platform.errors import FamilyConstraintError


def or_table(n: int) -> TruthTable:
    return TruthTable.from_function(n, lambda x: int(any(x)), name=f"OR{n}")


def and_table(n: int) -> TruthTable:
    return TruthTable.from_function(n, lambda x: int(all(x)), name=f"AND{n}")


def parity_table(n: int) -> TruthTable:
    return TruthTable.from_function(n, lambda x: sum(x) % 2, name=f"PARITY{n}")


def majority_table(n: int) -> TruthTable:
    if n % 2 == 0:
        raise FamilyConstraintError(f"majority needs odd n, got {n}")
    return TruthTable.from_function(n, lambda x: int(2 * sum(x) > n), name=f"MAJ{n}")


def constant_table(n: int, value: int = 0, range_size: int = 2) -> TruthTable:
    return TruthTable.from_function(n, lambda _: value, range_size=range_size, name=f"CONST{value}_{n}")


def single_variable_table(n: int = 1, index: int = 0) -> TruthTable:
    return TruthTable.from_function(n, lambda x: x[index], name=f"x{index}")


def block_size(N: int) -> int:  # noqa: N803
    s = math.isqrt(N)
    if s * s != N:
        raise FamilyConstraintError(f"AND-of-ORs needs N to be a perfect square, got {N}")
    return s


def and_of_ors_table(N: int) -> TruthTable:  # noqa: N803
    s = block_size(N)
    return TruthTable.from_function(
        N, lambda x: int(all(any(x[b * s : (b + 1) * s]) for b in range(s))), name=f"ANDOR{N}"
    )


def unit_vector(N: int, i: int) -> tuple[int, ...]:  # noqa: N803
    return tuple(int(j == i) for j in range(N))


def search_identification_table(N: int) -> TruthTable:  # noqa: N803
    """Promise: exactly one x_i = 1; answer i."""
    return TruthTable.from_function(
        N,
        lambda x: x.index(1),
        range_size=N,
        name=f"SEARCH{N}",
        domain=[unit_vector(N, i) for i in range(N)],
    )


def permutation_inversion_table(N: int) -> TruthTable:  # noqa: N803
    """
    Promise: x is a permutation of 0..N-1. With p the position holding 0,
    f(x) = 0 for odd p and 1 for even p (the split of the inversion relation).
    """
    if N < 2 or N % 2:
        raise FamilyConstraintError(f"permutation inversion needs an even N >= 2, got {N}")
    return TruthTable.from_function(
        N,
        lambda x: 1 - x.index(0) % 2,
        alphabet_size=N,
        range_size=2,
        name=f"PERMINV{N}",
        domain=itertools.permutations(range(N)),
        permutation=True,
    )


def counting_weights(n: int, eps: Fraction) -> tuple[int, int, int]:
    """(n/2, (1+eps) n/2, eps n/2), each required to be an integer."""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise FamilyConstraintError(f"counting needs 0 < eps <= 1, got {eps}")
    low, high, gap = Fraction(n, 2), (1 + eps) * n / 2, eps * n / 2
    if any(v.denominator != 1 for v in (low, high, gap)):
        raise FamilyConstraintError(f"n/2, (1+eps)n/2 and eps n/2 must be integers for n={n}, eps={eps}")
    return int(low), int(high), int(gap)


def counting_table(n: int, eps: Fraction) -> TruthTable:
    """Promise: weight n/2 (answer 0) or (1+eps) n/2 (answer 1)."""
    low, high, _ = counting_weights(n, eps)
    return TruthTable.from_function(
        n,
        lambda x: 0 if sum(x) == low else (1 if sum(x) == high else None),
        name=f"COUNT{n}_{eps}",
    )


def random_truth_table(n: int, seed: int, range_size: int = 2) -> TruthTable:
    rng = np.random.default_rng(seed)
    values = rng.integers(0, range_size, size=2**n)
    words = list(itertools.product(range(2), repeat=n))
    lookup = dict(zip(words, (int(v) for v in values)))
    return TruthTable.from_function(n, lookup.__getitem__, range_size=range_size, name=f"RANDOM{n}_{seed}")
