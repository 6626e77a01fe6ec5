"""
Block sensitivity by exhaustive search.

bs_x(f) is the largest number of pairwise disjoint blocks S with
f(x^S) != f(x); bs(f) = max_x bs_x(f). Only minimal sensitive blocks need to be
packed, since shrinking a block keeps the packing disjoint.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from adversary_lab.features.query_model import TruthTable
from adversary_lab.platform.errors import DegenerateRelationError, InvalidInputError

from .bound_contracts import AdversaryRelation, BlockSensitivityResult, Word, word_label

MAX_EXHAUSTIVE_N = 5


def _mask_positions(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if mask >> i & 1]


def _flip_mask(x: Word, mask: int) -> Word:
    return tuple(v ^ (mask >> i & 1) for i, v in enumerate(x))


def _minimal_sensitive_blocks(f: TruthTable, x: Word) -> list[int]:
    n = f.n
    fx = f(x)
    sensitive = {m for m in range(1, 2**n) if f(_flip_mask(x, m)) != fx}
    minimal = []
    for m in sorted(sensitive):
        sub = (m - 1) & m
        has_smaller = False
        while sub:
            if sub in sensitive:
                has_smaller = True
                break
            sub = (sub - 1) & m
        if not has_smaller:
            minimal.append(m)
    return minimal


def _max_packing(blocks: list[int], universe: int) -> tuple[int, ...]:
    """Largest set of pairwise disjoint blocks (as masks), by memoised branching."""

    @lru_cache(maxsize=None)
    def best(available: int) -> tuple[int, ...]:
        if not available:
            return ()
        low = available & -available
        # either no chosen block covers the lowest free position ...
        result = best(available & ~low)
        # ... or one block containing it does
        for b in blocks:
            if b & low and b & available == b:
                candidate = (b,) + best(available & ~b)
                if len(candidate) > len(result):
                    result = candidate
        return result

    return best(universe)


def block_sensitivity(f: TruthTable) -> BlockSensitivityResult:
    if not f.is_total or f.alphabet_size != 2:
        raise InvalidInputError(f"block sensitivity needs a total Boolean function; {f.name} is not")
    if f.n > MAX_EXHAUSTIVE_N:
        raise InvalidInputError(f"exhaustive block sensitivity is limited to n <= {MAX_EXHAUSTIVE_N}, got {f.n}")
    universe = 2**f.n - 1
    best_x: Word = (0,) * f.n
    best_blocks: tuple[int, ...] = ()
    for x in itertools.product(range(2), repeat=f.n):
        packing = _max_packing(_minimal_sensitive_blocks(f, x), universe)
        if len(packing) > len(best_blocks):
            best_x, best_blocks = x, packing
    blocks = sorted(_mask_positions(b, f.n) for b in best_blocks)
    return BlockSensitivityResult(bs=len(blocks), witness=word_label(best_x), blocks=blocks)


def bs_relation(f: TruthTable, witness: BlockSensitivityResult) -> AdversaryRelation:
    """X = {x}, Y = {x^(S_1), ..., x^(S_t)}, R = X x Y."""
    if not witness.blocks:
        raise DegenerateRelationError(f"{f.name} has no sensitive block at {witness.witness}")
    x = tuple(int(ch) for ch in witness.witness)
    if len(x) != f.n:
        raise InvalidInputError(f"witness {witness.witness} does not have length {f.n}")
    seen: set[int] = set()
    ys = []
    for block in witness.blocks:
        if seen & set(block) or any(not 0 <= i < f.n for i in block) or not block:
            raise InvalidInputError(f"block {block} is empty, out of range or overlaps another block")
        seen |= set(block)
        y = tuple(v ^ int(i in block) for i, v in enumerate(x))
        if f(y) == f(x):
            raise InvalidInputError(f"block {block} is not sensitive for {f.name} at {witness.witness}")
        ys.append(y)
    return AdversaryRelation(
        xs=(x,),
        ys=tuple(ys),
        pairs=tuple((0, j) for j in range(len(ys))),
        truth_table=f,
        name=f"bs({f.name})",
    )
