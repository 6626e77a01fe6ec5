"""
Relations of the standard problem families, with their closed-form degrees.

| family    | X                                   | Y                                          | R                    |
|-----------|-------------------------------------|--------------------------------------------|----------------------|
| search    | {0^N}                               | {e_i}                                      | X x Y                |
| andofors  | one 1 in every block                | one all-zero block, one 1 in the others    | Hamming distance 1   |
| counting  | weight n/2                          | weight (1+eps) n/2                         | y covers x           |
| perminv   | 0 at an odd position                | 0 at an even position                      | swap across parities |
| parity    | even weight                         | odd weight                                 | Hamming distance 1   |
| majority  | weight (n-1)/2                      | weight (n+1)/2                             | Hamming distance 1   |

Every relation carries the family's promise truth table restricted to X and Y.
"""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

from adversary_lab.features.query_model import TruthTable
from adversary_lab.features.tensor_core import ensure_dimension
from adversary_lab.platform.errors import FamilyConstraintError

from .boolean_functions import block_size, counting_weights, unit_vector
from .bound_contracts import AdversaryRelation, Word


class RelationFamily(str, Enum):
    SEARCH = "search"
    AND_OF_ORS = "andofors"
    COUNTING = "counting"
    PERMUTATION_INVERSION = "perminv"
    PARITY = "parity"
    MAJORITY = "majority"


def _promise(name: str, n: int, xs, ys, fx: int, fy: int, alphabet: int = 2, permutation: bool = False) -> TruthTable:
    table = {x: fx for x in xs}
    table.update({y: fy for y in ys})
    return TruthTable(n, alphabet, 2, table, name=name, permutation=permutation)


def _relation(
    name: str,
    xs: list[Word],
    ys: list[Word],
    partners,
    *,
    alphabet: int = 2,
    fx: int = 0,
    fy: int = 1,
    permutation: bool = False,
) -> AdversaryRelation:
    """`partners(x)` yields the y's related to x."""
    y_pos = {y: j for j, y in enumerate(ys)}
    pairs = [(a, y_pos[y]) for a, x in enumerate(xs) for y in partners(x)]
    n = len(xs[0])
    return AdversaryRelation(
        xs=tuple(xs),
        ys=tuple(ys),
        pairs=tuple(pairs),
        alphabet_size=alphabet,
        truth_table=_promise(name, n, xs, ys, fx, fy, alphabet, permutation),
        name=name,
        permutation=permutation,
    )


def _weight_words(n: int, weight: int) -> list[Word]:
    words = []
    for ones in itertools.combinations(range(n), weight):
        w = [0] * n
        for i in ones:
            w[i] = 1
        words.append(tuple(w))
    return words


def _flip(word: Word, *positions: int) -> Word:
    w = list(word)
    for i in positions:
        w[i] ^= 1
    return tuple(w)


def search_relation(N: int) -> AdversaryRelation:  # noqa: N803
    if N < 1:
        raise FamilyConstraintError("search needs N >= 1")
    zero = (0,) * N
    ys = [unit_vector(N, i) for i in range(N)]
    return _relation(f"search(N={N})", [zero], ys, lambda _: ys)


def and_of_ors_relation(N: int) -> AdversaryRelation:  # noqa: N803
    s = block_size(N)
    xs = []
    for choice in itertools.product(range(s), repeat=s):
        xs.append(tuple(int(j == choice[b]) for b in range(s) for j in range(s)))
    ys = []
    for empty in range(s):
        for choice in itertools.product(range(s), repeat=s - 1):
            it = iter(choice)
            picks = [None if b == empty else next(it) for b in range(s)]
            ys.append(tuple(int(picks[b] is not None and j == picks[b]) for b in range(s) for j in range(s)))
    y_set = set(ys)

    def partners(x: Word):
        return [_flip(x, i) for i in range(N) if _flip(x, i) in y_set]

    # f = AND of ORs: 1 on X, 0 on Y
    return _relation(f"andofors(N={N})", xs, ys, partners, fx=1, fy=0)


def counting_relation(n: int, eps: Fraction) -> AdversaryRelation:
    low, high, gap = counting_weights(n, eps)
    ensure_dimension(comb(n, low) * comb(n - low, gap), what=f"counting relation n={n}")
    xs = _weight_words(n, low)
    ys = _weight_words(n, high)

    def partners(x: Word):
        zeros = [i for i, v in enumerate(x) if v == 0]
        return [_flip(x, *extra) for extra in itertools.combinations(zeros, gap)]

    return _relation(f"counting(n={n},eps={Fraction(eps)})", xs, ys, partners)


def permutation_inversion_relation(N: int) -> AdversaryRelation:  # noqa: N803
    """0 plays the role of the sought value; f = 0 on X (odd position), 1 on Y (even position)."""
    if N < 2 or N % 2:
        raise FamilyConstraintError(f"permutation inversion needs an even N >= 2, got {N}")
    perms = list(itertools.permutations(range(N)))
    ensure_dimension(len(perms), what=f"permutation inversion N={N}")
    xs = [p for p in perms if p.index(0) % 2 == 1]
    ys = [p for p in perms if p.index(0) % 2 == 0]

    def partners(x: Word):
        p = x.index(0)
        out = []
        for q in range(0, N, 2):
            w = list(x)
            w[p], w[q] = w[q], w[p]
            out.append(tuple(w))
        return out

    return _relation(f"perminv(N={N})", xs, ys, partners, alphabet=N, permutation=True)


def parity_relation(n: int) -> AdversaryRelation:
    words = list(itertools.product(range(2), repeat=n))
    xs = [w for w in words if sum(w) % 2 == 0]
    ys = [w for w in words if sum(w) % 2 == 1]
    return _relation(f"parity(n={n})", xs, ys, lambda x: [_flip(x, i) for i in range(n)])


def majority_relation(n: int) -> AdversaryRelation:
    if n % 2 == 0:
        raise FamilyConstraintError(f"majority needs odd n, got {n}")
    low = (n - 1) // 2
    xs = _weight_words(n, low)
    ys = _weight_words(n, low + 1)
    return _relation(
        f"majority(n={n})", xs, ys, lambda x: [_flip(x, i) for i in range(n) if x[i] == 0]
    )


def family_relation(
    family: RelationFamily | str,
    *,
    n: Optional[int] = None,
    eps: Optional[Fraction] = None,
) -> AdversaryRelation:
    """`n` is the input length (N for search, AND-of-ORs and permutation inversion)."""
    family = RelationFamily(family)
    if n is None:
        raise FamilyConstraintError(f"{family.value} needs an input size")
    if family is RelationFamily.SEARCH:
        return search_relation(n)
    if family is RelationFamily.AND_OF_ORS:
        return and_of_ors_relation(n)
    if family is RelationFamily.COUNTING:
        if eps is None:
            raise FamilyConstraintError("counting needs eps")
        return counting_relation(n, Fraction(eps))
    if family is RelationFamily.PERMUTATION_INVERSION:
        return permutation_inversion_relation(n)
    if family is RelationFamily.PARITY:
        return parity_relation(n)
    return majority_relation(n)


def closed_form_parameters(
    family: RelationFamily | str,
    *,
    n: int,
    eps: Optional[Fraction] = None,
) -> dict[str, int]:
    family = RelationFamily(family)
    if family is RelationFamily.SEARCH:
        return {"m": n, "m_prime": 1, "l": 1, "l_prime": 1, "l_max": 1}
    if family is RelationFamily.AND_OF_ORS:
        s = block_size(n)
        return {"m": s, "m_prime": s, "l": 1, "l_prime": 1, "l_max": 1}
    if family is RelationFamily.COUNTING:
        if eps is None:
            raise FamilyConstraintError("counting needs eps")
        low, high, gap = counting_weights(n, Fraction(eps))
        l, l_prime = comb(n - low - 1, gap - 1), comb(high - 1, gap - 1)
        return {"m": comb(n - low, gap), "m_prime": comb(high, gap), "l": l, "l_prime": l_prime, "l_max": l * l_prime}
    if family is RelationFamily.PERMUTATION_INVERSION:
        half = n // 2
        return {"m": half, "m_prime": half, "l": half, "l_prime": half, "l_max": half}
    if family is RelationFamily.PARITY:
        return {"m": n, "m_prime": n, "l": 1, "l_prime": 1, "l_max": 1}
    half = (n + 1) // 2
    return {"m": half, "m_prime": half, "l": 1, "l_prime": 1, "l_max": 1}
