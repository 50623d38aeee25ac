"""
Max-Extreme Points
Singleton structure of (0,1)-matrices, the extreme-point test for max-doubly
stochastic matrices, the Column/Row/Hook block forms, enumeration of all
extreme points and the constructive P1 ⊗ E ⊗ P2 decomposition
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from algebra_config import AlgebraConfig
from errors import CapacityError, ClassificationError, MaxAlgebraError, ValidationError
from logger_config import setup_logger
from semiring import (
    DEFAULT_TOLERANCE,
    MaxMatrix,
    Permutation,
    Tolerance,
    direct_sum,
    max_convex_combination,
    permute,
    require_square,
)
from stochastic import classify

logger = setup_logger()


class EntryClass(Enum):
    ROW_SINGLETON = "row-singleton"
    COLUMN_SINGLETON = "column-singleton"
    BOTH_SINGLETON = "both-singleton"
    NON_SINGLETON = "non-singleton"


# --- blocks -----------------------------------------------------------------

@dataclass(frozen=True)
class Column:
    """The m x 1 all-ones block"""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValidationError(f"Column block needs m >= 1, got {self.m}")

    @property
    def shape(self):
        return (self.m, 1)

    def matrix(self) -> MaxMatrix:
        return MaxMatrix(np.ones((self.m, 1)))

    def as_dict(self):
        return {"kind": "column", "m": self.m}


@dataclass(frozen=True)
class Row:
    """The 1 x n all-ones block"""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"Row block needs n >= 1, got {self.n}")

    @property
    def shape(self):
        return (1, self.n)

    def matrix(self) -> MaxMatrix:
        return MaxMatrix(np.ones((1, self.n)))

    def as_dict(self):
        return {"kind": "row", "n": self.n}


@dataclass(frozen=True)
class Hook:
    """The q x r block with an all-ones first row and first column, zeros elsewhere"""

    q: int
    r: int

    def __post_init__(self):
        # a hook with a single row or column is a Row or Column block
        if self.q < 2 or self.r < 2:
            raise ValidationError(f"Hook block needs q, r > 1, got {self.q}x{self.r}")

    @property
    def shape(self):
        return (self.q, self.r)

    def matrix(self) -> MaxMatrix:
        data = np.zeros((self.q, self.r))
        data[0, :] = 1.0
        data[:, 0] = 1.0
        return MaxMatrix(data)

    def as_dict(self):
        return {"kind": "hook", "q": self.q, "r": self.r}


def _check_blocks(blocks):
    if not blocks:
        raise ValidationError("a block list must not be empty")
    hooks = [i for i, b in enumerate(blocks) if isinstance(b, Hook)]
    if len(hooks) > 1:
        raise ValidationError("a block list may contain at most one Hook")
    if hooks and hooks[0] != 0:
        raise ValidationError("the Hook block must come first")
    for b in blocks:
        if not isinstance(b, (Column, Row, Hook)):
            raise ValidationError(f"unknown block {b!r}")


def realize(blocks) -> MaxMatrix:
    """Direct sum of the realized blocks, in order"""
    blocks = list(blocks)
    _check_blocks(blocks)
    result = MaxMatrix.empty()
    for block in blocks:
        result = direct_sum(result, block.matrix())
    return result


def _canonical_order(blocks):
    hooks = [b for b in blocks if isinstance(b, Hook)]
    columns = sorted((b for b in blocks if isinstance(b, Column)), key=lambda b: -b.m)
    rows = sorted((b for b in blocks if isinstance(b, Row)), key=lambda b: -b.n)
    return hooks + columns + rows


@dataclass(frozen=True)
class ExtremeDecomposition:
    p_left: Permutation
    blocks: tuple
    p_right: Permutation

    def reconstruct(self) -> MaxMatrix:
        return permute(realize(self.blocks), self.p_left, self.p_right)

    def as_dict(self):
        return {
            "p_left": self.p_left.one_based(),
            "blocks": [b.as_dict() for b in self.blocks],
            "p_right": self.p_right.one_based(),
        }


# --- singleton structure ----------------------------------------------------

def zero_one_pattern(E: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Boolean pattern of the 1-entries; raises on any entry not within tolerance of 0 or 1"""
    for (i, j), value in np.ndenumerate(E.data):
        if not (tol.is_zero(value) or tol.is_one(value)):
            raise ClassificationError(i, j, float(value))
    return E.data > 0.5


def _profile(pattern: np.ndarray):
    row_counts = pattern.sum(axis=1)
    col_counts = pattern.sum(axis=0)
    profile = {}
    for i, j in zip(*np.nonzero(pattern)):
        alone_in_row = row_counts[i] == 1
        alone_in_col = col_counts[j] == 1
        if alone_in_row and alone_in_col:
            kind = EntryClass.BOTH_SINGLETON
        elif alone_in_row:
            kind = EntryClass.ROW_SINGLETON
        elif alone_in_col:
            kind = EntryClass.COLUMN_SINGLETON
        else:
            kind = EntryClass.NON_SINGLETON
        profile[(int(i), int(j))] = kind
    return profile


def singleton_profile(E: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> dict:
    """Classify every 1-entry of a (0,1)-matrix; keys are 0-based (row, col) positions"""
    return _profile(zero_one_pattern(E, tol))


def _non_singletons(profile):
    return sorted(pos for pos, kind in profile.items() if kind is EntryClass.NON_SINGLETON)


def lowerable_entries(E: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> list:
    """1-entries that can be lowered below 1 while E stays max-doubly stochastic.

    Lowering to 0 is the hardest case; any r in [0, 1) then works too.
    """
    pattern = zero_one_pattern(E, tol)
    return [
        (int(i), int(j))
        for i, j in zip(*np.nonzero(pattern))
        if classify(E.with_entry(i, j, 0.0), tol).doubly
    ]


def is_max_extreme(E: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """An MDS (0,1)-matrix with at most one non-singleton 1-entry"""
    require_square(E)
    if not classify(E, tol).doubly:
        return False
    try:
        profile = singleton_profile(E, tol)
    except ClassificationError:
        return False
    return len(_non_singletons(profile)) <= 1


# --- enumeration ------------------------------------------------------------

def _partitions(total, parts, minimum):
    """Non-increasing tuples of `parts` integers >= minimum summing to total"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    def rec(remaining, count, cap):
        if count == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(cap, remaining - minimum * (count - 1)), minimum - 1, -1):
            for rest in rec(remaining - first, count - 1, first):
                yield (first,) + rest
    yield from rec(total, parts, total)


def _type_one_lists(rows, cols):
    """Column/Row block lists covering a rows x cols area (Row(1) is spelled Column(1))"""
    if rows == 0 and cols == 0:
        yield ()
        return
    for column_rows in range(rows + 1):
        for k in range(0, column_rows + 1):
            for column_sizes in _partitions(column_rows, k, 1):
                t = rows - column_rows
                row_cols = cols - k
                if row_cols < 0:
                    continue
                for row_sizes in _partitions(row_cols, t, 2):
                    yield tuple(Column(m) for m in column_sizes) + tuple(Row(s) for s in row_sizes)


def block_lists(n: int):
    """Every canonical block list whose realization is n x n"""
    lists = list(_type_one_lists(n, n))
    for q in range(2, n + 1):
        for r in range(2, n + 1):
            for rest in _type_one_lists(n - q, n - r):
                lists.append((Hook(q, r),) + rest)
    return [tuple(_canonical_order(blocks)) for blocks in lists if blocks]


def enumerate_extreme(n: int, bound: Optional[int] = None) -> tuple:
    """All max-extreme points of MDS_n, sorted, as P1 ⊗ E ⊗ P2 over every block list"""
    if n < 1:
        raise ValidationError(f"dimension must be positive, got {n}")
    if bound is None:
        bound = AlgebraConfig().extreme_bound
    if n > bound:
        raise CapacityError(f"enumeration of extreme points is limited to n <= {bound}, got {n}")

    logger.info(f"🔍 Enumerating max-extreme points for n={n}")
    perms = np.array(list(itertools.permutations(range(n))))
    seen = set()
    for blocks in block_lists(n):
        base = realize(blocks).data
        row_variants = {base[p].tobytes(): base[p] for p in perms}
        for variant in row_variants.values():
            stacked = np.transpose(variant[:, perms], (1, 0, 2))
            for candidate in stacked:
                seen.add(candidate.astype(np.uint8).tobytes())

    matrices = sorted(
        MaxMatrix(np.frombuffer(raw, dtype=np.uint8).reshape(n, n).astype(float))
        for raw in seen
    )
    logger.info(f"✅ Found {len(matrices)} max-extreme points for n={n}")
    return tuple(matrices)


# --- decomposition ----------------------------------------------------------

def decompose_extreme(E: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> ExtremeDecomposition:
    """Peel E into blocks: the hook around the non-singleton entry first, then the
    lowest-index remaining 1-entry with its whole column (row singletons), its
    whole row (column singletons), or alone."""
    if not is_max_extreme(E, tol):
        raise ValidationError("matrix is not a max-extreme point of MDS_n")

    pattern = zero_one_pattern(E, tol)
    n = E.rows
    free_rows = set(range(n))
    free_cols = set(range(n))
    pieces = []

    def take(block, rows, cols):
        pieces.append((block, rows, cols))
        free_rows.difference_update(rows)
        free_cols.difference_update(cols)

    non_singletons = _non_singletons(_profile(pattern))
    if non_singletons:
        i, j = non_singletons[0]
        rows = [i] + [k for k in range(n) if k != i and pattern[k, j]]
        cols = [j] + [k for k in range(n) if k != j and pattern[i, k]]
        take(Hook(len(rows), len(cols)), rows, cols)

    while free_rows:
        i = min(free_rows)
        j = min(k for k in free_cols if pattern[i, k])
        column_mates = [k for k in sorted(free_rows) if pattern[k, j]]
        row_mates = [k for k in sorted(free_cols) if pattern[i, k]]
        if len(column_mates) > 1:
            take(Column(len(column_mates)), column_mates, [j])
        elif len(row_mates) > 1:
            take(Row(len(row_mates)), [i], row_mates)
        else:
            take(Column(1), [i], [j])

    if free_cols:
        raise MaxAlgebraError(f"columns {sorted(c + 1 for c in free_cols)} were left uncovered")

    rank = {id(block): pos for pos, block in enumerate(_canonical_order([p[0] for p in pieces]))}
    pieces.sort(key=lambda p: rank[id(p[0])])
    row_order = [r for _, rows, _ in pieces for r in rows]
    col_order = [c for _, _, cols in pieces for c in cols]

    decomposition = ExtremeDecomposition(
        p_left=Permutation(tuple(row_order)).inverse(),
        blocks=tuple(p[0] for p in pieces),
        p_right=Permutation(tuple(col_order)),
    )
    if decomposition.reconstruct() != MaxMatrix(pattern.astype(float)):
        raise MaxAlgebraError("decomposition does not reproduce the input")
    logger.debug(f"✅ Decomposed into {len(decomposition.blocks)} blocks")
    return decomposition


# --- non-extremality --------------------------------------------------------

@dataclass(frozen=True)
class NonExtremalityWitness:
    d1: MaxMatrix
    d2: MaxMatrix
    alpha1: float
    alpha2: float

    def combine(self) -> MaxMatrix:
        return max_convex_combination([(self.alpha1, self.d1), (self.alpha2, self.d2)])

    def as_dict(self):
        return {
            "d1": self.d1.to_lists(),
            "d2": self.d2.to_lists(),
            "alpha1": self.alpha1,
            "alpha2": self.alpha2,
        }


def non_extremality_witness(E: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE
                            ) -> Optional[NonExtremalityWitness]:
    """Two MDS matrices, both different from E, whose max-convex combination is E.

    A fractional entry e gives E = D1 ⊕ e·D2 (entry set to 0 in D1, to 1 in D2).
    Otherwise two non-singleton 1-entries give E = D1 ⊕ D2 with one of them lowered
    to 0.5 in each. None when E is a max-extreme point.
    """
    require_square(E)
    if not classify(E, tol).doubly:
        raise ValidationError("matrix is not max-doubly stochastic")

    for (i, j), value in np.ndenumerate(E.data):
        if not (tol.is_zero(value) or tol.is_one(value)):
            logger.debug(f"🔍 Fractional entry ({i + 1},{j + 1}) = {value}")
            return NonExtremalityWitness(
                d1=E.with_entry(i, j, 0.0),
                d2=E.with_entry(i, j, 1.0),
                alpha1=1.0,
                alpha2=float(value),
            )

    non_singletons = _non_singletons(singleton_profile(E, tol))
    if len(non_singletons) < 2:
        return None
    (i1, j1), (i2, j2) = non_singletons[0], non_singletons[-1]
    return NonExtremalityWitness(
        d1=E.with_entry(i1, j1, 0.5),
        d2=E.with_entry(i2, j2, 0.5),
        alpha1=1.0,
        alpha2=1.0,
    )
