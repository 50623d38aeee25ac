"""
Reference Oracles
Slow, independent brute-force versions of the spectral radius, the extreme
points of MDS_n, majorization witnesses and the local spectral radius.
They share nothing with the primary implementations beyond the core types.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from errors import CapacityError, DimensionError, ValidationError
from logger_config import setup_logger
from semiring import DEFAULT_TOLERANCE, MaxMatrix, MaxVector, Tolerance

logger = setup_logger()


@dataclass(frozen=True)
class OracleBudget:
    max_pattern_dim: int = 4
    max_cycle_dim: int = 6
    max_witness_dim: int = 3
    max_candidates: int = 1_000_000

    def check(self, n, limit, what):
        if n > limit:
            raise CapacityError(f"{what} oracle is limited to n <= {limit}, got {n}")


DEFAULT_BUDGET = OracleBudget()


def _square(A: MaxMatrix):
    if A.rows != A.cols:
        raise DimensionError(f"matrix must be square, got {A.rows}x{A.cols}")
    return A.rows


def brute_cycle_radius(A: MaxMatrix, budget: OracleBudget = DEFAULT_BUDGET) -> float:
    """Largest geometric mean over every simple cycle i1 -> i2 -> ... -> ik -> i1"""
    n = _square(A)
    budget.check(n, budget.max_cycle_dim, "cycle")
    a = A.data.tolist()
    best = 0.0
    for k in range(1, n + 1):
        for nodes in itertools.combinations(range(n), k):
            # fix the smallest node first so each cycle is visited once per direction
            head, tail = nodes[0], nodes[1:]
            for order in itertools.permutations(tail):
                cycle = (head,) + order
                weight = math.prod(a[cycle[t]][cycle[(t + 1) % k]] for t in range(k))
                if weight > 0:
                    best = max(best, weight ** (1.0 / k))
    return best


def _all_patterns(n):
    codes = np.arange(2 ** (n * n), dtype=np.int64)
    bits = (codes[:, np.newaxis] >> np.arange(n * n)) & 1
    return bits.reshape(-1, n, n).astype(bool)


def _doubly_stochastic_patterns(patterns):
    return patterns.any(axis=2).all(axis=1) & patterns.any(axis=1).all(axis=1)


def brute_extreme_points(n: int, budget: OracleBudget = DEFAULT_BUDGET) -> tuple:
    """Filter all 2^(n^2) (0,1)-patterns: keep the max-doubly stochastic ones in which at
    most one 1-entry can be lowered to 0 without losing max-double stochasticity"""
    if n < 1:
        raise ValidationError(f"dimension must be positive, got {n}")
    budget.check(n, budget.max_pattern_dim, "extreme-point")

    patterns = _all_patterns(n)
    patterns = patterns[_doubly_stochastic_patterns(patterns)]
    lowerable = np.zeros(len(patterns), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            lowered = patterns.copy()
            lowered[:, i, j] = False
            still_mds = _doubly_stochastic_patterns(lowered)
            lowerable += (patterns[:, i, j] & still_mds).astype(np.int64)
    kept = patterns[lowerable <= 1]
    logger.info(f"🔍 Oracle kept {len(kept)} of {2 ** (n * n)} patterns for n={n}")
    return tuple(sorted(MaxMatrix(p.astype(float)) for p in kept))


def _entry_candidates(xi, yj):
    # (D ⊗ y)_i is a maximum of d_ij y_j: an entry either attains x_i (d = x_i / y_j),
    # carries a 1 for stochasticity, or can be lowered to 0 without changing D ⊗ y
    values = {0.0, 1.0}
    if yj > 0 and xi <= yj:
        values.add(xi / yj)
    return sorted(values)


def brute_majorization_witness(x: MaxVector, y: MaxVector,
                               tol: Tolerance = DEFAULT_TOLERANCE,
                               budget: OracleBudget = DEFAULT_BUDGET) -> Optional[MaxMatrix]:
    """First MDS D (in candidate order) with D ⊗ y = x, searched over a finite candidate set"""
    if x.dim != y.dim:
        raise DimensionError(f"vectors have different lengths: {x.dim} vs {y.dim}")
    n = x.dim
    budget.check(n, budget.max_witness_dim, "majorization")
    xs, ys = x.data.tolist(), y.data.tolist()

    # rows are independent for D ⊗ y = x and row stochasticity; columns are checked jointly
    row_options = []
    for i in range(n):
        choices = itertools.product(*(_entry_candidates(xs[i], ys[j]) for j in range(n)))
        valid = [
            row for row in choices
            if tol.close(max(row), 1.0) and tol.close(max(d * yj for d, yj in zip(row, ys)), xs[i])
        ]
        if not valid:
            return None
        row_options.append(valid)

    total = math.prod(len(options) for options in row_options)
    if total > budget.max_candidates:
        raise CapacityError(f"{total} candidate matrices exceed the budget of {budget.max_candidates}")

    for rows in itertools.product(*row_options):
        column_maxima = [max(row[j] for row in rows) for j in range(n)]
        if all(tol.close(c, 1.0) for c in column_maxima):
            return MaxMatrix(rows)
    return None


def iterative_local_radius(A: MaxMatrix, x: MaxVector, steps: int) -> float:
    """‖A^K ⊗ x‖^(1/K) at K = steps, tracked as a running log-norm"""
    n = _square(A)
    if x.dim != n:
        raise DimensionError(f"vector of length {x.dim} does not fit a {n}x{n} matrix")
    if not np.any(x.data > 0):
        raise ValidationError("the local spectral radius needs a nonzero vector")
    if steps < 1:
        raise ValidationError(f"steps must be positive, got {steps}")

    with np.errstate(divide="ignore"):
        weights = np.where(A.data > 0, np.log(np.where(A.data > 0, A.data, 1.0)), -np.inf)
        v = np.where(x.data > 0, np.log(np.where(x.data > 0, x.data, 1.0)), -np.inf)
    log_norm = 0.0
    for _ in range(steps):
        v = np.max(weights + v[np.newaxis, :], axis=1)
        top = float(np.max(v))
        if top == -np.inf:
            return 0.0
        log_norm += top
        v = v - top
    return float(np.exp(log_norm / steps))
