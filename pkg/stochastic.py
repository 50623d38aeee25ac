"""
Stochastic Matrices
Max-row, max-column and max-doubly stochastic predicates, trace and unital
preservation, and seeded generators of stochastic test matrices
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from errors import ValidationError
from logger_config import setup_logger
from semiring import (
    DEFAULT_TOLERANCE,
    MaxMatrix,
    MaxVector,
    Tolerance,
    otimes,
    require_square,
    standard_vectors,
)

logger = setup_logger()


class Axis(Enum):
    ROW = "row"
    COLUMN = "column"


@dataclass(frozen=True)
class Violation:
    axis: Axis
    index: int
    max_value: float

    def as_dict(self):
        return {"axis": self.axis.value, "index": self.index + 1, "max_value": self.max_value}


@dataclass(frozen=True)
class StochasticClass:
    row: bool
    column: bool
    violations: tuple = field(default_factory=tuple)

    @property
    def doubly(self) -> bool:
        return self.row and self.column

    def as_dict(self):
        return {
            "row": self.row,
            "column": self.column,
            "doubly": self.doubly,
            "violations": [v.as_dict() for v in self.violations],
        }


def _axis_violations(maxima, axis, tol):
    return [
        Violation(axis, i, float(m))
        for i, m in enumerate(maxima)
        if not tol.is_one(m)
    ]


def classify(D: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> StochasticClass:
    """Check D ⊗ 1 = 1 (rows) and 1ᵀ ⊗ D = 1ᵀ (columns), recording every failing line"""
    require_square(D)
    row_bad = _axis_violations(np.max(D.data, axis=1, initial=0.0), Axis.ROW, tol)
    col_bad = _axis_violations(np.max(D.data, axis=0, initial=0.0), Axis.COLUMN, tol)
    result = StochasticClass(row=not row_bad, column=not col_bad,
                             violations=tuple(row_bad + col_bad))
    if result.violations:
        logger.debug(f"❌ {len(result.violations)} stochasticity violations")
    return result


def trace(x: MaxVector) -> float:
    """tr(x) = max_i x_i"""
    return float(np.max(x.data))


def is_trace_preserving(A: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """tr(A ⊗ x) = tr(x) for all x; it suffices that tr(A ⊗ e_i) = 1 for every i"""
    require_square(A)
    return all(tol.is_one(trace(otimes(A, e))) for e in standard_vectors(A.rows).units)


def is_unital_preserving(A: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """A ⊗ 1 = 1"""
    require_square(A)
    ones = standard_vectors(A.rows).ones
    return tol.close(otimes(A, ones).data, ones.data)


def _check_generator_args(n, fill_density):
    if n < 1:
        raise ValidationError(f"dimension must be positive, got {n}")
    if not 0.0 <= fill_density <= 1.0:
        raise ValidationError(f"fill density must lie in [0, 1], got {fill_density}")


def _filler(rng, n, fill_density):
    values = rng.uniform(0.0, 1.0, size=(n, n))
    mask = rng.uniform(0.0, 1.0, size=(n, n)) < fill_density
    return np.where(mask, values, 0.0)


def random_mds(n: int, seed: int, fill_density: float) -> MaxMatrix:
    """A max-doubly stochastic matrix: a random permutation backbone of 1s, other
    entries drawn from [0, 1) with the given density. Deterministic for a seed."""
    _check_generator_args(n, fill_density)
    rng = np.random.default_rng(seed)
    sigma = rng.permutation(n)
    data = _filler(rng, n, fill_density)
    data[np.arange(n), sigma] = 1.0
    return MaxMatrix(data)


def random_row_stochastic(n: int, seed: int, fill_density: float) -> MaxMatrix:
    """A max-row stochastic matrix: one 1 per row in a random column"""
    _check_generator_args(n, fill_density)
    rng = np.random.default_rng(seed)
    targets = rng.integers(0, n, size=n)
    data = _filler(rng, n, fill_density)
    data[np.arange(n), targets] = 1.0
    return MaxMatrix(data)
