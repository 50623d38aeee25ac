"""
Max-Majorization
x ≺max y iff x = D ⊗ y for some max-doubly stochastic D: the max/min
characterization, constructive witnesses, the hull of the generators y^(i),
region sampling for plotting, and the MDS test through majorization
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from errors import DimensionError, MaxAlgebraError, NotMajorizedError, ValidationError
from logger_config import setup_logger
from semiring import (
    DEFAULT_TOLERANCE,
    MaxMatrix,
    MaxVector,
    Tolerance,
    max_convex_combination,
    otimes,
    require_square,
    standard_vectors,
)
from stochastic import classify

logger = setup_logger()


class PivotIndices(NamedTuple):
    """0-based positions of max x, max y and min y used by the witness"""

    k: int
    l: int
    m: int

    def one_based(self):
        return {"k": self.k + 1, "l": self.l + 1, "m": self.m + 1}


@dataclass(frozen=True)
class MajorizationWitness:
    matrix: MaxMatrix
    pivot_indices: Optional[PivotIndices]

    def certifies(self, x: MaxVector, y: MaxVector, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        """D is max-doubly stochastic and D ⊗ y = x"""
        return classify(self.matrix, tol).doubly and tol.close(otimes(self.matrix, y).data, x.data)

    def as_dict(self):
        return {
            "matrix": self.matrix.to_lists(),
            "pivot_indices": self.pivot_indices.one_based() if self.pivot_indices else None,
        }


@dataclass(frozen=True)
class HullDescription:
    y_min: float
    y_max: float
    generators: tuple
    generator_matrices: tuple

    def as_dict(self):
        return {
            "y_min": self.y_min,
            "y_max": self.y_max,
            "generators": [g.to_lists() for g in self.generators],
            "generator_matrices": [D.to_lists() for D in self.generator_matrices],
        }


@dataclass(frozen=True)
class RegionSample:
    grid_points: tuple
    labels: tuple
    step: float
    bounds: tuple

    def inside(self):
        return [p for p, inside in zip(self.grid_points, self.labels) if inside]


def _same_dim(x: MaxVector, y: MaxVector):
    if x.dim != y.dim:
        raise DimensionError(f"vectors have different lengths: {x.dim} vs {y.dim}")


def majorizes_check(x: MaxVector, y: MaxVector, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """x ≺max y iff max x = max y and min x >= min y"""
    _same_dim(x, y)
    same_max = tol.close(np.max(x.data), np.max(y.data))
    min_above = tol.at_most(np.min(y.data), np.min(x.data))
    return same_max and min_above


def witness(x: MaxVector, y: MaxVector, tol: Tolerance = DEFAULT_TOLERANCE) -> MajorizationWitness:
    """An MDS matrix D with D ⊗ y = x.

    With k = argmax x, l = argmax y, m = argmin y (smallest index on ties):
    row k is all ones, column m is all ones, d_{i,l} = x_i / y_l, zeros elsewhere.
    """
    if not majorizes_check(x, y, tol):
        raise NotMajorizedError("x is not max-majorized by y")

    n = x.dim
    if y.is_zero():
        # only x = 0 is related to y = 0; the identity avoids dividing by y_l
        return MajorizationWitness(MaxMatrix.identity(n), None)

    k = int(np.argmax(x.data))
    l = int(np.argmax(y.data))
    m = int(np.argmin(y.data))
    D = np.zeros((n, n))
    D[:, l] = np.minimum(x.data / y.data[l], 1.0)
    D[:, m] = 1.0
    D[k, :] = 1.0

    result = MajorizationWitness(MaxMatrix(D), PivotIndices(k, l, m))
    if not result.certifies(x, y, tol):
        raise MaxAlgebraError("constructed witness does not certify the relation")
    logger.debug(f"✅ Witness built with pivots k={k + 1}, l={l + 1}, m={m + 1}")
    return result


def hull(y: MaxVector) -> HullDescription:
    """The generators y^(i) (y_max at i, y_min elsewhere) and matrices D^(i) with D^(i) ⊗ y = y^(i)"""
    n = y.dim
    y_min = float(np.min(y.data))
    y_max = float(np.max(y.data))
    m = int(np.argmin(y.data))

    generators = []
    matrices = []
    for i in range(n):
        g = np.full(n, y_min)
        g[i] = y_max
        D = np.zeros((n, n))
        D[:, m] = 1.0
        D[i, :] = 1.0
        generators.append(MaxVector(g))
        matrices.append(MaxMatrix(D))
        if otimes(matrices[-1], y) != generators[-1]:
            raise MaxAlgebraError(f"generator matrix {i + 1} does not map y to y^({i + 1})")

    return HullDescription(y_min, y_max, tuple(generators), tuple(matrices))


def hull_membership(x: MaxVector, y: MaxVector, tol: Tolerance = DEFAULT_TOLERANCE
                    ) -> Optional[tuple]:
    """Coefficients alpha_i = x_i / y_max with ⊕_i alpha_i y^(i) = x, or None outside the hull"""
    _same_dim(x, y)
    if not majorizes_check(x, y, tol):
        return None

    description = hull(y)
    if description.y_max == 0:
        alphas = standard_vectors(x.dim).units[0].data
    else:
        alphas = np.minimum(x.data / description.y_max, 1.0)
    combination = max_convex_combination(zip(alphas.tolist(), description.generators), tol)
    if not tol.close(combination.data, x.data):
        logger.warning("⚠️ Hull coefficients do not reproduce x within tolerance")
        return None
    return tuple(float(a) for a in alphas)


def default_region_window(y: MaxVector):
    """[0, 1.5 · y_max] on every axis with step y_max / 20"""
    y_max = float(np.max(y.data))
    if y_max <= 0:
        raise ValidationError("the default window needs y_max > 0; pass bounds and step explicitly")
    return y_max / 20.0, tuple((0.0, 1.5 * y_max) for _ in range(y.dim))


def _axis_points(lo, hi, step):
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    # index · step + lo keeps the grid free of accumulated drift
    return [lo + index * step for index in range(count)]


def region_sample(y: MaxVector, step, bounds, tol: Tolerance = DEFAULT_TOLERANCE) -> RegionSample:
    """Label every grid point by whether it is max-majorized by y, in row-major order"""
    step = float(step)
    if not step > 0:
        raise ValidationError(f"step must be positive, got {step}")
    bounds = tuple((float(lo), float(hi)) for lo, hi in bounds)
    if len(bounds) != y.dim:
        raise DimensionError(f"{len(bounds)} axis bounds given for a vector of length {y.dim}")
    for lo, hi in bounds:
        if not (np.isfinite(lo) and np.isfinite(hi)) or lo < 0 or hi < lo:
            raise ValidationError(f"invalid axis bounds ({lo}, {hi})")

    axes = [_axis_points(lo, hi, step) for lo, hi in bounds]
    points = tuple(MaxVector(coords) for coords in itertools.product(*axes))
    labels = tuple(majorizes_check(p, y, tol) for p in points)
    logger.info(f"📍 Region sample: {sum(labels)} of {len(points)} grid points inside")
    return RegionSample(points, labels, step, bounds)


def is_mds_via_majorization(A: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """A ⊗ x ≺max x for every x; checking x = 1 and x = e_i is enough"""
    require_square(A)
    vectors = standard_vectors(A.rows)
    if not majorizes_check(otimes(A, vectors.ones), vectors.ones, tol):
        return False
    return all(majorizes_check(otimes(A, e), e, tol) for e in vectors.units)


def compose_witnesses(outer: MajorizationWitness, inner: MajorizationWitness) -> MajorizationWitness:
    """If x = D1 ⊗ y and y = D2 ⊗ z then D1 ⊗ D2 certifies x ≺max z"""
    return MajorizationWitness(otimes(outer.matrix, inner.matrix), None)


def combine_witnesses(alpha1, first: MajorizationWitness, alpha2, second: MajorizationWitness,
                      tol: Tolerance = DEFAULT_TOLERANCE) -> MajorizationWitness:
    """alpha1 D1 ⊕ alpha2 D2 certifies alpha1 x1 ⊕ alpha2 x2 ≺max y"""
    matrix = max_convex_combination([(alpha1, first.matrix), (alpha2, second.matrix)], tol)
    return MajorizationWitness(matrix, None)


def mutually_majorized(x: MaxVector, y: MaxVector, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return majorizes_check(x, y, tol) and majorizes_check(y, x, tol)


def is_coordinate_permutation(x: MaxVector, y: MaxVector, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    _same_dim(x, y)
    return tol.close(np.sort(x.data), np.sort(y.data))
