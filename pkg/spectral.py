"""
Spectral Quantities
Spectral radius as maximum cycle geometric mean, eigenpair checks, local
spectral radii, the max-entry norm and irreducibility
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from errors import DimensionError, ValidationError
from logger_config import setup_logger
from semiring import (
    DEFAULT_TOLERANCE,
    MaxMatrix,
    MaxVector,
    Tolerance,
    otimes,
    require_square,
    scale,
    standard_vectors,
)

logger = setup_logger()


@dataclass(frozen=True)
class SpectralReport:
    radius: float
    local_radii: tuple
    norm: float
    irreducible: bool

    def as_dict(self):
        return {
            "radius": self.radius,
            "local_radii": list(self.local_radii),
            "norm": self.norm,
            "irreducible": self.irreducible,
        }


def _log_weights(data: np.ndarray) -> np.ndarray:
    # zero entries are absent edges
    with np.errstate(divide="ignore"):
        return np.where(data > 0, np.log(np.where(data > 0, data, 1.0)), -np.inf)


def _maxplus_product(L: np.ndarray, M: np.ndarray) -> np.ndarray:
    return np.max(L[:, :, np.newaxis] + M[np.newaxis, :, :], axis=1)


def _cycle_mean_radius(data: np.ndarray) -> float:
    n = data.shape[0]
    if n == 0:
        return 0.0
    L = _log_weights(data)
    power = L.copy()
    best = -np.inf
    for k in range(1, n + 1):
        if k > 1:
            power = _maxplus_product(power, L)
        best = max(best, float(np.max(np.diag(power))) / k)
    return 0.0 if best == -np.inf else float(np.exp(best))


def spectral_radius(A: MaxMatrix) -> float:
    """Maximum cycle geometric mean, max over k <= n and i of (A^k)_{i,i}^(1/k).

    Closed walks never beat their best simple subcycle, so the diagonals of the
    first n max-times powers are enough. Products are accumulated as sums of
    logarithms. An acyclic matrix has radius 0.
    """
    require_square(A)
    return _cycle_mean_radius(A.data)


def norm(A: MaxMatrix) -> float:
    """max_{i,j} |a_{i,j}|"""
    return float(np.max(A.data, initial=0.0))


def is_eigenpair(A: MaxMatrix, x: MaxVector, lam, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff A ⊗ x = lam · x"""
    require_square(A)
    if x.dim != A.cols:
        raise DimensionError(f"vector of length {x.dim} does not fit a {A.rows}x{A.cols} matrix")
    if x.is_zero():
        raise ValidationError("an eigenvector must be nonzero")
    return tol.close(otimes(A, x).data, scale(lam, x).data)


def positive_digraph(A: MaxMatrix) -> nx.DiGraph:
    """Digraph with an edge u -> v for every a_{u,v} > 0"""
    G = nx.DiGraph()
    G.add_nodes_from(range(A.rows))
    rows, cols = np.nonzero(A.data > 0)
    G.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return G


def _unit_local_radius(A: MaxMatrix, G: nx.DiGraph, i: int) -> float:
    # (A^k ⊗ e_i)_j collects paths j -> i, so only cycles that can reach i count
    support = sorted(nx.ancestors(G, i) | {i})
    return _cycle_mean_radius(A.data[np.ix_(support, support)])


def local_spectral_radius(A: MaxMatrix, x: MaxVector) -> float:
    """Growth rate of ‖A^k ⊗ x‖^(1/k): the best r_{e_i}(A) over coordinates with x_i > 0"""
    require_square(A)
    if x.dim != A.rows:
        raise DimensionError(f"vector of length {x.dim} does not fit a {A.rows}x{A.cols} matrix")
    if x.is_zero():
        raise ValidationError("the local spectral radius needs a nonzero vector")
    G = positive_digraph(A)
    active = np.nonzero(x.data > 0)[0].tolist()
    return max(_unit_local_radius(A, G, i) for i in active)


def is_irreducible(A: MaxMatrix) -> bool:
    """True iff the digraph of positive entries is strongly connected"""
    require_square(A)
    if A.rows == 1:
        return True
    return nx.is_strongly_connected(positive_digraph(A))


def analyze(A: MaxMatrix) -> SpectralReport:
    require_square(A)
    logger.debug(f"🔍 Spectral analysis of a {A.rows}x{A.cols} matrix")
    units = standard_vectors(A.rows).units
    report = SpectralReport(
        radius=spectral_radius(A),
        local_radii=tuple(local_spectral_radius(A, e) for e in units),
        norm=norm(A),
        irreducible=is_irreducible(A),
    )
    logger.debug(f"✅ radius={report.radius}, norm={report.norm}, irreducible={report.irreducible}")
    return report
