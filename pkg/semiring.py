"""
Max-Times Semiring
Scalars, vectors and matrices over R_max = ([0, inf), max, *) and their algebra
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from errors import DimensionError, ValidationError
from logger_config import setup_logger

logger = setup_logger()


def as_scalar(value) -> float:
    """Validate a semiring element: a finite, nonnegative real"""
    try:
        x = float(value)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"{value!r} is not a number") from e
    if not math.isfinite(x) or x < 0:
        raise ValidationError(f"{value!r} is not a finite nonnegative real")
    return x


@dataclass(frozen=True)
class Tolerance:
    """Floating-point comparison policy.

    Two scalars are equal when |a - b| <= epsilon * max(1, a, b), which behaves
    like an absolute tolerance near the unit entries of stochastic matrices and
    like a relative one for large spectral values.
    """

    epsilon: float = 1e-9

    def __post_init__(self):
        if not (self.epsilon >= 0 and math.isfinite(self.epsilon)):
            raise ValidationError(f"tolerance must be finite and >= 0, got {self.epsilon!r}")

    def slack(self, a, b):
        return self.epsilon * np.maximum(1.0, np.maximum(a, b))

    def close(self, a, b) -> bool:
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        return bool(np.all(np.abs(a - b) <= self.slack(a, b)))

    def at_most(self, a, b) -> bool:
        """a <= b up to the tolerance, elementwise"""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        return bool(np.all(a <= b + self.slack(a, b)))

    def is_one(self, a) -> bool:
        return self.close(a, 1.0)

    def is_zero(self, a) -> bool:
        return self.close(a, 0.0)


DEFAULT_TOLERANCE = Tolerance()


def _frozen(data, ndim):
    try:
        arr = np.array(data, dtype=float)
    except (TypeError, ValueError, OverflowError) as e:
        raise ValidationError(f"entries must be finite numbers: {e}") from e
    if ndim == 2 and arr.size == 0:
        if arr.shape not in ((0,), (0, 0)):
            raise DimensionError(f"only the 0x0 matrix may be empty, got shape {arr.shape}")
        arr = arr.reshape(0, 0)
    if arr.ndim != ndim:
        raise DimensionError(f"expected {ndim}-dimensional data, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("entries must be finite")
    if np.any(arr < 0):
        raise ValidationError("entries must be nonnegative")
    arr.flags.writeable = False
    return arr


class _MaxArray:
    __slots__ = ("_data",)
    _ndim = 0

    def __init__(self, data):
        self._data = _frozen(data, self._ndim)

    @property
    def data(self) -> np.ndarray:
        """Read-only numpy view of the entries"""
        return self._data

    @property
    def shape(self):
        return self._data.shape

    def to_lists(self):
        return self._data.tolist()

    def sort_key(self):
        return (self.shape, tuple(self._data.ravel().tolist()))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self):
        return hash((type(self).__name__, self.shape, self._data.tobytes()))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_lists()!r})"


class MaxVector(_MaxArray):
    """Dense vector of semiring elements"""

    __slots__ = ()
    _ndim = 1

    def __init__(self, entries):
        super().__init__(entries)
        if self._data.size == 0:
            raise DimensionError("vectors must have at least one entry")

    @property
    def dim(self) -> int:
        return self._data.shape[0]

    def __len__(self):
        return self.dim

    def __getitem__(self, i):
        return float(self._data[i])

    def is_zero(self) -> bool:
        return not np.any(self._data > 0)


class MaxMatrix(_MaxArray):
    """Dense rows x cols matrix of semiring elements (row-major)"""

    __slots__ = ()
    _ndim = 2

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols)))

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n))

    @classmethod
    def empty(cls):
        return cls(np.zeros((0, 0)))

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i, j) -> float:
        return float(self._data[i, j])

    def column(self, j) -> MaxVector:
        return MaxVector(self._data[:, j])

    def row(self, i) -> MaxVector:
        return MaxVector(self._data[i, :])

    def with_entry(self, i, j, value) -> MaxMatrix:
        """Copy of the matrix with one entry replaced"""
        arr = self._data.copy()
        arr[i, j] = as_scalar(value)
        return MaxMatrix(arr)


Operand = Union[float, MaxVector, MaxMatrix]


def require_square(A: MaxMatrix, what="matrix"):
    if not A.is_square:
        raise DimensionError(f"{what} must be square, got {A.rows}x{A.cols}")


def _same_kind(a, b):
    if isinstance(a, _MaxArray) or isinstance(b, _MaxArray):
        if type(a) is not type(b):
            raise DimensionError(f"cannot combine {type(a).__name__} with {type(b).__name__}")
        if a.shape != b.shape:
            raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
        return type(a)
    return None


def oplus(a: Operand, b: Operand) -> Operand:
    """Max-addition: elementwise maximum"""
    kind = _same_kind(a, b)
    if kind is None:
        return max(as_scalar(a), as_scalar(b))
    return kind(np.maximum(a.data, b.data))


def otimes(A: MaxMatrix, B: Union[MaxMatrix, MaxVector]):
    """Max-times product: (A ⊗ B)_{i,j} = max_k a_{i,k} b_{k,j}"""
    if isinstance(B, MaxVector):
        if A.cols != B.dim:
            raise DimensionError(f"cannot multiply {A.rows}x{A.cols} matrix by vector of length {B.dim}")
        return MaxVector(np.max(A.data * B.data[np.newaxis, :], axis=1, initial=0.0))
    if A.cols != B.rows:
        raise DimensionError(f"inner dimensions differ: {A.rows}x{A.cols} ⊗ {B.rows}x{B.cols}")
    products = A.data[:, :, np.newaxis] * B.data[np.newaxis, :, :]
    return MaxMatrix(np.max(products, axis=1, initial=0.0))


def scale(alpha, A: Union[MaxMatrix, MaxVector]):
    """Scalar multiplication of every entry"""
    return type(A)(as_scalar(alpha) * A.data)


def le(a: Union[MaxVector, MaxMatrix], b: Union[MaxVector, MaxMatrix],
       tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """The semiring order: a <= b iff a ⊕ b = b, entrywise within tolerance"""
    _same_kind(a, b)
    return tol.at_most(a.data, b.data)


def transpose(A: MaxMatrix) -> MaxMatrix:
    return MaxMatrix(A.data.T)


def direct_sum(A: MaxMatrix, B: MaxMatrix) -> MaxMatrix:
    """Block-diagonal assembly A ⊞ B"""
    out = np.zeros((A.rows + B.rows, A.cols + B.cols))
    out[:A.rows, :A.cols] = A.data
    out[A.rows:, A.cols:] = B.data
    return MaxMatrix(out)


def concat(x: MaxVector, y: MaxVector) -> MaxVector:
    return MaxVector(np.concatenate([x.data, y.data]))


class StandardVectors(NamedTuple):
    ones: MaxVector
    zeros: MaxVector
    units: tuple


def standard_vectors(n: int) -> StandardVectors:
    """The all-ones vector, the zero vector and the unit vectors e_1..e_n"""
    if n < 1:
        raise ValidationError(f"dimension must be positive, got {n}")
    eye = np.eye(n)
    return StandardVectors(
        ones=MaxVector(np.ones(n)),
        zeros=MaxVector(np.zeros(n)),
        units=tuple(MaxVector(eye[i]) for i in range(n)),
    )


def is_zero_one(A: MaxMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    near_zero = np.abs(A.data) <= tol.slack(A.data, 0.0)
    near_one = np.abs(A.data - 1.0) <= tol.slack(A.data, 1.0)
    return bool(np.all(near_zero | near_one))


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0..size-1}; mapping[i] is the image of i.

    Indices are 0-based in code and 1-based in documents and messages.
    """

    mapping: tuple

    def __post_init__(self):
        mapping = tuple(int(v) for v in self.mapping)
        if not mapping:
            raise ValidationError("a permutation needs at least one element")
        if sorted(mapping) != list(range(len(mapping))):
            raise ValidationError(f"{[v + 1 for v in mapping]} is not a bijection on 1..{len(mapping)}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images: Sequence[int]):
        return cls(tuple(int(v) - 1 for v in images))

    @property
    def size(self) -> int:
        return len(self.mapping)

    def one_based(self):
        return [v + 1 for v in self.mapping]

    def compose(self, other: Permutation) -> Permutation:
        """i -> other(self(i)); its matrix is matrix(self) ⊗ matrix(other)"""
        if other.size != self.size:
            raise DimensionError(f"cannot compose permutations of sizes {self.size} and {other.size}")
        return Permutation(tuple(other.mapping[v] for v in self.mapping))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, v in enumerate(self.mapping):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.mapping == tuple(range(self.size))


def permutation_matrix(sigma: Permutation) -> MaxMatrix:
    """(0,1)-matrix P with P[i, sigma(i)] = 1, so (P ⊗ A) has row i equal to row sigma(i) of A"""
    P = np.zeros((sigma.size, sigma.size))
    P[np.arange(sigma.size), list(sigma.mapping)] = 1.0
    return MaxMatrix(P)


def permute(A: MaxMatrix, p_left: Permutation, p_right: Permutation) -> MaxMatrix:
    """P1 ⊗ A ⊗ P2 computed by reindexing instead of two products"""
    if p_left.size != A.rows or p_right.size != A.cols:
        raise DimensionError(
            f"permutations of sizes {p_left.size}/{p_right.size} do not fit a {A.rows}x{A.cols} matrix")
    rows = list(p_left.mapping)
    cols = list(p_right.inverse().mapping)
    return MaxMatrix(A.data[rows][:, cols])


def max_convex_combination(terms, tol: Tolerance = DEFAULT_TOLERANCE):
    """⊕_i alpha_i v_i for coefficients whose maximum is 1"""
    terms = list(terms)
    if not terms:
        raise ValidationError("a max-convex combination needs at least one term")
    alphas = [as_scalar(alpha) for alpha, _ in terms]
    if not tol.is_one(max(alphas)):
        raise ValidationError(f"coefficients must have maximum 1, got {max(alphas)!r}")
    result = scale(alphas[0], terms[0][1])
    for alpha, v in zip(alphas[1:], (v for _, v in terms[1:])):
        result = oplus(result, scale(alpha, v))
    return result
