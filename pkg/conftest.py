"""
Shared fixtures and hypothesis strategies for the max-algebra test suite
"""

import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from semiring import MaxMatrix, MaxVector, Permutation

# Products and maxima of these values are exact in binary floating point
DYADIC = (0.0, 0.25, 0.5, 1.0, 2.0, 4.0)
SUB_UNIT = (0.0, 0.25, 0.5, 0.75)

SAMPLE_MDS = {
    "I": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "P": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    "D1": [[1 / 2, 1 / 4, 1], [4 / 5, 1, 2 / 3], [1, 2 / 3, 6 / 7]],
    "D2": [[1, 1, 0], [0, 1, 1], [0, 0, 1]],
}

# Representatives of the extreme points of MDS_3 and MDS_2 up to row/column permutations
EXTREME_REPRESENTATIVES_3 = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[0, 1, 1], [1, 0, 0], [1, 0, 0]],
    [[1, 1, 1], [1, 0, 0], [1, 0, 0]],
]
EXTREME_REPRESENTATIVES_2 = [
    [[1, 0], [0, 1]],
    [[1, 1], [1, 0]],
]


@pytest.fixture(params=sorted(SAMPLE_MDS))
def sample_mds(request):
    return MaxMatrix(SAMPLE_MDS[request.param])


@pytest.fixture
def d1():
    return MaxMatrix(SAMPLE_MDS["D1"])


@pytest.fixture
def d2():
    return MaxMatrix(SAMPLE_MDS["D2"])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def zero_one_matrices(n):
    """Every (0,1)-matrix of size n x n"""
    for bits in itertools.product((0.0, 1.0), repeat=n * n):
        yield MaxMatrix(np.array(bits).reshape(n, n))


def random_matrix(rng, n, zero_density=0.5, low=0.5, high=2.0):
    """Entries uniform in [low, high), each replaced by 0 with probability zero_density"""
    values = rng.uniform(low, high, size=(n, n))
    mask = rng.uniform(size=(n, n)) < zero_density
    return MaxMatrix(np.where(mask, 0.0, values))


# --- hypothesis strategies --------------------------------------------------

scalars = st.sampled_from(DYADIC)


@st.composite
def vectors(draw, n=None, elements=scalars):
    if n is None:
        n = draw(st.integers(min_value=1, max_value=4))
    return MaxVector(draw(st.lists(elements, min_size=n, max_size=n)))


@st.composite
def matrices(draw, rows=None, cols=None, elements=scalars):
    if rows is None:
        rows = draw(st.integers(min_value=1, max_value=4))
    if cols is None:
        cols = draw(st.integers(min_value=1, max_value=4))
    entries = draw(st.lists(elements, min_size=rows * cols, max_size=rows * cols))
    return MaxMatrix(np.array(entries).reshape(rows, cols))


@st.composite
def square_matrices(draw, n=None, elements=scalars):
    if n is None:
        n = draw(st.integers(min_value=1, max_value=4))
    return draw(matrices(n, n, elements))


@st.composite
def permutations(draw, n=None):
    if n is None:
        n = draw(st.integers(min_value=1, max_value=5))
    return Permutation(tuple(draw(st.permutations(range(n)))))


@st.composite
def mds_matrices(draw, n=None):
    """A permutation backbone of 1s with entries from [0, 1) elsewhere"""
    if n is None:
        n = draw(st.integers(min_value=1, max_value=4))
    sigma = draw(st.permutations(range(n)))
    data = np.array(draw(st.lists(st.sampled_from(SUB_UNIT), min_size=n * n, max_size=n * n)))
    data = data.reshape(n, n)
    data[np.arange(n), sigma] = 1.0
    return MaxMatrix(data)
