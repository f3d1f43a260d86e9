import numpy as np
import pytest

from convexotonic import (
    MatrixTuple,
    algebra_closure,
    type_i_tuple,
    type_ii_tuple,
    type_iii_tuple,
    type_iv_tuple,
)
from convexotonic.sampling import complex_gaussian


@pytest.fixture
def e_tuple():
    return type_iv_tuple()


@pytest.fixture
def f_tuple():
    return type_i_tuple()


@pytest.fixture
def r2_tuple():
    return type_ii_tuple()


@pytest.fixture
def r3_tuple():
    return type_iii_tuple()


def random_triangular_algebra(rng, d, g):
    """Random upper-triangular generators, closed to an independent algebra tuple."""
    g = min(g, d * (d + 1) // 2)  # upper-triangular space dimension cap
    data = np.triu(complex_gaussian(rng, g, d, d))
    return algebra_closure(MatrixTuple(data)).extended


def corpus_algebras(seed=1234):
    """Algebra-spanning tuples used across map and transfer tests."""
    rng = np.random.default_rng(seed)
    tuples = [
        type_i_tuple(),
        type_ii_tuple(),
        type_iii_tuple(),
        type_iv_tuple(),
        random_triangular_algebra(rng, 3, 2),
        random_triangular_algebra(rng, 4, 3),
    ]
    return tuples
