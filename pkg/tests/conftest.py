import random

import pytest

from qtspectral.galois import make_prime_field
from qtspectral.linalg import Matrix
from qtspectral.polyring import Polynomial
from qtspectral.qtstruct import QTCodeSpec


@pytest.fixture(scope="session")
def F2():
    return make_prime_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_prime_field(3)


@pytest.fixture(scope="session")
def example1(F3):
    """[8,2,6] ternary code, m=4, ell=2, lambda=2, one generator row."""
    P = lambda v: Polynomial.from_ints(F3, v)
    return QTCodeSpec(q_field=F3, m=4, ell=2, lam=F3.scalar(2),
                      generators=((P([1, 2, 0, 2]), P([2, 1, 0, 1])),))


@pytest.fixture(scope="session")
def example2(F3):
    """[16,8,3] ternary code, m=4, ell=4, lambda=2, two generator rows."""
    P = lambda v: Polynomial.from_ints(F3, v)
    row1 = (P([1, 0, 1, 1]), P([1, 1, 2, 0]), P([0, 1, 2, 1]), P([2, 1, 2, 2]))
    row2 = (P([1, 2, 0, 1]), P([2, 1, 1, 2]), P([1, 1, 1, 0]), P([0, 2, 2, 2]))
    return QTCodeSpec(q_field=F3, m=4, ell=4, lam=F3.scalar(2),
                      generators=(row1, row2))


def random_matrix(field, nrows, ncols, rng: random.Random) -> Matrix:
    p = field.p
    return Matrix(field, [[field.scalar(rng.randrange(p)) for _ in range(ncols)]
                          for _ in range(nrows)])
