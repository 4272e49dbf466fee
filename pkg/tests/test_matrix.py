import random

import pytest

from taftknot.matrix import Matrix, SingularMatrixError
from taftknot.scalars import LaurentScalar

ONE = LaurentScalar.from_int(1)
ZERO = LaurentScalar()


def _random_unimodular(rng, n):
    m = Matrix.identity(n, ONE)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        e = Matrix.identity(n, ONE)
        e.data[(i, j)] = LaurentScalar.monomial(rng.randint(-4, 4), rng.choice((1, -1, 2)))
        m = e @ m
    diag = Matrix(n, n, {(k, k): LaurentScalar.monomial(rng.randint(-3, 3), rng.choice((1, -1))) for k in range(n)}, ZERO)
    return diag @ m


@pytest.mark.parametrize("seed", range(5))
def test_exact_inverse(seed):
    rng = random.Random(seed)
    a = _random_unimodular(rng, 5)
    inv = a.inverse(lambda x, y: x.divexact(y))
    assert (a @ inv).is_identity()
    assert (inv @ a).is_identity()


def test_singular():
    a = Matrix.from_rows([[ONE, ONE], [ONE, ONE]], ZERO)
    with pytest.raises(SingularMatrixError):
        a.inverse(lambda x, y: x.divexact(y))


def test_kron_and_trace():
    a = Matrix.from_rows([[1, 2], [3, 4]], 0)
    b = Matrix.from_rows([[0, 1], [1, 0]], 0)
    k = a.kron(b)
    assert k.shape == (4, 4)
    assert k[0, 1] == 1 and k[3, 2] == 4 and k[1, 1] == 0
    assert k.trace() == a.trace() * b.trace()
    assert (a @ Matrix.identity(2, 1)) == a
    assert a.transpose()[0, 1] == 3


def test_blocks():
    m = Matrix(4, 4, {(0, 0): 1, (1, 2): 1, (2, 1): 1, (3, 3): 1}, 0)
    groups = sorted((sorted(rows), sorted(cols)) for rows, cols in m.blocks())
    assert groups == [([0], [0]), ([1], [2]), ([2], [1]), ([3], [3])]
    coupled = Matrix(3, 3, {(0, 0): 1, (0, 1): 1, (1, 1): 1, (2, 2): 1}, 0)
    assert sorted(sorted(rows) for rows, _ in coupled.blocks()) == [[0, 1], [2]]
