from fractions import Fraction

import pytest

from lyfam import linalg as la
from lyfam.errors import ContainmentError


def test_rank_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert la.rank(m) == 2
    ns = la.nullspace_basis(m)
    assert len(ns) == 1
    for row in m:
        assert sum(a * b for a, b in zip(row, ns[0])) == 0


def test_solve_exact_rationals():
    m = [[Fraction(1, 2), 1], [0, Fraction(1, 3)]]
    b = [1, 1]
    x = la.solve(m, b)
    assert x is not None
    assert [sum(a * v for a, v in zip(row, x)) for row in m] == [1, 1]
    assert la.solve([[1, 0], [1, 0]], [0, 1]) is None


def test_quotient_dim_and_representatives():
    z = [[1, 0, 0], [0, 1, 0]]
    b = [[1, 1, 0]]
    assert la.quotient_dim(z, b) == 1
    reps = la.quotient_representatives(z, b)
    assert len(reps) == 1


def test_quotient_requires_containment():
    with pytest.raises(ContainmentError):
        la.quotient_dim([[1, 0]], [[0, 1]])


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    assert la.mat_vec(a, [1, 0]) == [1, 3]
    assert la.mat_mul(a, la.identity(2)) == a
    assert la.mat_sub(a, a) == la.zeros(2, 2)
    assert la.in_span([[1, 0], [0, 1]], [0, 1], [5, -7])
    assert not la.in_span([[1, 0]], [0], [0, 1])
