"""Shared fixtures: small algebras, semigroups, and seeded random generators."""
import random
from fractions import Fraction

import pytest

from lyfam import linalg as la
from lyfam.ly import LYAlgebra, check_jacobi, check_leibniz, ly_from_lie, zero_ly
from lyfam.semigroup import FiniteCommutativeSemigroup, trivial_semigroup


def skew_binary(n, pairs):
    """Binary tensor from entries (i, j, vector) with i < j; mirror filled."""
    b = [[la.zero_vec(n) for _ in range(n)] for _ in range(n)]
    for i, j, vec in pairs:
        b[i][j] = list(vec)
        b[j][i] = [-x for x in vec]
    return b


def make_a1():
    return ly_from_lie(skew_binary(2, [(0, 1, [1, 0])]))


def make_a2():
    return ly_from_lie(skew_binary(3, [(0, 1, [0, 2, 0]),
                                       (0, 2, [0, 0, -2]),
                                       (1, 2, [1, 0, 0])]))


@pytest.fixture(scope="session")
def s1():
    return trivial_semigroup()


@pytest.fixture(scope="session")
def s2():
    return FiniteCommutativeSemigroup(2, [[0, 1], [1, 1]], unit=0)


@pytest.fixture(scope="session")
def a0():
    return zero_ly(2)


@pytest.fixture(scope="session")
def a1():
    return make_a1()


@pytest.fixture(scope="session")
def a2():
    return make_a2()


@pytest.fixture(scope="session")
def algebras(a0, a1, a2):
    return [a0, a1, a2]


@pytest.fixture(scope="session")
def semigroups(s1, s2):
    return [s1, s2]


# ---------------------------------------------------------------------------
# seeded random generation

def random_invertible(rng, n, steps=6):
    """Random invertible rational matrix, built from elementary operations."""
    m = la.identity(n)
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        op = rng.randrange(3)
        if op == 0 and i != j:
            c = Fraction(rng.randint(-2, 2))
            for k in range(n):
                m[i][k] += c * m[j][k]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return m


def _inverse(m):
    n = len(m)
    cols = [la.solve(m, [1 if r == c else 0 for r in range(n)])
            for c in range(n)]
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def transport_bilinear(prod, p):
    """Conjugate a bilinear product by the basis change x -> p x."""
    n = len(prod)
    pinv = _inverse(p)
    cols = [[p[r][i] for r in range(n)] for i in range(n)]

    def mult(x, y):
        out = la.zero_vec(n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    out = la.vec_add(out, la.vec_scale(xi * yj, prod[i][j]))
        return out

    return [[la.mat_vec(pinv, mult(cols[i], cols[j])) for j in range(n)]
            for i in range(n)]


LIE_CATALOG = [
    (1, []),
    (2, []),
    (2, [(0, 1, [0, 1])]),
    (3, [(0, 1, [0, 0, 1])]),                      # Heisenberg
    (3, [(0, 1, [0, 1, 0]), (0, 2, [0, 0, 1])]),   # solvable
    (3, [(0, 1, [0, 2, 0]), (0, 2, [0, 0, -2]), (1, 2, [1, 0, 0])]),
    (4, [(0, 1, [0, 0, 1, 0]), (0, 2, [0, 0, 0, 1])]),
    (4, [(0, 1, [0, 1, 0, 0])]),
]


def random_lie_binary(rng, max_dim=4):
    """Random rational Lie bracket of dim <= max_dim; exact Jacobi."""
    n, pairs = rng.choice([c for c in LIE_CATALOG if c[0] <= max_dim])
    prod = skew_binary(n, pairs)
    out = transport_bilinear(prod, random_invertible(rng, n))
    assert check_jacobi(out).ok
    return out


def random_leibniz_star(rng, max_dim=3):
    """Random rational left-Leibniz product of dim <= max_dim."""
    n = rng.randint(1, max_dim)
    star = [[la.zero_vec(n) for _ in range(n)] for _ in range(n)]
    if n >= 2:
        # products of the first n-1 generators land in the last coordinate,
        # which multiplies to zero on both sides
        for i in range(n - 1):
            for j in range(n - 1):
                star[i][j][n - 1] = Fraction(rng.randint(-2, 2))
    out = transport_bilinear(star, random_invertible(rng, n))
    assert check_leibniz(out).ok
    return out


def random_vec(rng, n, lo=-2, hi=2):
    return [Fraction(rng.randint(lo, hi)) for _ in range(n)]


@pytest.fixture
def rng():
    return random.Random(20260825)
