"""Finite commutative semigroups given by multiplication tables.

Elements are dense indices 0..order-1; the optional unit is an index.
These semigroups index every family of operators in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import MalformedInputError, PreconditionError, UnitRequiredError
from .report import Report


@dataclass(frozen=True)
class FiniteCommutativeSemigroup:
    order: int
    table: tuple  # tuple of tuples, table[i][j] = index of i*j
    unit: int | None = None
    names: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        if self.order < 1:
            raise MalformedInputError("semigroup order must be >= 1")
        if len(self.table) != self.order or any(len(r) != self.order for r in self.table):
            raise MalformedInputError("table shape does not match order")

    @property
    def elements(self):
        return range(self.order)

    def require_unit(self) -> int:
        if self.unit is None:
            raise UnitRequiredError("this operation needs a semigroup with a declared unit")
        return self.unit


def validate_semigroup(s: FiniteCommutativeSemigroup) -> Report:
    """Check commutativity, associativity and (when declared) the unit law."""
    m = s.order
    for i in range(m):
        for j in range(m):
            v = s.table[i][j]
            if not (0 <= v < m):
                raise MalformedInputError(
                    "table[%d][%d] = %r out of range 0..%d" % (i, j, v, m - 1))
    if s.unit is not None and not (0 <= s.unit < m):
        raise MalformedInputError("unit index %r out of range" % (s.unit,))
    rep = Report()
    for i in range(m):
        for j in range(i + 1, m):
            if s.table[i][j] != s.table[j][i]:
                rep.add("SG-comm", (i, j), (s.table[i][j] - s.table[j][i],))
    for i in range(m):
        for j in range(m):
            for k in range(m):
                lhs = s.table[s.table[i][j]][k]
                rhs = s.table[i][s.table[j][k]]
                if lhs != rhs:
                    rep.add("SG-assoc", (i, j, k), (lhs - rhs,))
    if s.unit is not None:
        u = s.unit
        for i in range(m):
            if s.table[u][i] != i:
                rep.add("SG-unit", (u, i), (s.table[u][i] - i,))
    return rep


def product(s: FiniteCommutativeSemigroup, i: int, j: int) -> int:
    if not (0 <= i < s.order and 0 <= j < s.order):
        raise MalformedInputError("element index out of range: (%r, %r)" % (i, j))
    return s.table[i][j]


def product_of(s: FiniteCommutativeSemigroup, indices) -> int:
    indices = list(indices)
    if not indices:
        raise PreconditionError("product_of requires a nonempty list")
    return reduce(lambda a, b: product(s, a, b), indices)


def trivial_semigroup() -> FiniteCommutativeSemigroup:
    return FiniteCommutativeSemigroup(order=1, table=((0,),), unit=0)
