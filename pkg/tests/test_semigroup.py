import pytest

from lyfam.errors import UnitRequiredError
from lyfam.semigroup import (FiniteCommutativeSemigroup, product, product_of,
                             trivial_semigroup, validate_semigroup)


def test_trivial_semigroup(s1):
    assert s1.order == 1
    assert validate_semigroup(s1).ok
    assert s1.unit == 0


def test_order_two_with_absorber(s2):
    assert validate_semigroup(s2).ok
    assert product(s2, 0, 1) == 1
    assert product(s2, 1, 1) == 1
    assert product_of(s2, (0, 1, 0)) == 1


def test_non_commutative_table_rejected():
    s = FiniteCommutativeSemigroup(2, [[0, 1], [0, 1]], unit=None)
    rep = validate_semigroup(s)
    assert not rep.ok
    assert "SG-comm" in rep.laws()


def test_non_associative_table_rejected():
    s = FiniteCommutativeSemigroup(2, [[1, 0], [0, 0]], unit=None)
    rep = validate_semigroup(s)
    assert not rep.ok
    assert "SG-assoc" in rep.laws()


def test_wrong_unit_rejected():
    s = FiniteCommutativeSemigroup(2, [[0, 1], [1, 1]], unit=1)
    assert not validate_semigroup(s).ok


def test_require_unit():
    s = FiniteCommutativeSemigroup(1, [[0]], unit=None)
    with pytest.raises(UnitRequiredError):
        s.require_unit()
    assert trivial_semigroup().require_unit() == 0
