import pytest

from lyfam import linalg as la
from lyfam.errors import BudgetExceededError, UnitRequiredError
from lyfam.ly import zero_cocycle, zero_ly, zero_representation
from lyfam.nsfamily import ns_from_twisted_rb
from lyfam.omega import (check_omega_ly_axioms, check_omega_representation,
                         cochain_full_coords, omega_ly_from_ns_family)
from lyfam.cohomology import (DeformationDirection, DegreeZeroElement,
                              RBFComplex, check_infinitesimal, cohomology_H1,
                              cohomology_H23, deformation_equivalence_witness,
                              equivalent_deformations_same_class,
                              induced_omega_ly_on_V, induced_rep_on_L,
                              partial_23, partial_deg0, partial_deg1,
                              partial_star_23, rep_d_closed_form_report,
                              rigidity_certificate)
from lyfam.rbfamily import TwistedRBContext, identity_family, zero_family
from lyfam.semigroup import FiniteCommutativeSemigroup
from conftest import random_vec


def zero_context(s, dim_l=2, dim_v=2):
    return TwistedRBContext(zero_ly(dim_l), zero_representation(dim_l, dim_v),
                            zero_cocycle(dim_l, dim_v), s,
                            zero_family(dim_l, dim_v, s))


def contexts(a0, a1, s1, s2):
    return [identity_family(A, s) for A in (a0, a1) for s in (s1, s2)]


def test_induced_structures(a0, a1, s1, s2):
    for ctx in contexts(a0, a1, s1, s2):
        O = induced_omega_ly_on_V(ctx)
        assert check_omega_ly_axioms(O).ok
        r = induced_rep_on_L(ctx, algebra=O)
        assert check_omega_representation(O, r).ok
        assert rep_d_closed_form_report(ctx, rep=r).ok


def test_induced_matches_ns_route(a1, s2):
    # the induced algebra on V agrees with the derived brackets of the
    # splitting structure
    ctx = identity_family(a1, s2)
    O1 = induced_omega_ly_on_V(ctx)
    O2 = omega_ly_from_ns_family(ns_from_twisted_rb(ctx))
    assert O1.binary == O2.binary
    assert O1.ternary == O2.ternary


def test_d1_after_d0_vanishes(a0, a1, s1, s2):
    for ctx in contexts(a0, a1, s1, s2):
        cx = RBFComplex(ctx)
        E = [ctx.algebra.basis(i) for i in range(ctx.dimL)]
        for a in range(ctx.dimL):
            for b in range(a + 1, ctx.dimL):
                c = partial_deg1(cx, partial_deg0(
                    cx, DegreeZeroElement([(E[a], E[b])])))
                assert not any(cochain_full_coords(c))


def test_d23_and_dstar_after_d1_vanish(a1, s1, s2):
    for s in (s1, s2):
        cx = RBFComplex(identity_family(a1, s))
        b1 = cx.skew_basis_at(1)
        for i in range(b1.size):
            img = partial_deg1(cx, b1.embed(i))
            assert not any(cochain_full_coords(partial_23(cx, img)))
            assert not any(cochain_full_coords(partial_star_23(cx, img)))


def test_deg0_requires_unit(a1):
    s = FiniteCommutativeSemigroup(1, [[0]], unit=None)
    cx = RBFComplex(identity_family(a1, s))
    with pytest.raises(UnitRequiredError):
        partial_deg0(cx, DegreeZeroElement([(a1.basis(0), a1.basis(1))]))


def test_zero_context_h1(s1, s2):
    assert cohomology_H1(RBFComplex(zero_context(s1)))[0] == 4
    assert cohomology_H1(RBFComplex(zero_context(s2)))[0] == 8


def test_zero_context_h23(s1, s2):
    # the dual coboundary's bare cyclic term cuts the full space once the
    # joint index dimension admits totally skew 3-forms: 60 - 8 = 52
    assert cohomology_H23(RBFComplex(zero_context(s1))) == 6
    assert cohomology_H23(RBFComplex(zero_context(s2))) == 52


def test_identity_family_cohomology_regression(a1, s1, s2):
    cx = RBFComplex(identity_family(a1, s1))
    dim, reps = cohomology_H1(cx)
    assert dim == 1 and len(reps) == 1
    assert not any(cochain_full_coords(partial_deg1(cx, reps[0])))
    assert cohomology_H23(cx) == 1
    assert cohomology_H1(RBFComplex(identity_family(a1, s2)))[0] == 2


def test_rigidity_matches_h1(a0, a1, s1, s2):
    for ctx in contexts(a0, a1, s1, s2) + [zero_context(s1)]:
        cx = RBFComplex(ctx)
        assert rigidity_certificate(cx) == (cohomology_H1(cx)[0] == 0)
    assert not rigidity_certificate(RBFComplex(zero_context(s1)))


def test_infinitesimal_dual_route(a1, s2, rng):
    cx = RBFComplex(identity_family(a1, s2))
    ctx = cx.context
    for _ in range(25):
        fam = [[random_vec(rng, ctx.dimV, -1, 1) for _ in range(ctx.dimL)]
               for _ in range(s2.order)]
        check_infinitesimal(cx, DeformationDirection(fam))  # no disagreement


def test_boundary_round_trip(a1, s2, rng):
    cx = RBFComplex(identity_family(a1, s2))
    ctx = cx.context
    zero = DeformationDirection(
        [la.zeros(ctx.dimL, ctx.dimV) for _ in range(s2.order)])
    for _ in range(5):
        e = DegreeZeroElement([(random_vec(rng, ctx.dimL),
                                random_vec(rng, ctx.dimL))])
        f = partial_deg0(cx, e)
        d = DeformationDirection([[list(r) for r in f.even[a]]
                                  for a in range(s2.order)])
        assert check_infinitesimal(cx, d)
        w = deformation_equivalence_witness(cx, d, zero)
        assert w is not None
        assert equivalent_deformations_same_class(cx, d, zero, w)


def test_noncoboundary_cocycle_has_no_witness(s1):
    # the zero context has H1 > 0, so some cocycle is not a boundary
    cx = RBFComplex(zero_context(s1))
    dim, reps = cohomology_H1(cx)
    assert dim > 0
    ctx = cx.context
    rep = reps[0]
    d = DeformationDirection([[list(r) for r in rep.even[a]]
                              for a in range(ctx.semigroup.order)])
    zero = DeformationDirection(
        [la.zeros(ctx.dimL, ctx.dimV) for _ in range(ctx.semigroup.order)])
    assert deformation_equivalence_witness(cx, d, zero) is None


def test_h23_budget_gate(a1, s1):
    cx = RBFComplex(identity_family(a1, s1))
    with pytest.raises(BudgetExceededError):
        cohomology_H23(cx, budget=2)
