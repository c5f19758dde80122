"""Acceptance criteria, one pass/fail line per criterion.

Every check is exact: residuals are rational and compared to zero.
"""
import random
from fractions import Fraction

from lyfam import linalg as la
from lyfam.ly import (check_ly_axioms, ly_from_leibniz, ly_from_lie,
                      zero_cocycle, zero_ly, zero_representation)
from lyfam.nsfamily import (check_ns_axioms, check_ns_family_axioms,
                            ns_from_twisted_rb, ns_tensor_from_rb_coincidence,
                            ns_tensor_semigroup)
from lyfam.omega import (check_omega_ly_axioms, check_omega_representation,
                         cochain_full_coords, delta_omega,
                         omega_ly_from_ns_family)
from lyfam.cohomology import (DeformationDirection, DegreeZeroElement,
                              RBFComplex, check_infinitesimal, cohomology_H1,
                              cohomology_H23, deformation_equivalence_witness,
                              equivalent_deformations_same_class, partial_23,
                              partial_deg0, partial_deg1, rigidity_certificate)
from lyfam.rbfamily import (TwistedRBContext, bar_operator,
                            check_graph_subalgebra_family,
                            check_twisted_rb_family, identity_family,
                            zero_family)
from lyfam.semigroup import FiniteCommutativeSemigroup, trivial_semigroup
from conftest import (make_a1, make_a2, random_leibniz_star, random_lie_binary,
                      random_vec)

S1 = trivial_semigroup()
S2 = FiniteCommutativeSemigroup(2, [[0, 1], [1, 1]], unit=0)
ALGEBRAS = [zero_ly(2), make_a1(), make_a2()]
SEMIGROUPS = [S1, S2]


def conclude(num, label, ok, detail=""):
    verdict = "PASS" if ok else "FAIL"
    line = "CRITERION %2d [%s]: %s" % (num, label, verdict)
    if detail:
        line += " (%s)" % detail
    print(line)
    assert ok, line


def all_contexts():
    return [identity_family(A, s) for A in ALGEBRAS for s in SEMIGROUPS]


def zero_context(s):
    return TwistedRBContext(zero_ly(2), zero_representation(2, 2),
                            zero_cocycle(2, 2), s, zero_family(2, 2, s))


def test_criterion_01_axiom_suite_soundness():
    rng = random.Random(101)
    lie_ok = sum(check_ly_axioms(ly_from_lie(random_lie_binary(rng))).ok
                 for _ in range(50))
    lei_ok = sum(check_ly_axioms(ly_from_leibniz(random_leibniz_star(rng))).ok
                 for _ in range(50))
    conclude(1, "axiom suites on seeded algebras",
             lie_ok == 50 and lei_ok == 50,
             "lie %d/50, leibniz %d/50" % (lie_ok, lei_ok))


def test_criterion_02_identity_family_reproduction():
    ok = sum(check_twisted_rb_family(ctx).ok for ctx in all_contexts())
    conclude(2, "identity family satisfies twisted equations", ok == 6,
             "%d/6" % ok)


def test_criterion_03_bar_operator():
    ok = sum(check_twisted_rb_family(bar_operator(ctx)).ok
             for ctx in all_contexts())
    conclude(3, "collapsed single-operator form", ok == 6, "%d/6" % ok)


def test_criterion_04_graph_equivalence():
    rng = random.Random(104)
    agree = 0
    for t in range(100):
        A = ALGEBRAS[rng.randrange(3)]
        s = SEMIGROUPS[rng.randrange(2)]
        ctx = identity_family(A, s)
        if t % 2:
            al = rng.randrange(s.order)
            ctx.family[al][rng.randrange(ctx.dimL)][rng.randrange(ctx.dimV)] \
                += Fraction(rng.randint(1, 3))
        agree += (check_graph_subalgebra_family(ctx)
                  == check_twisted_rb_family(ctx).ok)
    conclude(4, "graph criterion matches the defining equations",
             agree == 100, "%d/100" % agree)


def test_criterion_05_splitting_chain():
    ok = True
    detail = []
    for ctx in all_contexts():
        N = ns_from_twisted_rb(ctx)
        a = check_ns_family_axioms(N).ok
        b = check_ns_axioms(ns_tensor_semigroup(N)).ok
        O = omega_ly_from_ns_family(N)
        c = check_omega_ly_axioms(O).ok
        cx = RBFComplex(ctx, check=False)
        d = check_omega_representation(cx.induced_algebra, cx.induced_rep).ok
        ok = ok and a and b and c and d
        detail.append("".join("+-"[not v] for v in (a, b, c, d)))
    conclude(5, "splitting family / tensor / indexed algebra / induced rep",
             ok, " ".join(detail))


def test_criterion_06_tensor_coincidence():
    ok = sum(ns_tensor_from_rb_coincidence(ctx) for ctx in all_contexts())
    conclude(6, "collapsed tensor coincides with the direct route", ok == 6,
             "%d/6" % ok)


def test_criterion_07_complex_identities():
    ok = True
    for ctx in all_contexts():
        cx = RBFComplex(ctx, check=False)
        E = [ctx.algebra.basis(i) for i in range(ctx.dimL)]
        for a in range(ctx.dimL):
            for b in range(a + 1, ctx.dimL):
                c = partial_deg1(cx, partial_deg0(
                    cx, DegreeZeroElement([(E[a], E[b])])))
                ok = ok and not any(cochain_full_coords(c))
        b1 = cx.skew_basis_at(1)
        for i in range(b1.size):
            c = partial_23(cx, partial_deg1(cx, b1.embed(i)))
            ok = ok and not any(cochain_full_coords(c))
    conclude(7, "coboundary compositions vanish", ok)


def test_criterion_08_generic_coboundary_squares_to_zero():
    ok = True
    for ctx in all_contexts():
        cx = RBFComplex(ctx, check=False)
        O, r = cx.induced_algebra, cx.induced_rep
        b1 = cx.skew_basis_at(1)
        for i in range(b1.size):
            d2 = delta_omega(O, r, delta_omega(O, r, b1.embed(i), None), None)
            ok = ok and not any(cochain_full_coords(d2))
    conclude(8, "square of the indexed coboundary vanishes through (4,5)", ok)


def test_criterion_09_cohomology_oracles():
    got = []
    for s in SEMIGROUPS:
        cx = RBFComplex(zero_context(s))
        got.append((cohomology_H1(cx)[0], cohomology_H23(cx)))
    expect = [(4, 6), (8, 60)]
    conclude(9, "zero-context cohomology dimensions", got == expect,
             "got %s, expected %s" % (got, expect))


def test_criterion_10_deformation_round_trip():
    ctx = identity_family(make_a1(), S2)
    cx = RBFComplex(ctx)
    M, nL, nV = S2.order, ctx.dimL, ctx.dimV
    zero = DeformationDirection([la.zeros(nL, nV) for _ in range(M)])
    rng = random.Random(110)
    boundary_ok = 0
    for _ in range(20):
        e = DegreeZeroElement([(random_vec(rng, nL), random_vec(rng, nL))])
        f = partial_deg0(cx, e)
        d = DeformationDirection([[list(r) for r in f.even[a]]
                                  for a in range(M)])
        if check_infinitesimal(cx, d):
            w = deformation_equivalence_witness(cx, d, zero)
            if w is not None and equivalent_deformations_same_class(
                    cx, d, zero, w):
                boundary_ok += 1
    dual_ok = 0
    for _ in range(100):
        d = DeformationDirection([[random_vec(rng, nV, -1, 1)
                                   for _ in range(nL)] for _ in range(M)])
        check_infinitesimal(cx, d)  # raises on route disagreement
        dual_ok += 1
    conclude(10, "boundary directions round-trip; dual routes agree",
             boundary_ok == 20 and dual_ok == 100,
             "round-trip %d/20, agreement %d/100" % (boundary_ok, dual_ok))


def test_criterion_11_rigidity_contract():
    ok = True
    for ctx in all_contexts() + [zero_context(S1), zero_context(S2)]:
        cx = RBFComplex(ctx)
        ok = ok and (rigidity_certificate(cx) == (cohomology_H1(cx)[0] == 0))
    nonrigid = not rigidity_certificate(RBFComplex(zero_context(S1)))
    conclude(11, "rigidity certificate tracks the first cohomology",
             ok and nonrigid)
