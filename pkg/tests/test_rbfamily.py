import random
from fractions import Fraction

import pytest

from lyfam import linalg as la
from lyfam.errors import PreconditionError
from lyfam.ly import (Cocycle23, adjoint_representation, gamma_ad,
                      zero_cocycle, zero_ly, zero_representation)
from lyfam.rbfamily import (TwistedRBContext, bar_operator,
                            check_graph_subalgebra_family, check_morphism,
                            check_nijenhuis_family, check_reynolds_family,
                            check_twisted_rb_family, identity_family,
                            nijenhuis_induced_context, reynolds_as_twisted,
                            semidirect_product, zero_family)
from conftest import random_vec


def zero_context(s, dim_l=2, dim_v=2):
    return TwistedRBContext(zero_ly(dim_l), zero_representation(dim_l, dim_v),
                            zero_cocycle(dim_l, dim_v), s,
                            zero_family(dim_l, dim_v, s))


def test_zero_context_is_twisted_family(s1, s2):
    for s in (s1, s2):
        ctx = zero_context(s)
        assert ctx.validate().ok
        assert check_twisted_rb_family(ctx).ok


def test_identity_family_all_six(algebras, semigroups):
    for A in algebras:
        for s in semigroups:
            ctx = identity_family(A, s)
            assert ctx.validate().ok
            assert check_twisted_rb_family(ctx).ok


def test_identity_family_shape(a1, s2):
    ctx = identity_family(a1, s2)
    assert ctx.dimL == a1.dim * s2.order
    assert ctx.dimV == a1.dim
    # T_alpha embeds V into the alpha-indexed leg
    u = [1, 0]
    assert any(ctx.T(0, u)) and any(ctx.T(1, u))
    assert ctx.T(0, u) != ctx.T(1, u)


def test_corrupted_family_detected(a1, s2):
    ctx = identity_family(a1, s2)
    ctx.family[0][0][0] += 1
    assert not check_twisted_rb_family(ctx).ok


def test_bar_operator_all_six(algebras, semigroups):
    for A in algebras:
        for s in semigroups:
            bar = bar_operator(identity_family(A, s))
            assert bar.semigroup.order == 1
            assert check_twisted_rb_family(bar).ok


def test_bar_operator_rejects_invalid_input(a1, s2):
    ctx = identity_family(a1, s2)
    ctx.family[0][0][0] += 1
    with pytest.raises(PreconditionError):
        bar_operator(ctx)


def test_graph_matches_family_check(algebras, semigroups, rng):
    hits = 0
    for t in range(40):
        A = algebras[rng.randrange(len(algebras))]
        s = semigroups[rng.randrange(len(semigroups))]
        ctx = identity_family(A, s)
        if t % 2:
            al = rng.randrange(s.order)
            r = rng.randrange(ctx.dimL)
            c = rng.randrange(ctx.dimV)
            ctx.family[al][r][c] += Fraction(rng.randint(1, 2))
        ok_eqs = check_twisted_rb_family(ctx).ok
        assert check_graph_subalgebra_family(ctx) == ok_eqs
        hits += 1
    assert hits == 40


def test_morphism_identity_is_morphism(a1, s2):
    ctx = identity_family(a1, s2)
    eta = la.identity(ctx.dimL)
    zeta = la.identity(ctx.dimV)
    assert check_morphism(ctx, ctx, eta, zeta).ok


def test_morphism_detects_mismatch(a1, a2, s2):
    c1 = identity_family(a1, s2)
    eta = la.identity(c1.dimL)
    zeta = la.mat_scale(2, la.identity(c1.dimV))
    assert not check_morphism(c1, c1, eta, zeta).ok


def test_reynolds_from_zero_operator(a1, s1):
    T = [la.zeros(a1.dim, a1.dim) for _ in range(s1.order)]
    assert check_reynolds_family(a1, s1, T).ok
    ctx = reynolds_as_twisted(a1, s1, T)
    assert check_twisted_rb_family(ctx).ok


def test_nijenhuis_zero_and_identity(a1, s2):
    zero = [la.zeros(a1.dim, a1.dim) for _ in range(s2.order)]
    assert check_nijenhuis_family(a1, s2, zero).ok
    ctx = nijenhuis_induced_context(a1, s2, zero)
    assert check_twisted_rb_family(ctx).ok
    ident = [la.identity(a1.dim) for _ in range(s2.order)]
    assert check_nijenhuis_family(a1, s2, ident).ok
    ctx = nijenhuis_induced_context(a1, s2, ident)
    assert check_twisted_rb_family(ctx).ok


def test_nijenhuis_scaled_identity(a2, s2):
    fam = [la.mat_scale(Fraction(al + 1), la.identity(a2.dim))
           for al in range(s2.order)]
    if check_nijenhuis_family(a2, s2, fam).ok:
        ctx = nijenhuis_induced_context(a2, s2, fam)
        assert check_twisted_rb_family(ctx).ok


def test_semidirect_product(a2):
    r = adjoint_representation(a2)
    c = gamma_ad(a2)
    B = semidirect_product(a2, r, c)
    assert B.dim == 2 * a2.dim
    from lyfam.ly import check_ly_axioms
    assert check_ly_axioms(B).ok
