"""Semigroup-indexed Lie-Yamaguti structures and their cohomology operators.

An indexed algebra carries a family of binary brackets [.,.]_{a,b} and ternary
brackets {.,.,.}_{a,b,c} labelled by semigroup elements.  This module provides
the axiom checkers, indexed representations, the cochain spaces C^1 and
C^(2n,2n+1), a coordinate basis of their skew subspaces, and the coboundary
operators delta / delta* together with cohomology dimension computations.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .errors import BudgetExceededError, PreconditionError
from .linalg import (mat_lincomb, mat_mul, mat_sub, mat_vec, nullspace_basis,
                     quotient_dim, vec_add, vec_scale, vec_sub, zero_vec,
                     zeros)
from .ly import split_joint
from .report import Report
from .semigroup import FiniteCommutativeSemigroup, product, product_of

DEFAULT_BUDGET = 100000


def ensure_budget(ncoords: int, budget: int | None = None) -> None:
    """Refuse computations whose coordinate count exceeds the budget."""
    if budget is None:
        budget = int(os.environ.get("LYFAM_BUDGET", DEFAULT_BUDGET))
    if ncoords > budget:
        raise BudgetExceededError(
            "computation needs %d coordinates, budget is %d" % (ncoords, budget))


# ---------------------------------------------------------------------------
# indexed algebras

@dataclass
class OmegaLYAlgebra:
    """Family of brackets indexed by a commutative semigroup.

    binary[a][b][i][j] is the vector [e_i, e_j]_{a,b};
    ternary[a][b][c][i][j][k] is the vector {e_i, e_j, e_k}_{a,b,c}.
    """
    dim: int
    semigroup: FiniteCommutativeSemigroup
    binary: list
    ternary: list

    def basis(self, i):
        v = zero_vec(self.dim)
        v[i] = 1
        return v

    def br(self, a, b, x, y):
        """[x, y]_{a,b} for arbitrary vectors x, y."""
        out = zero_vec(self.dim)
        tab = self.binary[a][b]
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = tab[i]
            for j, yj in enumerate(y):
                if yj:
                    out = vec_add(out, vec_scale(xi * yj, row[j]))
        return out

    def tr(self, a, b, c, x, y, z):
        """{x, y, z}_{a,b,c} for arbitrary vectors."""
        out = zero_vec(self.dim)
        tab = self.ternary[a][b][c]
        for i, xi in enumerate(x):
            if not xi:
                continue
            ti = tab[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                tij = ti[j]
                for k, zk in enumerate(z):
                    if zk:
                        out = vec_add(out, vec_scale(xi * yj * zk, tij[k]))
        return out

    def invariant_report(self) -> Report:
        """Skewness of both bracket families (simultaneous index swap)."""
        rep = Report()
        m, n = self.semigroup.order, self.dim
        for a in range(m):
            for b in range(m):
                for i in range(n):
                    for j in range(n):
                        r = vec_add(self.binary[a][b][i][j],
                                    self.binary[b][a][j][i])
                        rep.record("invariant:skew-binary", (a, b, i, j), tuple(r))
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    for i in range(n):
                        for j in range(n):
                            for k in range(n):
                                r = vec_add(self.ternary[a][b][c][i][j][k],
                                            self.ternary[b][a][c][j][i][k])
                                rep.record("invariant:skew-ternary",
                                           (a, b, c, i, j, k), tuple(r))
        return rep


def zero_omega_ly(dim: int, s: FiniteCommutativeSemigroup) -> OmegaLYAlgebra:
    m = s.order
    binary = [[[[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
               for _ in range(m)] for _ in range(m)]
    ternary = [[[[[[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
                  for _ in range(dim)] for _ in range(m)] for _ in range(m)]
               for _ in range(m)]
    return OmegaLYAlgebra(dim=dim, semigroup=s, binary=binary, ternary=ternary)


def check_omega_ly_axioms(O: OmegaLYAlgebra) -> Report:
    """Evaluate the four indexed algebra laws on every basis/index tuple."""
    rep = Report()
    s = O.semigroup
    n = O.dim
    M = s.order
    E = [O.basis(i) for i in range(n)]
    p2 = lambda a, b: product(s, a, b)
    p3 = lambda a, b, c: product_of(s, (a, b, c))
    for a, b, c in itertools.product(range(M), repeat=3):
        for i, j, k in itertools.product(range(n), repeat=3):
            x, y, z = E[i], E[j], E[k]
            r = O.br(p2(a, b), c, O.br(a, b, x, y), z)
            r = vec_add(r, O.br(p2(b, c), a, O.br(b, c, y, z), x))
            r = vec_add(r, O.br(p2(c, a), b, O.br(c, a, z, x), y))
            r = vec_add(r, O.ternary[a][b][c][i][j][k])
            r = vec_add(r, O.ternary[b][c][a][j][k][i])
            r = vec_add(r, O.ternary[c][a][b][k][i][j])
            rep.record("OLY-5.2", (a, b, c, i, j, k), tuple(r))
    for a, b, c, d in itertools.product(range(M), repeat=4):
        for i, j, k, l in itertools.product(range(n), repeat=4):
            x, y, z, w = E[i], E[j], E[k], E[l]
            r = O.tr(p2(a, b), c, d, O.br(a, b, x, y), z, w)
            r = vec_add(r, O.tr(p2(b, c), a, d, O.br(b, c, y, z), x, w))
            r = vec_add(r, O.tr(p2(c, a), b, d, O.br(c, a, z, x), y, w))
            rep.record("OLY-5.3", (a, b, c, d, i, j, k, l), tuple(r))
    for si, a, b, c in itertools.product(range(M), repeat=4):
        for ii, jj, kk, ll in itertools.product(range(n), repeat=4):
            aa, x, y, z = E[ii], E[jj], E[kk], E[ll]
            lhs = O.tr(si, a, p2(b, c), aa, x, O.br(b, c, y, z))
            rhs = O.br(p3(si, a, b), c, O.tr(si, a, b, aa, x, y), z)
            rhs = vec_add(rhs, O.br(b, p3(si, a, c), y, O.tr(si, a, c, aa, x, z)))
            rep.record("OLY-5.4", (si, a, b, c, ii, jj, kk, ll),
                       tuple(vec_sub(lhs, rhs)))
    for si, ta, a, b, c in itertools.product(range(M), repeat=5):
        for ii, jj, kk, ll, mm in itertools.product(range(n), repeat=5):
            aa, bb, x, y, z = E[ii], E[jj], E[kk], E[ll], E[mm]
            lhs = O.tr(si, ta, p3(a, b, c), aa, bb, O.tr(a, b, c, x, y, z))
            rhs = O.tr(p3(si, ta, a), b, c, O.tr(si, ta, a, aa, bb, x), y, z)
            rhs = vec_add(rhs, O.tr(a, p3(si, ta, b), c, x,
                                    O.tr(si, ta, b, aa, bb, y), z))
            rhs = vec_add(rhs, O.tr(a, b, p3(si, ta, c), x, y,
                                    O.tr(si, ta, c, aa, bb, z)))
            rep.record("OLY-5.5", (si, ta, a, b, c, ii, jj, kk, ll, mm),
                       tuple(vec_sub(lhs, rhs)))
    return rep


def omega_ly_from_omega_lie(dim: int, s: FiniteCommutativeSemigroup,
                            binary: list) -> OmegaLYAlgebra:
    """Indexed Lie bracket family with the induced ternary
    {x,y,z}_{a,b,c} = [[x,y]_{a,b}, z]_{ab,c}."""
    O = zero_omega_ly(dim, s)
    O.binary = binary
    bad = O.invariant_report()
    if not bad.ok:
        raise PreconditionError("binary tensor is not skew: %s"
                                % (bad.violations[0],))
    M, n = s.order, dim
    E = [O.basis(i) for i in range(n)]
    rep = Report()
    for a, b, c in itertools.product(range(M), repeat=3):
        for i, j, k in itertools.product(range(n), repeat=3):
            r = O.br(product(s, a, b), c, O.br(a, b, E[i], E[j]), E[k])
            r = vec_add(r, O.br(product(s, b, c), a, O.br(b, c, E[j], E[k]), E[i]))
            r = vec_add(r, O.br(product(s, c, a), b, O.br(c, a, E[k], E[i]), E[j]))
            rep.record("OLIE-jacobi", (a, b, c, i, j, k), tuple(r))
    if not rep.ok:
        raise PreconditionError("indexed Jacobi identity fails: %s"
                                % (rep.violations[0],))
    for a, b, c in itertools.product(range(M), repeat=3):
        for i, j, k in itertools.product(range(n), repeat=3):
            O.ternary[a][b][c][i][j][k] = O.br(
                product(s, a, b), c, O.binary[a][b][i][j], E[k])
    return O


def omega_ly_from_ns_family(N) -> OmegaLYAlgebra:
    """Indexed algebra on the derived star-binary and double brackets."""
    from .nsfamily import check_ns_family_axioms, derived_brackets
    bad = check_ns_family_axioms(N)
    if not bad.ok:
        raise PreconditionError("input fails the splitting-family axioms: %s"
                                % (bad.violations[0],))
    star2, _, dbl = derived_brackets(N)
    return OmegaLYAlgebra(dim=N.dim, semigroup=N.semigroup,
                          binary=star2, ternary=dbl)


def omega_ly_from_reynolds(A, s, family) -> OmegaLYAlgebra:
    """Indexed algebra induced by a Reynolds family on the algebra itself."""
    from .cohomology import induced_omega_ly_on_V
    from .rbfamily import check_reynolds_family, reynolds_as_twisted
    bad = check_reynolds_family(A, s, family)
    if not bad.ok:
        raise PreconditionError("input fails the Reynolds family laws: %s"
                                % (bad.violations[0],))
    return induced_omega_ly_on_V(reynolds_as_twisted(A, s, family))


# ---------------------------------------------------------------------------
# indexed representations

@dataclass
class OmegaRepresentation:
    """Representation of an indexed algebra on a module of dimension dim.

    rho[a][s][i] is the matrix of rho_{a,s}(e_i, -) acting on the module;
    theta[a][b][s][i][j] is the matrix of theta_{a,b,s}(e_i, e_j, -).
    The derived family D_{a,b,s} is computed from rho/theta and cached.
    """
    algebra: OmegaLYAlgebra
    dim: int
    rho: list
    theta: list
    _D: list | None = field(default=None, repr=False)

    def __post_init__(self):
        M = self.algebra.semigroup.order
        n = self.algebra.dim
        if len(self.rho) != M or any(len(r) != M for r in self.rho):
            raise PreconditionError("rho index shape mismatch")
        if any(len(self.rho[a][c]) != n for a in range(M) for c in range(M)):
            raise PreconditionError("rho basis shape mismatch")
        if len(self.theta) != M:
            raise PreconditionError("theta index shape mismatch")

    def d_tensor(self):
        """D_{a,b,s}(e_i, e_j, -) as matrices, via the derived-operator rule."""
        if self._D is not None:
            return self._D
        s = self.algebra.semigroup
        M, n, m = s.order, self.algebra.dim, self.dim
        D = [[[[[None for _ in range(n)] for _ in range(n)]
               for _ in range(M)] for _ in range(M)] for _ in range(M)]
        for a in range(M):
            for b in range(M):
                ab = product(s, a, b)
                for c in range(M):
                    bc = product(s, b, c)
                    ac = product(s, a, c)
                    for i in range(n):
                        for j in range(n):
                            mat = mat_sub(self.theta[b][a][c][j][i],
                                          self.theta[a][b][c][i][j])
                            coeffs = self.algebra.binary[a][b][i][j]
                            mat = mat_sub(mat, mat_lincomb(
                                coeffs, self.rho[ab][c], m, m))
                            mat_pr = mat_mul(self.rho[a][bc][i], self.rho[b][c][j])
                            mat = [vec_add(r, p) for r, p in zip(mat, mat_pr)]
                            mat_pl = mat_mul(self.rho[b][ac][j], self.rho[a][c][i])
                            mat = mat_sub(mat, mat_pl)
                            D[a][b][c][i][j] = mat
        self._D = D
        return D

    def rho_apply(self, a, c, x, u):
        """rho_{a,c}(x, u) for a vector x in the algebra, u in the module."""
        out = zero_vec(self.dim)
        mats = self.rho[a][c]
        for i, xi in enumerate(x):
            if xi:
                out = vec_add(out, vec_scale(xi, mat_vec(mats[i], u)))
        return out

    def theta_apply(self, a, b, c, x, y, u):
        out = zero_vec(self.dim)
        mats = self.theta[a][b][c]
        for i, xi in enumerate(x):
            if not xi:
                continue
            mi = mats[i]
            for j, yj in enumerate(y):
                if yj:
                    out = vec_add(out, vec_scale(xi * yj, mat_vec(mi[j], u)))
        return out

    def d_apply(self, a, b, c, x, y, u):
        out = zero_vec(self.dim)
        mats = self.d_tensor()[a][b][c]
        for i, xi in enumerate(x):
            if not xi:
                continue
            mi = mats[i]
            for j, yj in enumerate(y):
                if yj:
                    out = vec_add(out, vec_scale(xi * yj, mat_vec(mi[j], u)))
        return out


def zero_omega_representation(O: OmegaLYAlgebra, dim: int) -> OmegaRepresentation:
    M, n = O.semigroup.order, O.dim
    rho = [[[zeros(dim, dim) for _ in range(n)] for _ in range(M)]
           for _ in range(M)]
    theta = [[[[[zeros(dim, dim) for _ in range(n)] for _ in range(n)]
               for _ in range(M)] for _ in range(M)] for _ in range(M)]
    return OmegaRepresentation(algebra=O, dim=dim, rho=rho, theta=theta)


def check_omega_representation(O: OmegaLYAlgebra,
                               r: OmegaRepresentation) -> Report:
    """Evaluate the five indexed representation laws on all tuples."""
    rep = Report()
    s = O.semigroup
    M, n, m = s.order, O.dim, r.dim
    E = [O.basis(i) for i in range(n)]
    U = []
    for c in range(m):
        u = zero_vec(m)
        u[c] = 1
        U.append(u)
    p2 = lambda a, b: product(s, a, b)
    p3 = lambda a, b, c: product_of(s, (a, b, c))
    for a, b, g, si in itertools.product(range(M), repeat=4):
        for i, j, k in itertools.product(range(n), repeat=3):
            x, y, z = E[i], E[j], E[k]
            for c in range(m):
                u = U[c]
                res = r.theta_apply(p2(a, b), g, si, O.br(a, b, x, y), z, u)
                res = vec_sub(res, r.theta_apply(
                    a, g, p2(b, si), x, z, r.rho_apply(b, si, y, u)))
                res = vec_add(res, r.theta_apply(
                    b, g, p2(a, si), y, z, r.rho_apply(a, si, x, u)))
                rep.record("OREP-5.6", (a, b, g, si, i, j, k, c), tuple(res))
                res = r.d_apply(a, b, p2(g, si), x, y, r.rho_apply(g, si, z, u))
                res = vec_sub(res, r.rho_apply(
                    g, p3(a, b, si), z, r.d_apply(a, b, si, x, y, u)))
                res = vec_sub(res, r.rho_apply(
                    p3(a, b, g), si, O.tr(a, b, g, x, y, z), u))
                rep.record("OREP-5.7", (a, b, g, si, i, j, k, c), tuple(res))
                res = r.theta_apply(a, p2(b, g), si, x, O.br(b, g, y, z), u)
                res = vec_sub(res, r.rho_apply(
                    b, p3(a, g, si), y, r.theta_apply(a, g, si, x, z, u)))
                res = vec_add(res, r.rho_apply(
                    g, p3(a, b, si), z, r.theta_apply(a, b, si, x, y, u)))
                rep.record("OREP-5.8", (a, b, g, si, i, j, k, c), tuple(res))
    for ta, a, b, g, si in itertools.product(range(M), repeat=5):
        for ii, i, j, k in itertools.product(range(n), repeat=4):
            aa, x, y, z = E[ii], E[i], E[j], E[k]
            for c in range(m):
                u = U[c]
                res = r.d_apply(ta, a, p3(b, g, si), aa, x,
                                r.theta_apply(b, g, si, y, z, u))
                res = vec_sub(res, r.theta_apply(
                    b, g, p3(ta, a, si), y, z, r.d_apply(ta, a, si, aa, x, u)))
                res = vec_sub(res, r.theta_apply(
                    p3(ta, a, b), g, si, O.tr(ta, a, b, aa, x, y), z, u))
                res = vec_sub(res, r.theta_apply(
                    b, p3(ta, a, g), si, y, O.tr(ta, a, g, aa, x, z), u))
                rep.record("OREP-5.9", (ta, a, b, g, si, ii, i, j, k, c),
                           tuple(res))
                res = r.theta_apply(ta, p3(a, b, g), si, aa,
                                    O.tr(a, b, g, x, y, z), u)
                res = vec_sub(res, r.theta_apply(
                    b, g, p3(ta, a, si), y, z, r.theta_apply(ta, a, si, aa, x, u)))
                res = vec_add(res, r.theta_apply(
                    a, g, p3(ta, b, si), x, z, r.theta_apply(ta, b, si, aa, y, u)))
                res = vec_sub(res, r.d_apply(
                    a, b, p3(ta, g, si), x, y, r.theta_apply(ta, g, si, aa, z, u)))
                rep.record("OREP-5.10", (ta, a, b, g, si, ii, i, j, k, c),
                           tuple(res))
    return rep


# ---------------------------------------------------------------------------
# cochain families

def _enc(tup, base):
    v = 0
    for t in tup:
        v = v * base + t
    return v


def comp_zero(M, k, nA, d):
    return [[zero_vec(d) for _ in range(nA ** k)] for _ in range(M ** k)]


def comp_get(comp, M, nA, alphas, idxs):
    return comp[_enc(alphas, M)][_enc(idxs, nA)]


def comp_eval(comp, M, nA, d, alphas, vecs):
    """Multilinear evaluation of one component at arbitrary argument vectors."""
    table = comp[_enc(alphas, M)]
    supports = [[(i, c) for i, c in enumerate(v) if c] for v in vecs]
    out = zero_vec(d)
    for combo in itertools.product(*supports):
        coeff = 1
        xi = 0
        for i, c in combo:
            coeff *= c
            xi = xi * nA + i
        out = vec_add(out, vec_scale(coeff, table[xi]))
    return out


@dataclass
class CochainFamily:
    """Cochain of degree 1 or (2n, 2n+1) (also used for the (3,4) target).

    Degree 1 stores one matrix per semigroup index (module <- algebra carrier).
    A pair degree stores an even component with 2n argument slots and an odd
    component with 2n+1 slots, each a full table over index tuples and basis
    argument tuples with vector values in the coefficient space.
    """
    semigroup: FiniteCommutativeSemigroup
    dim_alg: int
    dim_coeff: int
    degree: object  # 1 or (even_arity, odd_arity)
    even: list
    odd: list | None = None

    def is_pair(self):
        return self.degree != 1

    def one_apply(self, a, v):
        return mat_vec(self.even[a], v)

    def as_component(self):
        """The degree-1 cochain as a 1-slot table (for the generic coboundary)."""
        M = self.semigroup.order
        comp = comp_zero(M, 1, self.dim_alg, self.dim_coeff)
        for a in range(M):
            for i in range(self.dim_alg):
                comp[a][i] = [row[i] for row in self.even[a]]
        return comp


def cochain_zero(s, dim_alg, dim_coeff, degree) -> CochainFamily:
    M = s.order
    if degree == 1:
        return CochainFamily(s, dim_alg, dim_coeff, 1,
                             [zeros(dim_coeff, dim_alg) for _ in range(M)])
    ke, ko = degree
    return CochainFamily(s, dim_alg, dim_coeff, (ke, ko),
                         comp_zero(M, ke, dim_alg, dim_coeff),
                         comp_zero(M, ko, dim_alg, dim_coeff))


def cochain_full_coords(c: CochainFamily):
    """Flatten every table entry into one coordinate vector."""
    out = []
    if c.degree == 1:
        for mtx in c.even:
            for row in mtx:
                out.extend(row)
        return out
    for comp in (c.even, c.odd):
        for table in comp:
            for v in table:
                out.extend(v)
    return out


def _pair_swap_ok(comp, M, nA, k, pair_pos, d):
    """Violations of skewness at one pair of consecutive slots."""
    bad = []
    for alphas in itertools.product(range(M), repeat=k):
        for idxs in itertools.product(range(nA), repeat=k):
            sa = list(alphas)
            si = list(idxs)
            p = pair_pos
            sa[p], sa[p + 1] = sa[p + 1], sa[p]
            si[p], si[p + 1] = si[p + 1], si[p]
            r = vec_add(comp_get(comp, M, nA, alphas, idxs),
                        comp_get(comp, M, nA, sa, si))
            if any(r):
                bad.append((pair_pos, alphas, idxs, tuple(r)))
    return bad


def cochain_skew_report(c: CochainFamily) -> Report:
    """Pairwise skewness of a pair-degree cochain (degree 1 is unconstrained)."""
    rep = Report()
    if c.degree == 1:
        return rep
    ke, ko = c.degree
    M, nA, d = c.semigroup.order, c.dim_alg, c.dim_coeff
    npairs = ke // 2
    for p in range(npairs):
        for w in _pair_swap_ok(c.even, M, nA, ke, 2 * p, d):
            rep.add("invariant:cochain-skew-even", w[:3], w[3])
        for w in _pair_swap_ok(c.odd, M, nA, ko, 2 * p, d):
            rep.add("invariant:cochain-skew-odd", w[:3], w[3])
    return rep


# ---------------------------------------------------------------------------
# skew coordinate bases

@dataclass
class SkewBasis:
    """Enumerated basis of the pairwise-skew subspace at one cochain degree.

    Joint indices pack (argument basis element, semigroup index) into a single
    label; a basis element fixes an ordered pair p < q of joint labels per
    consecutive slot pair, a free joint label for the odd trailing slot, and a
    coefficient coordinate.
    """
    degree: object
    semigroup: FiniteCommutativeSemigroup
    dim_alg: int
    dim_coeff: int
    elements: list

    @property
    def size(self):
        return len(self.elements)

    def embed(self, idx) -> CochainFamily:
        c = cochain_zero(self.semigroup, self.dim_alg, self.dim_coeff,
                         self.degree)
        self.add_embedded(c, idx, 1)
        return c

    def add_embedded(self, c: CochainFamily, idx, scale):
        """Add scale * basis element idx into cochain c (in place)."""
        M = self.semigroup.order
        nA = self.dim_alg
        el = self.elements[idx]
        if el[0] == "one":
            _, a, i, co = el
            c.even[a][co][i] += scale
            return
        kind, pairs, last, co = el
        comp = c.even if kind == "even" else c.odd
        for choices in itertools.product((0, 1), repeat=len(pairs)):
            sign = 1
            joints = []
            for (p, q), ch in zip(pairs, choices):
                if ch == 0:
                    joints.extend((p, q))
                else:
                    joints.extend((q, p))
                    sign = -sign
            if last is not None:
                joints.append(last)
            alphas = []
            idxs = []
            for jt in joints:
                i, a = split_joint(jt, M)
                alphas.append(a)
                idxs.append(i)
            comp_get(comp, M, nA, alphas, idxs)[co] += sign * scale

    def project(self, c: CochainFamily):
        """Coordinates of a (skew) cochain in this basis."""
        M = self.semigroup.order
        nA = self.dim_alg
        out = []
        for el in self.elements:
            if el[0] == "one":
                _, a, i, co = el
                out.append(c.even[a][co][i])
                continue
            kind, pairs, last, co = el
            comp = c.even if kind == "even" else c.odd
            joints = []
            for p, q in pairs:
                joints.extend((p, q))
            if last is not None:
                joints.append(last)
            alphas = []
            idxs = []
            for jt in joints:
                i, a = split_joint(jt, M)
                alphas.append(a)
                idxs.append(i)
            out.append(comp_get(comp, M, nA, alphas, idxs)[co])
        return out

    def combine(self, coords) -> CochainFamily:
        c = cochain_zero(self.semigroup, self.dim_alg, self.dim_coeff,
                         self.degree)
        for idx, v in enumerate(coords):
            if v:
                self.add_embedded(c, idx, v)
        return c


def skew_basis(degree, dims, s: FiniteCommutativeSemigroup,
               budget: int | None = None) -> SkewBasis:
    """Basis of the skew subspace; dims = (carrier dim, coefficient dim)."""
    nA, d = dims
    M = s.order
    joint = M * nA
    elements = []
    if degree == 1:
        for a in range(M):
            for i in range(nA):
                for co in range(d):
                    elements.append(("one", a, i, co))
        return SkewBasis(1, s, nA, d, elements)
    ke, ko = degree
    if ko != ke + 1 or ke < 2 or ke % 2:
        raise PreconditionError("degree must be 1 or (2n, 2n+1): %r" % (degree,))
    npairs = ke // 2
    pair_choices = [(p, q) for p in range(joint) for q in range(p + 1, joint)]
    npair = len(pair_choices)
    total = (npair ** npairs) * d * (1 + joint)
    ensure_budget((M ** ke) * (nA ** ke) * d + (M ** ko) * (nA ** ko) * d,
                  budget)
    for combo in itertools.product(pair_choices, repeat=npairs):
        for co in range(d):
            elements.append(("even", combo, None, co))
    for combo in itertools.product(pair_choices, repeat=npairs):
        for last in range(joint):
            for co in range(d):
                elements.append(("odd", combo, last, co))
    assert len(elements) == total
    return SkewBasis((ke, ko), s, nA, d, elements)


# ---------------------------------------------------------------------------
# coboundary operators

def delta_omega(O: OmegaLYAlgebra, r: OmegaRepresentation, c: CochainFamily,
                budget: int | None = None) -> CochainFamily:
    """Coboundary of a degree-1 or (2n,2n+1) cochain.

    The degree-1 case is the n = 0 instance of the general displayed sums, so
    a single evaluator covers every degree.
    """
    s = O.semigroup
    M, nA, d = s.order, O.dim, r.dim
    if c.dim_alg != nA or c.dim_coeff != d:
        raise PreconditionError("cochain shape does not match algebra/module")
    if c.degree == 1:
        n = 0
        f_comp = None
        g_comp = c.as_component()
    else:
        ke, ko = c.degree
        n = ke // 2
        f_comp = c.even
        g_comp = c.odd
    KE, KO = 2 * n + 2, 2 * n + 3
    ensure_budget((M ** KE) * (nA ** KE) * d + (M ** KO) * (nA ** KO) * d,
                  budget)
    out = cochain_zero(s, nA, d, (KE, KO))
    E = [O.basis(i) for i in range(nA)]
    sign_n = -1 if n % 2 else 1
    r.d_tensor()

    def word(indices):
        return product_of(s, indices)

    def tr_vec(a, b, g, i, j, k):
        return O.ternary[a][b][g][i][j][k]

    for alphas in itertools.product(range(M), repeat=KE):
        al = list(alphas)
        for idxs in itertools.product(range(nA), repeat=KE):
            xs = list(idxs)
            acc = zero_vec(d)
            # block in the last two slots
            g1 = comp_get(g_comp, M, nA, al[:2 * n] + [al[KE - 1]],
                          xs[:2 * n] + [xs[KE - 1]])
            t = r.rho_apply(al[KE - 2], word(al[:KE - 2] + [al[KE - 1]]),
                            E[xs[KE - 2]], g1)
            g2 = comp_get(g_comp, M, nA, al[:KE - 1], xs[:KE - 1])
            t = vec_sub(t, r.rho_apply(al[KE - 1], word(al[:KE - 1]),
                                       E[xs[KE - 1]], g2))
            bvec = O.binary[al[KE - 2]][al[KE - 1]][xs[KE - 2]][xs[KE - 1]]
            vecs = [E[x] for x in xs[:2 * n]] + [bvec]
            t = vec_sub(t, comp_eval(g_comp, M, nA, d,
                                     al[:2 * n] + [product(s, al[KE - 2],
                                                           al[KE - 1])], vecs))
            acc = vec_add(acc, vec_scale(sign_n, t))
            # derived-operator sum over removed pairs (acts on the even part)
            for k in range(1, n + 1):
                i1, i2 = 2 * k - 2, 2 * k - 1
                rem_al = al[:i1] + al[i2 + 1:]
                rem_xs = xs[:i1] + xs[i2 + 1:]
                fval = comp_get(f_comp, M, nA, rem_al, rem_xs)
                t = r.d_apply(al[i1], al[i2], word(rem_al),
                              E[xs[i1]], E[xs[i2]], fval)
                acc = vec_add(acc, vec_scale(-1 if k % 2 == 0 else 1, t))
            # substitution double sum
            for k in range(1, n + 1):
                i1, i2 = 2 * k - 2, 2 * k - 1
                sk = 1 if k % 2 == 0 else -1
                for j in range(i2 + 1, KE):
                    new_al = list(al)
                    new_al[j] = product_of(s, (al[i1], al[i2], al[j]))
                    new_al = new_al[:i1] + new_al[i2 + 1:]
                    vecs = [E[x] for x in xs]
                    vecs[j] = tr_vec(al[i1], al[i2], al[j],
                                     xs[i1], xs[i2], xs[j])
                    vecs = vecs[:i1] + vecs[i2 + 1:]
                    t = comp_eval(f_comp, M, nA, d, new_al, vecs)
                    acc = vec_add(acc, vec_scale(sk, t))
            out.even[_enc(al, M)][_enc(xs, nA)] = acc
    for alphas in itertools.product(range(M), repeat=KO):
        al = list(alphas)
        for idxs in itertools.product(range(nA), repeat=KO):
            xs = list(idxs)
            acc = zero_vec(d)
            gA = comp_get(g_comp, M, nA, al[:KO - 2], xs[:KO - 2])
            t = r.theta_apply(al[KO - 2], al[KO - 1], word(al[:KO - 2]),
                              E[xs[KO - 2]], E[xs[KO - 1]], gA)
            gB = comp_get(g_comp, M, nA, al[:2 * n] + [al[KO - 2]],
                          xs[:2 * n] + [xs[KO - 2]])
            t = vec_sub(t, r.theta_apply(al[KO - 3], al[KO - 1],
                                         word(al[:2 * n] + [al[KO - 2]]),
                                         E[xs[KO - 3]], E[xs[KO - 1]], gB))
            acc = vec_add(acc, vec_scale(sign_n, t))
            for k in range(1, n + 2):
                i1, i2 = 2 * k - 2, 2 * k - 1
                rem_al = al[:i1] + al[i2 + 1:]
                rem_xs = xs[:i1] + xs[i2 + 1:]
                gval = comp_get(g_comp, M, nA, rem_al, rem_xs)
                t = r.d_apply(al[i1], al[i2], word(rem_al),
                              E[xs[i1]], E[xs[i2]], gval)
                acc = vec_add(acc, vec_scale(-1 if k % 2 == 0 else 1, t))
            for k in range(1, n + 2):
                i1, i2 = 2 * k - 2, 2 * k - 1
                sk = 1 if k % 2 == 0 else -1
                for j in range(i2 + 1, KO):
                    new_al = list(al)
                    new_al[j] = product_of(s, (al[i1], al[i2], al[j]))
                    new_al = new_al[:i1] + new_al[i2 + 1:]
                    vecs = [E[x] for x in xs]
                    vecs[j] = tr_vec(al[i1], al[i2], al[j],
                                     xs[i1], xs[i2], xs[j])
                    vecs = vecs[:i1] + vecs[i2 + 1:]
                    t = comp_eval(g_comp, M, nA, d, new_al, vecs)
                    acc = vec_add(acc, vec_scale(sk, t))
            out.odd[_enc(al, M)][_enc(xs, nA)] = acc
    return out


def delta_star_omega(O: OmegaLYAlgebra, r: OmegaRepresentation,
                     c: CochainFamily) -> CochainFamily:
    """The extra differential out of degree (2,3), landing in the (3,4) pair."""
    if c.degree != (2, 3):
        raise PreconditionError("input must have degree (2, 3)")
    s = O.semigroup
    M, nA, d = s.order, O.dim, r.dim
    out = cochain_zero(s, nA, d, (3, 4))
    E = [O.basis(i) for i in range(nA)]
    p2 = lambda a, b: product(s, a, b)

    def fval(a, b, i, j):
        return comp_get(c.even, M, nA, (a, b), (i, j))

    def gval(a, b, g, i, j, k):
        return comp_get(c.odd, M, nA, (a, b, g), (i, j, k))

    def g_eval(alphas, vecs):
        return comp_eval(c.odd, M, nA, d, alphas, vecs)

    def f_eval(alphas, vecs):
        return comp_eval(c.even, M, nA, d, alphas, vecs)

    for a1, a2, a3 in itertools.product(range(M), repeat=3):
        for i1, i2, i3 in itertools.product(range(nA), repeat=3):
            acc = vec_scale(-1, r.rho_apply(a1, p2(a2, a3), E[i1],
                                            fval(a2, a3, i2, i3)))
            acc = vec_sub(acc, r.rho_apply(a2, p2(a3, a1), E[i2],
                                           fval(a3, a1, i3, i1)))
            acc = vec_sub(acc, r.rho_apply(a3, p2(a1, a2), E[i3],
                                           fval(a1, a2, i1, i2)))
            acc = vec_add(acc, f_eval((p2(a1, a2), a3),
                                      [O.binary[a1][a2][i1][i2], E[i3]]))
            acc = vec_add(acc, f_eval((p2(a2, a3), a1),
                                      [O.binary[a2][a3][i2][i3], E[i1]]))
            acc = vec_add(acc, f_eval((p2(a3, a1), a2),
                                      [O.binary[a3][a1][i3][i1], E[i2]]))
            acc = vec_add(acc, gval(a1, a2, a3, i1, i2, i3))
            acc = vec_add(acc, gval(a2, a3, a1, i2, i3, i1))
            acc = vec_add(acc, gval(a3, a1, a2, i3, i1, i2))
            out.even[_enc((a1, a2, a3), M)][_enc((i1, i2, i3), nA)] = acc
    for a1, a2, a3, a4 in itertools.product(range(M), repeat=4):
        for i1, i2, i3, i4 in itertools.product(range(nA), repeat=4):
            acc = r.theta_apply(a1, a4, p2(a2, a3), E[i1], E[i4],
                                fval(a2, a3, i2, i3))
            acc = vec_add(acc, r.theta_apply(a2, a4, p2(a3, a1), E[i2], E[i4],
                                             fval(a3, a1, i3, i1)))
            acc = vec_add(acc, r.theta_apply(a3, a4, p2(a1, a2), E[i3], E[i4],
                                             fval(a1, a2, i1, i2)))
            acc = vec_add(acc, g_eval((p2(a1, a2), a3, a4),
                                      [O.binary[a1][a2][i1][i2], E[i3], E[i4]]))
            acc = vec_add(acc, g_eval((p2(a2, a3), a1, a4),
                                      [O.binary[a2][a3][i2][i3], E[i1], E[i4]]))
            acc = vec_add(acc, g_eval((p2(a3, a1), a2, a4),
                                      [O.binary[a3][a1][i3][i1], E[i2], E[i4]]))
            out.odd[_enc((a1, a2, a3, a4), M)][_enc((i1, i2, i3, i4), nA)] = acc
    return out


# ---------------------------------------------------------------------------
# cohomology dimensions of the indexed complex

def _map_matrix(images):
    """Rows = output coordinates, columns = domain basis, from image vectors."""
    if not images:
        return []
    ncoords = len(images[0])
    return [[img[i] for img in images] for i in range(ncoords)]


def omega_cohomology_dims(O: OmegaLYAlgebra, r: OmegaRepresentation,
                          max_n: int, budget: int | None = None):
    """[dim H^1, dim H^(2,3), ..., dim H^(2 max_n, 2 max_n + 1)].

    Degree 1 is the kernel of delta on C^1 (the indexed complex has no degree
    0 term); degree (2,3) intersects the kernels of delta and delta* and
    quotients by delta C^1; higher degrees quotient ker delta by the image.
    """
    if max_n < 0:
        raise PreconditionError("max_n must be >= 0")
    s = O.semigroup
    dims_pair = (O.dim, r.dim)
    out = []
    basis1 = skew_basis(1, dims_pair, s)
    images1 = [cochain_full_coords(delta_omega(O, r, basis1.embed(i), budget))
               for i in range(basis1.size)]
    kernel1 = nullspace_basis(_map_matrix(images1))
    out.append(len(kernel1) if images1 else basis1.size)
    if max_n < 1:
        return out
    prev_basis = basis1
    prev_images_coords = None  # coords of delta(previous basis) in next skew basis
    for n in range(1, max_n + 1):
        degree = (2 * n, 2 * n + 1)
        bas = skew_basis(degree, dims_pair, s, budget)
        prev_images = [delta_omega(O, r, prev_basis.embed(i), budget)
                       for i in range(prev_basis.size)]
        b_coords = [bas.project(c) for c in prev_images]
        images = [cochain_full_coords(delta_omega(O, r, bas.embed(i), budget))
                  for i in range(bas.size)]
        rows = _map_matrix(images)
        if n == 1:
            star = [cochain_full_coords(delta_star_omega(O, r, bas.embed(i)))
                    for i in range(bas.size)]
            rows = rows + _map_matrix(star)
        z_basis = nullspace_basis(rows) if rows else [
            [1 if i == j else 0 for j in range(bas.size)]
            for i in range(bas.size)]
        out.append(quotient_dim(z_basis, b_coords))
        prev_basis = bas
    return out
