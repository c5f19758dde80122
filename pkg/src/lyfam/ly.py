"""Lie-Yamaguti algebras, their representations, and (2,3)-cocycles.

Structure constants are stored as full tensors of coordinate vectors:
binary[i][j] is the vector of [e_i, e_j], ternary[i][j][k] that of
{e_i, e_j, e_k}.  Every multilinear law is checked on basis tuples only,
which by multilinearity is equivalent to the universally quantified law.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import MalformedInputError, PreconditionError
from .report import Report
from .semigroup import FiniteCommutativeSemigroup, product, validate_semigroup


def _as_tensor2(t, dim, vdim):
    t = [[list(v) for v in row] for row in t]
    if len(t) != dim or any(len(r) != dim for r in t) or any(
            len(v) != vdim for r in t for v in r):
        raise MalformedInputError("bad shape for rank-2 structure tensor")
    return t


def _as_tensor3(t, dim, vdim):
    t = [[[list(v) for v in row] for row in plane] for plane in t]
    if len(t) != dim or any(len(v) != vdim for p in t for r in p for v in r):
        raise MalformedInputError("bad shape for rank-3 structure tensor")
    return t


@dataclass
class LYAlgebra:
    dim: int
    binary: list  # binary[i][j] -> Vector(dim)
    ternary: list  # ternary[i][j][k] -> Vector(dim)

    def __post_init__(self):
        self.binary = _as_tensor2(self.binary, self.dim, self.dim)
        self.ternary = _as_tensor3(self.ternary, self.dim, self.dim)

    # -- invariant report (skewness), separated so checkers can prepend it
    def invariant_report(self) -> Report:
        rep = Report()
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                rep.record("invariant:skew-binary", (i, j),
                           linalg.vec_add(self.binary[i][j], self.binary[j][i]))
        for i in range(n):
            for j in range(i, n):
                for k in range(n):
                    rep.record("invariant:skew-ternary", (i, j, k),
                               linalg.vec_add(self.ternary[i][j][k], self.ternary[j][i][k]))
        return rep

    # -- multilinear evaluation with zero skipping
    def bracket(self, x, y):
        out = linalg.zero_vec(self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                v = self.binary[i][j]
                c = xi * yj
                for k, vk in enumerate(v):
                    if vk:
                        out[k] += c * vk
        return out

    def tri(self, x, y, z):
        out = linalg.zero_vec(self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, zk in enumerate(z):
                    if not zk:
                        continue
                    v = self.ternary[i][j][k]
                    d = c * zk
                    for l, vl in enumerate(v):
                        if vl:
                            out[l] += d * vl
        return out

    def basis(self, i):
        e = linalg.zero_vec(self.dim)
        e[i] = 1
        return e


def zero_ly(dim: int) -> LYAlgebra:
    z = linalg.zero_vec(dim)
    return LYAlgebra(dim,
                     [[list(z) for _ in range(dim)] for _ in range(dim)],
                     [[[list(z) for _ in range(dim)] for _ in range(dim)]
                      for _ in range(dim)])


@dataclass
class Representation:
    space_dim: int
    rho: list    # rho[i] -> Matrix(V -> V)
    theta: list  # theta[i][j] -> Matrix(V -> V)

    def rho_of(self, x):
        """Matrix of rho(v) for a coefficient vector v over the algebra basis."""
        return linalg.mat_lincomb(x, self.rho, self.space_dim, self.space_dim)

    def theta_of(self, x, y):
        n = self.space_dim
        out = linalg.zeros(n, n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                m = self.theta[i][j]
                for a in range(n):
                    row = m[a]
                    orow = out[a]
                    for b in range(n):
                        if row[b]:
                            orow[b] += c * row[b]
        return out


def zero_representation(alg_dim: int, space_dim: int) -> Representation:
    return Representation(
        space_dim,
        [linalg.zeros(space_dim, space_dim) for _ in range(alg_dim)],
        [[linalg.zeros(space_dim, space_dim) for _ in range(alg_dim)]
         for _ in range(alg_dim)])


@dataclass
class Cocycle23:
    gamma1: list  # g1[i][j] -> Vector(space_dim)
    gamma2: list  # g2[i][j][k] -> Vector(space_dim)

    def g1_of(self, x, y):
        n = len(self.gamma1[0][0])
        out = linalg.zero_vec(n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, vk in enumerate(self.gamma1[i][j]):
                    if vk:
                        out[k] += c * vk
        return out

    def g2_of(self, x, y, z):
        n = len(self.gamma2[0][0][0])
        out = linalg.zero_vec(n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, zk in enumerate(z):
                    if not zk:
                        continue
                    d = c * zk
                    for l, vl in enumerate(self.gamma2[i][j][k]):
                        if vl:
                            out[l] += d * vl
        return out

    def is_zero(self) -> bool:
        return (all(not any(v) for row in self.gamma1 for v in row)
                and all(not any(v) for p in self.gamma2 for r in p for v in r))

    def invariant_report(self) -> Report:
        rep = Report()
        n = len(self.gamma1)
        for i in range(n):
            for j in range(i, n):
                rep.record("invariant:skew-gamma1", (i, j),
                           linalg.vec_add(self.gamma1[i][j], self.gamma1[j][i]))
                for k in range(n):
                    rep.record("invariant:skew-gamma2", (i, j, k),
                               linalg.vec_add(self.gamma2[i][j][k], self.gamma2[j][i][k]))
        return rep


def zero_cocycle(alg_dim: int, space_dim: int) -> Cocycle23:
    z = linalg.zero_vec(space_dim)
    return Cocycle23(
        [[list(z) for _ in range(alg_dim)] for _ in range(alg_dim)],
        [[[list(z) for _ in range(alg_dim)] for _ in range(alg_dim)]
         for _ in range(alg_dim)])


# ---------------------------------------------------------------------------
# axiom checkers

def check_ly_axioms(A: LYAlgebra) -> Report:
    rep = A.invariant_report()
    n = A.dim
    basis = [A.basis(i) for i in range(n)]
    br, tr = A.bracket, A.tri
    for i in range(n):
        x = basis[i]
        for j in range(n):
            y = basis[j]
            for k in range(n):
                z = basis[k]
                res = br(br(x, y), z)
                res = linalg.vec_add(res, br(br(y, z), x))
                res = linalg.vec_add(res, br(br(z, x), y))
                res = linalg.vec_add(res, tr(x, y, z))
                res = linalg.vec_add(res, tr(z, x, y))
                res = linalg.vec_add(res, tr(y, z, x))
                rep.record("LY-2.1", (i, j, k), res)
                for a in range(n):
                    w = basis[a]
                    res = tr(br(x, y), z, w)
                    res = linalg.vec_add(res, tr(br(y, z), x, w))
                    res = linalg.vec_add(res, tr(br(z, x), y, w))
                    rep.record("LY-2.2", (i, j, k, a), res)
    for a in range(n):
        va = basis[a]
        for b in range(n):
            vb = basis[b]
            for i in range(n):
                x = basis[i]
                for j in range(n):
                    y = basis[j]
                    res = tr(va, vb, br(x, y))
                    res = linalg.vec_sub(res, br(tr(va, vb, x), y))
                    res = linalg.vec_sub(res, br(x, tr(va, vb, y)))
                    rep.record("LY-2.3", (a, b, i, j), res)
                    for k in range(n):
                        z = basis[k]
                        res = tr(va, vb, tr(x, y, z))
                        res = linalg.vec_sub(res, tr(tr(va, vb, x), y, z))
                        res = linalg.vec_sub(res, tr(x, tr(va, vb, y), z))
                        res = linalg.vec_sub(res, tr(x, y, tr(va, vb, z)))
                        rep.record("LY-2.4", (a, b, i, j, k), res)
    return rep


def derived_D(A: LYAlgebra, r: Representation):
    """D[i][j] = theta(e_j,e_i) - theta(e_i,e_j) - rho([e_i,e_j])
    + rho(e_i)rho(e_j) - rho(e_j)rho(e_i)."""
    n = A.dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            m = linalg.mat_sub(r.theta[j][i], r.theta[i][j])
            m = linalg.mat_sub(m, r.rho_of(A.binary[i][j]))
            m = linalg.mat_add(m, linalg.mat_mul(r.rho[i], r.rho[j]))
            m = linalg.mat_sub(m, linalg.mat_mul(r.rho[j], r.rho[i]))
            row.append(m)
        out.append(row)
    return out


def _d_of(A, r, D, x, y):
    return linalg.mat_lincomb(
        [xi * yj for xi in x for yj in y],
        [D[i][j] for i in range(A.dim) for j in range(A.dim)],
        r.space_dim, r.space_dim)


def check_representation(A: LYAlgebra, r: Representation) -> Report:
    rep = Report()
    n = A.dim
    basis = [A.basis(i) for i in range(n)]
    D = derived_D(A, r)

    def rho(x):
        return r.rho_of(x)

    def theta(x, y):
        return r.theta_of(x, y)

    def dd(x, y):
        return _d_of(A, r, D, x, y)

    mm = linalg.mat_mul
    for i in range(n):
        x = basis[i]
        for j in range(n):
            y = basis[j]
            for k in range(n):
                z = basis[k]
                res = theta(A.bracket(x, y), z)
                res = linalg.mat_sub(res, mm(theta(x, z), rho(y)))
                res = linalg.mat_add(res, mm(theta(y, z), rho(x)))
                rep.record("REP-2.5", (i, j, k), linalg.flatten(res))

                res = mm(dd(x, y), rho(z))
                res = linalg.mat_sub(res, mm(rho(z), dd(x, y)))
                res = linalg.mat_sub(res, rho(A.tri(x, y, z)))
                rep.record("REP-2.6", (i, j, k), linalg.flatten(res))

                res = theta(x, A.bracket(y, z))
                res = linalg.mat_sub(res, mm(rho(y), theta(x, z)))
                res = linalg.mat_add(res, mm(rho(z), theta(x, y)))
                rep.record("REP-2.7", (i, j, k), linalg.flatten(res))

    for a in range(n):
        va = basis[a]
        for b in range(n):
            vb = basis[b]
            for i in range(n):
                x = basis[i]
                for j in range(n):
                    y = basis[j]
                    res = mm(dd(va, vb), theta(x, y))
                    res = linalg.mat_sub(res, mm(theta(x, y), dd(va, vb)))
                    res = linalg.mat_sub(res, theta(A.tri(va, vb, x), y))
                    res = linalg.mat_sub(res, theta(x, A.tri(va, vb, y)))
                    rep.record("REP-2.8", (a, b, i, j), linalg.flatten(res))

    for a in range(n):
        va = basis[a]
        for i in range(n):
            x = basis[i]
            for j in range(n):
                y = basis[j]
                for k in range(n):
                    z = basis[k]
                    res = theta(va, A.tri(x, y, z))
                    res = linalg.mat_sub(res, mm(theta(y, z), theta(va, x)))
                    res = linalg.mat_add(res, mm(theta(x, z), theta(va, y)))
                    res = linalg.mat_sub(res, mm(dd(x, y), theta(va, z)))
                    rep.record("REP-2.9", (a, i, j, k), linalg.flatten(res))

    # redundant consequences of the definition, kept as a consistency self-test
    for i in range(n):
        x = basis[i]
        for j in range(n):
            y = basis[j]
            for k in range(n):
                z = basis[k]
                res = dd(A.bracket(x, y), z)
                res = linalg.mat_add(res, dd(A.bracket(y, z), x))
                res = linalg.mat_add(res, dd(A.bracket(z, x), y))
                rep.record("REP-2.11", (i, j, k), linalg.flatten(res))
    for a in range(n):
        va = basis[a]
        for b in range(n):
            vb = basis[b]
            for i in range(n):
                x = basis[i]
                for j in range(n):
                    y = basis[j]
                    res = mm(dd(va, vb), dd(x, y))
                    res = linalg.mat_sub(res, mm(dd(x, y), dd(va, vb)))
                    res = linalg.mat_sub(res, dd(A.tri(va, vb, x), y))
                    res = linalg.mat_sub(res, dd(x, A.tri(va, vb, y)))
                    rep.record("REP-2.12", (a, b, i, j), linalg.flatten(res))
    for i in range(n):
        x = basis[i]
        for j in range(n):
            y = basis[j]
            for k in range(n):
                z = basis[k]
                for a in range(n):
                    va = basis[a]
                    res = theta(A.tri(x, y, z), va)
                    res = linalg.mat_sub(res, mm(theta(x, va), theta(z, y)))
                    res = linalg.mat_add(res, mm(theta(y, va), theta(z, x)))
                    res = linalg.mat_add(res, mm(theta(z, va), dd(x, y)))
                    rep.record("REP-2.13", (i, j, k, a), linalg.flatten(res))
    return rep


def adjoint_representation(A: LYAlgebra) -> Representation:
    """rho(x)z = [x,z]; theta(x,y)z = {z,x,y}."""
    n = A.dim
    rho = []
    for i in range(n):
        m = linalg.zeros(n, n)
        for j in range(n):
            col = A.binary[i][j]
            for k in range(n):
                m[k][j] = col[k]
        rho.append(m)
    theta = []
    for i in range(n):
        row = []
        for j in range(n):
            m = linalg.zeros(n, n)
            for c in range(n):
                col = A.ternary[c][i][j]
                for k in range(n):
                    m[k][c] = col[k]
            row.append(m)
        theta.append(row)
    return Representation(n, rho, theta)


def check_cocycle23(A: LYAlgebra, r: Representation, c: Cocycle23) -> Report:
    rep = c.invariant_report()
    n = A.dim
    basis = [A.basis(i) for i in range(n)]
    D = derived_D(A, r)
    mv = linalg.mat_vec
    va = linalg.vec_add
    vs = linalg.vec_sub

    def dd(x, y):
        return _d_of(A, r, D, x, y)

    for i1 in range(n):
        x1 = basis[i1]
        for j1 in range(n):
            y1 = basis[j1]
            for k in range(n):
                z = basis[k]
                res = linalg.vec_neg(mv(r.rho[i1], c.g1_of(y1, z)))
                res = vs(res, mv(r.rho[j1], c.g1_of(z, x1)))
                res = vs(res, mv(r.rho[k], c.g1_of(x1, y1)))
                res = va(res, c.g1_of(A.bracket(x1, y1), z))
                res = va(res, c.g1_of(A.bracket(y1, z), x1))
                res = va(res, c.g1_of(A.bracket(z, x1), y1))
                res = va(res, c.gamma2[i1][j1][k])
                res = va(res, c.gamma2[k][i1][j1])
                res = va(res, c.gamma2[j1][k][i1])
                rep.record("COC-2.14", (i1, j1, k), res)

    for i1 in range(n):
        x1 = basis[i1]
        for j1 in range(n):
            y1 = basis[j1]
            for i2 in range(n):
                x2 = basis[i2]
                for j2 in range(n):
                    y2 = basis[j2]
                    res = mv(r.theta[i1][j2], c.gamma1[j1][i2])
                    res = va(res, mv(r.theta[j1][j2], c.gamma1[i2][i1]))
                    res = va(res, mv(r.theta[i2][j2], c.gamma1[i1][j1]))
                    res = va(res, c.g2_of(A.bracket(x1, y1), x2, y2))
                    res = va(res, c.g2_of(A.bracket(y1, x2), x1, y2))
                    res = va(res, c.g2_of(A.bracket(x2, x1), y1, y2))
                    rep.record("COC-2.15", (i1, j1, i2, j2), res)

                    res = linalg.vec_neg(mv(r.rho[i2], c.gamma2[i1][j1][j2]))
                    res = va(res, mv(r.rho[j2], c.gamma2[i1][j1][i2]))
                    res = va(res, c.g2_of(x1, y1, A.bracket(x2, y2)))
                    res = va(res, mv(D[i1][j1], c.gamma1[i2][j2]))
                    res = vs(res, c.g1_of(A.tri(x1, y1, x2), y2))
                    res = vs(res, c.g1_of(x2, A.tri(x1, y1, y2)))
                    rep.record("COC-2.16", (i1, j1, i2, j2), res)

                    for k in range(n):
                        z = basis[k]
                        res = linalg.vec_neg(mv(r.theta[j2][k], c.gamma2[i1][j1][i2]))
                        res = va(res, mv(r.theta[i2][k], c.gamma2[i1][j1][j2]))
                        res = va(res, mv(D[i1][j1], c.gamma2[i2][j2][k]))
                        res = vs(res, mv(D[i2][j2], c.gamma2[i1][j1][k]))
                        res = vs(res, c.g2_of(A.tri(x1, y1, x2), y2, z))
                        res = vs(res, c.g2_of(x2, A.tri(x1, y1, y2), z))
                        res = va(res, c.g2_of(x1, y1, A.tri(x2, y2, z)))
                        res = vs(res, c.g2_of(x2, y2, A.tri(x1, y1, z)))
                        rep.record("COC-2.17", (i1, j1, i2, j2, k), res)
    return rep


def gamma_ad(A: LYAlgebra) -> Cocycle23:
    """The pair (-[.,.], -{.,.,.}) as a cocycle for the adjoint representation."""
    return Cocycle23(
        [[linalg.vec_neg(v) for v in row] for row in A.binary],
        [[[linalg.vec_neg(v) for v in row] for row in plane] for plane in A.ternary])


# ---------------------------------------------------------------------------
# constructors

def check_jacobi(binary) -> Report:
    """Skewness and the Jacobi identity for a would-be Lie bracket tensor."""
    n = len(binary)
    A = LYAlgebra(n, binary, zero_ly(n).ternary)
    rep = Report()
    for i in range(n):
        for j in range(i, n):
            rep.record("invariant:skew-binary", (i, j),
                       linalg.vec_add(binary[i][j], binary[j][i]))
    basis = [A.basis(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = A.bracket(A.bracket(basis[i], basis[j]), basis[k])
                res = linalg.vec_add(
                    res, A.bracket(A.bracket(basis[j], basis[k]), basis[i]))
                res = linalg.vec_add(
                    res, A.bracket(A.bracket(basis[k], basis[i]), basis[j]))
                rep.record("jacobi", (i, j, k), res)
    return rep


def ly_from_lie(lie_binary) -> LYAlgebra:
    """{x,y,z} = [[x,y],z] on top of a Lie bracket."""
    jac = check_jacobi(lie_binary)
    if not jac.ok:
        raise PreconditionError(
            "input bracket is not a Lie bracket: %s" % sorted(jac.laws()))
    n = len(lie_binary)
    lie = LYAlgebra(n, lie_binary, zero_ly(n).ternary)
    basis = [lie.basis(i) for i in range(n)]
    ternary = [[[lie.bracket(lie.bracket(basis[i], basis[j]), basis[k])
                 for k in range(n)] for j in range(n)] for i in range(n)]
    return LYAlgebra(n, lie_binary, ternary)


def check_leibniz(star) -> Report:
    """Left Leibniz law x*(y*z) = (x*y)*z + y*(x*z) for a product tensor."""
    n = len(star)
    # reuse the trilinear machinery through direct tensor evaluation
    def prod(x, y):
        out = linalg.zero_vec(n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, vk in enumerate(star[i][j]):
                    if vk:
                        out[k] += c * vk
        return out

    rep = Report()
    basis = [[1 if p == q else 0 for q in range(n)] for p in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = prod(basis[i], prod(basis[j], basis[k]))
                res = linalg.vec_sub(res, prod(prod(basis[i], basis[j]), basis[k]))
                res = linalg.vec_sub(res, prod(basis[j], prod(basis[i], basis[k])))
                rep.record("leibniz-left", (i, j, k), res)
    return rep


def ly_from_leibniz(star) -> LYAlgebra:
    """[x,y] = x*y - y*x and {x,y,z} = -(x*y)*z on top of a left Leibniz product."""
    law = check_leibniz(star)
    if not law.ok:
        raise PreconditionError("input product violates the left Leibniz law")
    n = len(star)

    def prod(x, y):
        out = linalg.zero_vec(n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, vk in enumerate(star[i][j]):
                    if vk:
                        out[k] += c * vk
        return out

    basis = [[1 if p == q else 0 for q in range(n)] for p in range(n)]
    binary = [[linalg.vec_sub(prod(basis[i], basis[j]), prod(basis[j], basis[i]))
               for j in range(n)] for i in range(n)]
    ternary = [[[linalg.vec_neg(prod(prod(basis[i], basis[j]), basis[k]))
                 for k in range(n)] for j in range(n)] for i in range(n)]
    out = LYAlgebra(n, binary, ternary)
    chk = check_ly_axioms(out)
    if not chk.ok:
        raise PreconditionError(
            "Leibniz input produced an invalid bracket pair: %s" % sorted(chk.laws()))
    return out


def joint_index(i: int, alpha: int, order: int) -> int:
    """Flatten (basis index i, semigroup element alpha) to i*order + alpha.

    This single convention coordinatizes every tensor product with the
    semigroup algebra throughout the package.
    """
    return i * order + alpha


def split_joint(m: int, order: int):
    return divmod(m, order)


def ly_tensor_semigroup(A: LYAlgebra, s: FiniteCommutativeSemigroup) -> LYAlgebra:
    """[a@x, b@y] = [a,b]@xy and {a@x, b@y, c@z} = {a,b,c}@xyz on L (x) K-Omega."""
    if not validate_semigroup(s).ok:
        raise PreconditionError("semigroup fails validation")
    n, m = A.dim, s.order
    N = n * m
    zero = linalg.zero_vec(N)
    binary = [[list(zero) for _ in range(N)] for _ in range(N)]
    ternary = [[[list(zero) for _ in range(N)] for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for a in range(m):
            p = joint_index(i, a, m)
            for j in range(n):
                for b in range(m):
                    q = joint_index(j, b, m)
                    ab = product(s, a, b)
                    for k, vk in enumerate(A.binary[i][j]):
                        if vk:
                            binary[p][q][joint_index(k, ab, m)] = vk
                    for k in range(n):
                        for g in range(m):
                            r = joint_index(k, g, m)
                            abg = product(s, ab, g)
                            for l, vl in enumerate(A.ternary[i][j][k]):
                                if vl:
                                    ternary[p][q][r][joint_index(l, abg, m)] = vl
    return LYAlgebra(N, binary, ternary)
