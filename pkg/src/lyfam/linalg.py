"""Exact dense linear algebra over the rationals.

Scalars are Python ints or fractions.Fraction (they interoperate exactly);
matrices are sequences of rows, vectors are flat sequences.  Everything is
computed by exact Gaussian elimination, so all results are exact.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ContainmentError, PreconditionError


# ---------------------------------------------------------------------------
# vector / matrix helpers

def zero_vec(n):
    return [0] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def vec_neg(u):
    return [-a for a in u]


def is_zero(u) -> bool:
    return not any(u)


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def mat_vec(m, v):
    out = []
    for row in m:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s += a * b
        out.append(s)
    return out


def mat_mul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def mat_add(a, b):
    return [vec_add(r, s) for r, s in zip(a, b)]


def mat_sub(a, b):
    return [vec_sub(r, s) for r, s in zip(a, b)]


def mat_scale(c, a):
    return [vec_scale(c, r) for r in a]


def mat_lincomb(coeffs, mats, rows, cols):
    """Sum of coeffs[i] * mats[i]; returns a zero matrix when all coeffs vanish."""
    out = zeros(rows, cols)
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i, row in enumerate(m):
            orow = out[i]
            for j, x in enumerate(row):
                if x:
                    orow[j] += c * x
    return out


def flatten(m):
    return [x for row in m for x in row]


# ---------------------------------------------------------------------------
# elimination kernel

def _rref(rows):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(m) -> int:
    return len(_rref(m)[0])


def nullspace_basis(m):
    """Basis of {v : m v = 0}, one vector per free column."""
    if not m:
        return []
    ncols = len(m[0])
    red, pivots = _rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(m, b):
    """Some x with m x = b, or None when inconsistent."""
    if len(b) != len(m):
        raise PreconditionError("solve: b.dim (%d) != rows (%d)" % (len(b), len(m)))
    if not m:
        return []
    ncols = len(m[0])
    aug = [list(row) + [bv] for row, bv in zip(m, b)]
    red, pivots = _rref(aug)
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def in_span(basis_rref, pivots, v):
    """Whether v lies in the row space described by (rref rows, pivot cols)."""
    v = [Fraction(x) for x in v]
    for row, pc in zip(basis_rref, pivots):
        if v[pc]:
            f = v[pc]
            v = [x - f * y for x, y in zip(v, row)]
    return not any(v)


def quotient_dim(z_basis, b_basis) -> int:
    """dim span(z) - dim span(b); every b vector must lie in span(z)."""
    z_red, z_piv = _rref(z_basis)
    for k, v in enumerate(b_basis):
        if not in_span(z_red, z_piv, v):
            raise ContainmentError("vector %d of b_basis is outside span(z_basis)" % k)
    return len(z_red) - rank(b_basis)


def quotient_representatives(z_basis, b_basis):
    """Vectors of z_basis that extend span(b_basis) to span(z_basis).

    Deterministic: z_basis vectors are taken in order (lexicographically
    earliest pivots first when z_basis comes from nullspace_basis).
    """
    rows = [[Fraction(x) for x in v] for v in b_basis]
    red, piv = _rref(rows)
    reps = []
    for v in z_basis:
        if not in_span(red, piv, v):
            reps.append(v)
            red, piv = _rref(red + [list(v)])
    return reps
