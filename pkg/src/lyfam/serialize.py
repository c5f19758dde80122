"""JSON persistence for every object kind.

Rationals serialize as strings "p/q" ("p" when the denominator is 1).  The
algebra tensors store only the i < j half of their skew (first) pair; the
skew completion is reconstructed on load.  All other tensors are stored as
sparse coordinate lists.  Component fields of a bundle may be given inline
or as a string, which is read as a path relative to the bundle file.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction

from .errors import MalformedInputError
from .linalg import zero_vec, zeros
from .ly import Cocycle23, LYAlgebra, Representation
from .nsfamily import NSFamilyAlgebra
from .omega import CochainFamily, OmegaLYAlgebra, cochain_zero, comp_get
from .rbfamily import TwistedRBContext
from .semigroup import FiniteCommutativeSemigroup


def dump_scalar(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_scalar(s):
    try:
        f = Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError("bad rational %r: %s" % (s, exc))
    return f.numerator if f.denominator == 1 else f


def _require(cond, msg):
    if not cond:
        raise MalformedInputError(msg)


# ---------------------------------------------------------------------------
# semigroups

def semigroup_to_json(s: FiniteCommutativeSemigroup) -> dict:
    out = {"kind": "semigroup", "order": s.order,
           "table": [list(r) for r in s.table]}
    if s.unit is not None:
        out["unit"] = s.unit
    if s.names is not None:
        out["names"] = list(s.names)
    return out


def semigroup_from_json(d: dict) -> FiniteCommutativeSemigroup:
    _require(isinstance(d, dict) and "order" in d and "table" in d,
             "semigroup JSON needs order and table")
    return FiniteCommutativeSemigroup(
        order=int(d["order"]), table=d["table"],
        unit=d.get("unit"), names=tuple(d["names"]) if d.get("names") else None)


# ---------------------------------------------------------------------------
# algebras (skew-half sparse storage)

def ly_to_json(A: LYAlgebra) -> dict:
    bad = A.invariant_report()
    if not bad.ok:
        raise MalformedInputError("algebra tensors are not skew; refusing to "
                                  "store the half-tensor format")
    binary = []
    ternary = []
    n = A.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k, v in enumerate(A.binary[i][j]):
                if v:
                    binary.append([i, j, k, dump_scalar(v)])
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l, v in enumerate(A.ternary[i][j][k]):
                    if v:
                        ternary.append([i, j, k, l, dump_scalar(v)])
    return {"kind": "ly", "dim": n, "binary": binary, "ternary": ternary}


def ly_from_json(d: dict) -> LYAlgebra:
    _require(isinstance(d, dict) and "dim" in d, "algebra JSON needs dim")
    n = int(d["dim"])
    binary = [[zero_vec(n) for _ in range(n)] for _ in range(n)]
    ternary = [[[zero_vec(n) for _ in range(n)] for _ in range(n)]
               for _ in range(n)]
    for ent in d.get("binary", []):
        _require(len(ent) == 4, "binary entries are [i,j,k,value]")
        i, j, k = (int(x) for x in ent[:3])
        _require(0 <= i <= j < n and 0 <= k < n,
                 "binary entry out of range or not in the i<=j half: %r" % (ent,))
        v = parse_scalar(ent[3])
        binary[i][j][k] = v
        if i != j:
            binary[j][i][k] = -v
    for ent in d.get("ternary", []):
        _require(len(ent) == 5, "ternary entries are [i,j,k,l,value]")
        i, j, k, l = (int(x) for x in ent[:4])
        _require(0 <= i <= j < n and 0 <= k < n and 0 <= l < n,
                 "ternary entry out of range or not in the i<=j half: %r" % (ent,))
        v = parse_scalar(ent[4])
        ternary[i][j][k][l] = v
        if i != j:
            ternary[j][i][k][l] = -v
    return LYAlgebra(n, binary, ternary)


# ---------------------------------------------------------------------------
# representations and cocycles (full sparse storage)

def representation_to_json(r: Representation, algebra_dim: int) -> dict:
    m = r.space_dim
    rho = []
    theta = []
    for i in range(algebra_dim):
        for a in range(m):
            for b in range(m):
                if r.rho[i][a][b]:
                    rho.append([i, a, b, dump_scalar(r.rho[i][a][b])])
    for i in range(algebra_dim):
        for j in range(algebra_dim):
            for a in range(m):
                for b in range(m):
                    if r.theta[i][j][a][b]:
                        theta.append([i, j, a, b,
                                      dump_scalar(r.theta[i][j][a][b])])
    return {"kind": "representation", "space_dim": m,
            "algebra_dim": algebra_dim, "rho": rho, "theta": theta}


def representation_from_json(d: dict) -> Representation:
    _require(isinstance(d, dict) and "space_dim" in d and "algebra_dim" in d,
             "representation JSON needs space_dim and algebra_dim")
    m = int(d["space_dim"])
    n = int(d["algebra_dim"])
    rho = [zeros(m, m) for _ in range(n)]
    theta = [[zeros(m, m) for _ in range(n)] for _ in range(n)]
    for ent in d.get("rho", []):
        _require(len(ent) == 4, "rho entries are [i,row,col,value]")
        i, a, b = (int(x) for x in ent[:3])
        _require(0 <= i < n and 0 <= a < m and 0 <= b < m,
                 "rho entry out of range: %r" % (ent,))
        rho[i][a][b] = parse_scalar(ent[3])
    for ent in d.get("theta", []):
        _require(len(ent) == 5, "theta entries are [i,j,row,col,value]")
        i, j, a, b = (int(x) for x in ent[:4])
        _require(0 <= i < n and 0 <= j < n and 0 <= a < m and 0 <= b < m,
                 "theta entry out of range: %r" % (ent,))
        theta[i][j][a][b] = parse_scalar(ent[4])
    return Representation(m, rho, theta)


def cocycle_to_json(c: Cocycle23, algebra_dim: int, space_dim: int) -> dict:
    g1 = []
    g2 = []
    n, m = algebra_dim, space_dim
    for i in range(n):
        for j in range(n):
            for k, v in enumerate(c.gamma1[i][j]):
                if v:
                    g1.append([i, j, k, dump_scalar(v)])
            for k in range(n):
                for l, v in enumerate(c.gamma2[i][j][k]):
                    if v:
                        g2.append([i, j, k, l, dump_scalar(v)])
    return {"kind": "cocycle", "algebra_dim": n, "space_dim": m,
            "gamma1": g1, "gamma2": g2}


def cocycle_from_json(d: dict) -> Cocycle23:
    _require(isinstance(d, dict) and "algebra_dim" in d and "space_dim" in d,
             "cocycle JSON needs algebra_dim and space_dim")
    n = int(d["algebra_dim"])
    m = int(d["space_dim"])
    g1 = [[zero_vec(m) for _ in range(n)] for _ in range(n)]
    g2 = [[[zero_vec(m) for _ in range(n)] for _ in range(n)]
          for _ in range(n)]
    for ent in d.get("gamma1", []):
        _require(len(ent) == 4, "gamma1 entries are [i,j,k,value]")
        i, j, k = (int(x) for x in ent[:3])
        _require(0 <= i < n and 0 <= j < n and 0 <= k < m,
                 "gamma1 entry out of range: %r" % (ent,))
        g1[i][j][k] = parse_scalar(ent[3])
    for ent in d.get("gamma2", []):
        _require(len(ent) == 5, "gamma2 entries are [i,j,k,l,value]")
        i, j, k, l = (int(x) for x in ent[:4])
        _require(0 <= i < n and 0 <= j < n and 0 <= k < n and 0 <= l < m,
                 "gamma2 entry out of range: %r" % (ent,))
        g2[i][j][k][l] = parse_scalar(ent[4])
    return Cocycle23(g1, g2)


# ---------------------------------------------------------------------------
# contexts

def _family_to_json(family) -> list:
    out = []
    for a, mtx in enumerate(family):
        for r, row in enumerate(mtx):
            for c, v in enumerate(row):
                if v:
                    out.append([a, r, c, dump_scalar(v)])
    return out


def _family_from_json(entries, order, rows, cols) -> list:
    fam = [zeros(rows, cols) for _ in range(order)]
    for ent in entries:
        _require(len(ent) == 4, "family entries are [alpha,row,col,value]")
        a, r, c = (int(x) for x in ent[:3])
        _require(0 <= a < order and 0 <= r < rows and 0 <= c < cols,
                 "family entry out of range: %r" % (ent,))
        fam[a][r][c] = parse_scalar(ent[3])
    return fam


def context_to_json(ctx: TwistedRBContext) -> dict:
    return {
        "kind": "context",
        "algebra": ly_to_json(ctx.algebra),
        "representation": representation_to_json(ctx.rep, ctx.dimL),
        "cocycle": cocycle_to_json(ctx.cocycle, ctx.dimL, ctx.dimV),
        "semigroup": semigroup_to_json(ctx.semigroup),
        "family": _family_to_json(ctx.family),
    }


def context_from_json(d: dict, base_dir: str = ".") -> TwistedRBContext:
    _require(isinstance(d, dict), "context JSON must be an object")

    def comp(key):
        v = d.get(key)
        _require(v is not None, "context JSON needs %r" % key)
        if isinstance(v, str):
            return load_json(os.path.join(base_dir, v))
        return v

    A = ly_from_json(comp("algebra"))
    r = representation_from_json(comp("representation"))
    c = cocycle_from_json(comp("cocycle"))
    s = semigroup_from_json(comp("semigroup"))
    fam = _family_from_json(d.get("family", []), s.order, A.dim, r.space_dim)
    return TwistedRBContext(A, r, c, s, fam)


# ---------------------------------------------------------------------------
# splitting-family algebras

def ns_family_to_json(N: NSFamilyAlgebra) -> dict:
    n, M = N.dim, N.semigroup.order
    bullet = []
    vee = []
    curly = []
    square = []
    for a in range(M):
        for i in range(n):
            for j in range(n):
                for k, v in enumerate(N.bullet[a][i][j]):
                    if v:
                        bullet.append([a, i, j, k, dump_scalar(v)])
    for a in range(M):
        for b in range(M):
            for i in range(n):
                for j in range(n):
                    for k, v in enumerate(N.vee[a][b][i][j]):
                        if v:
                            vee.append([a, b, i, j, k, dump_scalar(v)])
                    for k in range(n):
                        for l, v in enumerate(N.ternary_curly[a][b][i][j][k]):
                            if v:
                                curly.append([a, b, i, j, k, l, dump_scalar(v)])
    for a in range(M):
        for b in range(M):
            for g in range(M):
                for i in range(n):
                    for j in range(n):
                        for k in range(n):
                            for l, v in enumerate(
                                    N.ternary_square[a][b][g][i][j][k]):
                                if v:
                                    square.append(
                                        [a, b, g, i, j, k, l, dump_scalar(v)])
    return {"kind": "ns-family", "dim": n,
            "semigroup": semigroup_to_json(N.semigroup),
            "bullet": bullet, "vee": vee, "curly": curly, "square": square}


def ns_family_from_json(d: dict) -> NSFamilyAlgebra:
    _require(isinstance(d, dict) and "dim" in d and "semigroup" in d,
             "splitting-family JSON needs dim and semigroup")
    n = int(d["dim"])
    s = semigroup_from_json(d["semigroup"])
    M = s.order
    bullet = [[[zero_vec(n) for _ in range(n)] for _ in range(n)]
              for _ in range(M)]
    vee = [[[[zero_vec(n) for _ in range(n)] for _ in range(n)]
            for _ in range(M)] for _ in range(M)]
    curly = [[[[[zero_vec(n) for _ in range(n)] for _ in range(n)]
               for _ in range(n)] for _ in range(M)] for _ in range(M)]
    square = [[[[[[zero_vec(n) for _ in range(n)] for _ in range(n)]
                 for _ in range(n)] for _ in range(M)] for _ in range(M)]
              for _ in range(M)]
    for ent in d.get("bullet", []):
        a, i, j, k = (int(x) for x in ent[:4])
        bullet[a][i][j][k] = parse_scalar(ent[4])
    for ent in d.get("vee", []):
        a, b, i, j, k = (int(x) for x in ent[:5])
        vee[a][b][i][j][k] = parse_scalar(ent[5])
    for ent in d.get("curly", []):
        a, b, i, j, k, l = (int(x) for x in ent[:6])
        curly[a][b][i][j][k][l] = parse_scalar(ent[6])
    for ent in d.get("square", []):
        a, b, g, i, j, k, l = (int(x) for x in ent[:7])
        square[a][b][g][i][j][k][l] = parse_scalar(ent[7])
    return NSFamilyAlgebra(dim=n, semigroup=s, bullet=bullet, vee=vee,
                           ternary_curly=curly, ternary_square=square)


# ---------------------------------------------------------------------------
# indexed algebras

def omega_ly_to_json(O: OmegaLYAlgebra) -> dict:
    n, M = O.dim, O.semigroup.order
    binary = []
    ternary = []
    for a in range(M):
        for b in range(M):
            for i in range(n):
                for j in range(n):
                    for k, v in enumerate(O.binary[a][b][i][j]):
                        if v:
                            binary.append([a, b, i, j, k, dump_scalar(v)])
    for a in range(M):
        for b in range(M):
            for g in range(M):
                for i in range(n):
                    for j in range(n):
                        for k in range(n):
                            for l, v in enumerate(O.ternary[a][b][g][i][j][k]):
                                if v:
                                    ternary.append(
                                        [a, b, g, i, j, k, l, dump_scalar(v)])
    return {"kind": "omega-ly", "dim": n,
            "semigroup": semigroup_to_json(O.semigroup),
            "binary": binary, "ternary": ternary}


def omega_ly_from_json(d: dict) -> OmegaLYAlgebra:
    from .omega import zero_omega_ly
    _require(isinstance(d, dict) and "dim" in d and "semigroup" in d,
             "indexed-algebra JSON needs dim and semigroup")
    s = semigroup_from_json(d["semigroup"])
    O = zero_omega_ly(int(d["dim"]), s)
    for ent in d.get("binary", []):
        a, b, i, j, k = (int(x) for x in ent[:5])
        O.binary[a][b][i][j][k] = parse_scalar(ent[5])
    for ent in d.get("ternary", []):
        a, b, g, i, j, k, l = (int(x) for x in ent[:7])
        O.ternary[a][b][g][i][j][k][l] = parse_scalar(ent[7])
    return O


# ---------------------------------------------------------------------------
# cochains and deformation directions

def cochain_to_json(c: CochainFamily) -> dict:
    entries = []
    M, nA = c.semigroup.order, c.dim_alg
    if c.degree == 1:
        for a in range(M):
            for row in range(c.dim_coeff):
                for col in range(nA):
                    v = c.even[a][row][col]
                    if v:
                        entries.append([[a], [col], row, dump_scalar(v)])
        degree = 1
    else:
        import itertools
        ke, ko = c.degree
        for comp, k in ((c.even, ke), (c.odd, ko)):
            for alphas in itertools.product(range(M), repeat=k):
                for idxs in itertools.product(range(nA), repeat=k):
                    vec = comp_get(comp, M, nA, alphas, idxs)
                    for co, v in enumerate(vec):
                        if v:
                            entries.append([list(alphas), list(idxs), co,
                                            dump_scalar(v)])
        degree = list(c.degree)
    return {"kind": "cochain", "degree": degree, "dim_alg": c.dim_alg,
            "dim_coeff": c.dim_coeff,
            "semigroup": semigroup_to_json(c.semigroup), "entries": entries}


def cochain_from_json(d: dict) -> CochainFamily:
    _require(isinstance(d, dict) and "degree" in d, "cochain JSON needs degree")
    s = semigroup_from_json(d["semigroup"])
    degree = d["degree"]
    if degree != 1:
        degree = tuple(int(x) for x in degree)
    c = cochain_zero(s, int(d["dim_alg"]), int(d["dim_coeff"]), degree)
    M, nA = s.order, c.dim_alg
    for ent in d.get("entries", []):
        alphas, idxs, co = [int(x) for x in ent[0]], \
            [int(x) for x in ent[1]], int(ent[2])
        v = parse_scalar(ent[3])
        if degree == 1:
            _require(len(alphas) == 1 and len(idxs) == 1,
                     "degree-1 entries carry one index and one argument")
            c.even[alphas[0]][co][idxs[0]] = v
        else:
            ke, ko = degree
            _require(len(alphas) == len(idxs) and len(alphas) in (ke, ko),
                     "entry arity must match the degree: %r" % (ent,))
            comp = c.even if len(alphas) == ke else c.odd
            comp_get(comp, M, nA, alphas, idxs)[co] = v
    return c


def direction_to_json(family) -> dict:
    return {"kind": "direction", "order": len(family),
            "dim_l": len(family[0]) if family else 0,
            "dim_v": len(family[0][0]) if family and family[0] else 0,
            "family": _family_to_json(family)}


def direction_from_json(d: dict) -> list:
    _require(isinstance(d, dict) and "family" in d, "direction JSON needs family")
    return _family_from_json(d["family"], int(d["order"]),
                             int(d["dim_l"]), int(d["dim_v"]))


# ---------------------------------------------------------------------------
# files

KIND_SAVERS = {
    "semigroup": semigroup_to_json,
    "ly": ly_to_json,
    "context": context_to_json,
    "ns-family": ns_family_to_json,
    "omega-ly": omega_ly_to_json,
    "cochain": cochain_to_json,
}

KIND_LOADERS = {
    "semigroup": semigroup_from_json,
    "ly": ly_from_json,
    "representation": representation_from_json,
    "cocycle": cocycle_from_json,
    "context": context_from_json,
    "ns-family": ns_family_from_json,
    "omega-ly": omega_ly_from_json,
    "cochain": cochain_from_json,
    "direction": direction_from_json,
}


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError("cannot read %s: %s" % (path, exc))


def load_object(path: str, kind: str):
    d = load_json(path)
    _require(kind in KIND_LOADERS, "unknown kind %r" % kind)
    if isinstance(d, dict) and "kind" in d and d["kind"] != kind:
        raise MalformedInputError(
            "file %s declares kind %r, expected %r" % (path, d["kind"], kind))
    if kind == "context":
        return context_from_json(d, base_dir=os.path.dirname(path) or ".")
    return KIND_LOADERS[kind](d)


def save_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
