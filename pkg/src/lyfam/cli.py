"""Command-line front end.

Verbs: validate, construct, check-rbf, cohomology, deform.  Exit codes:
0 for a clean run, 1 for domain violations (failed laws, precondition or
budget errors), 2 for malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import serialize
from .cohomology import (DeformationDirection, RBFComplex, check_infinitesimal,
                         cohomology_H1, cohomology_H23, rigidity_certificate,
                         _linearized_report, deformation_equivalence_witness)
from .errors import (BudgetExceededError, ConsistencyError, LyfamError,
                     MalformedInputError, PreconditionError)
from .ly import (adjoint_representation, check_cocycle23, check_ly_axioms,
                 check_representation, gamma_ad, ly_from_leibniz, ly_from_lie,
                 ly_tensor_semigroup)
from .nsfamily import (check_ns_family_axioms, ns_from_twisted_rb,
                       ns_tensor_semigroup)
from .omega import (check_omega_ly_axioms, cochain_skew_report,
                    omega_ly_from_ns_family, omega_cohomology_dims)
from .rbfamily import (bar_operator, check_nijenhuis_family,
                       check_twisted_rb_family, identity_family,
                       nijenhuis_induced_context, semidirect_product)
from .semigroup import validate_semigroup


def _emit(args, status, summary, payload=None):
    """Print one CommandResult; returns its exit code."""
    if args.json:
        out = {"status": status, "summary": summary}
        if payload is not None:
            out["payload"] = payload
        print(json.dumps(out, indent=1))
    else:
        print(summary)
        if payload is not None and status != "ok":
            print(json.dumps(payload, indent=1))
    return {"ok": 0, "violations": 1, "error": 2}[status]


def _report_payload(rep):
    return rep.to_json()


# ---------------------------------------------------------------------------
# validate

def _validate_object(path, kind):
    """Load and fully check one file; returns a checker report (or None)."""
    obj = serialize.load_object(path, kind)
    if kind == "semigroup":
        return validate_semigroup(obj)
    if kind == "ly":
        rep = obj.invariant_report()
        rep.extend(check_ly_axioms(obj))
        return rep
    if kind == "context":
        return obj.validate()
    if kind == "ns-family":
        rep = obj.invariant_report()
        rep.extend(check_ns_family_axioms(obj))
        return rep
    if kind == "omega-ly":
        rep = obj.invariant_report()
        rep.extend(check_omega_ly_axioms(obj))
        return rep
    if kind == "cochain":
        return cochain_skew_report(obj)
    # representation / cocycle / direction files carry no self-contained
    # laws; a successful parse is the whole check.
    return None


def cmd_validate(args):
    rep = _validate_object(args.path, args.kind)
    if rep is None or rep.ok:
        return _emit(args, "ok", "%s: ok (%s)" % (args.path, args.kind))
    return _emit(args, "violations",
                 "%s: %d violation(s) in laws %s"
                 % (args.path, len(rep.violations), sorted(rep.laws())),
                 _report_payload(rep))


# ---------------------------------------------------------------------------
# construct

def _load_bilinear(path):
    """{"kind": "bilinear", "dim": n, "entries": [[i, j, k, value]]}."""
    d = serialize.load_json(path)
    if not isinstance(d, dict) or "dim" not in d:
        raise MalformedInputError("bilinear JSON needs dim")
    n = int(d["dim"])
    from .linalg import zero_vec
    t = [[zero_vec(n) for _ in range(n)] for _ in range(n)]
    for ent in d.get("entries", []):
        i, j, k = (int(x) for x in ent[:3])
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise MalformedInputError("bilinear entry out of range: %r" % (ent,))
        t[i][j][k] = serialize.parse_scalar(ent[3])
    return t


def _checked(report, what):
    if not report.ok:
        raise PreconditionError(
            "%s fails re-verification: %s" % (what, sorted(report.laws())))


def _run_recipe(recipe, inputs):
    """Build the requested object, re-verify it, return (payload, summary)."""

    def need(k):
        if len(inputs) != k:
            raise MalformedInputError(
                "recipe %r takes %d input file(s), got %d"
                % (recipe, k, len(inputs)))

    if recipe == "ly-from-lie":
        need(1)
        A = ly_from_lie(_load_bilinear(inputs[0]))
        _checked(check_ly_axioms(A), "constructed algebra")
        return serialize.ly_to_json(A), "algebra of dim %d" % A.dim
    if recipe == "ly-from-leibniz":
        need(1)
        A = ly_from_leibniz(_load_bilinear(inputs[0]))
        _checked(check_ly_axioms(A), "constructed algebra")
        return serialize.ly_to_json(A), "algebra of dim %d" % A.dim
    if recipe == "tensor-semigroup":
        need(2)
        A = serialize.load_object(inputs[0], "ly")
        s = serialize.load_object(inputs[1], "semigroup")
        B = ly_tensor_semigroup(A, s)
        _checked(check_ly_axioms(B), "tensor algebra")
        return serialize.ly_to_json(B), "algebra of dim %d" % B.dim
    if recipe == "adjoint":
        need(1)
        A = serialize.load_object(inputs[0], "ly")
        r = adjoint_representation(A)
        _checked(check_representation(A, r), "adjoint representation")
        return (serialize.representation_to_json(r, A.dim),
                "representation on dim %d" % r.space_dim)
    if recipe == "gamma-ad":
        need(1)
        A = serialize.load_object(inputs[0], "ly")
        c = gamma_ad(A)
        _checked(check_cocycle23(A, adjoint_representation(A), c),
                 "adjoint twist")
        return (serialize.cocycle_to_json(c, A.dim, A.dim),
                "cocycle pair on dim %d" % A.dim)
    if recipe == "identity-family":
        need(2)
        A = serialize.load_object(inputs[0], "ly")
        s = serialize.load_object(inputs[1], "semigroup")
        ctx = identity_family(A, s)
        _checked(ctx.validate(), "context data")
        _checked(check_twisted_rb_family(ctx), "identity family")
        return serialize.context_to_json(ctx), "context (dims %d, %d)" % (
            ctx.dimL, ctx.dimV)
    if recipe == "nijenhuis-context":
        need(3)
        A = serialize.load_object(inputs[0], "ly")
        s = serialize.load_object(inputs[1], "semigroup")
        N = serialize.load_object(inputs[2], "direction")
        _checked(check_nijenhuis_family(A, s, N), "deformation-operator family")
        ctx = nijenhuis_induced_context(A, s, N)
        _checked(ctx.validate(), "context data")
        _checked(check_twisted_rb_family(ctx), "induced family")
        return serialize.context_to_json(ctx), "context (dims %d, %d)" % (
            ctx.dimL, ctx.dimV)
    if recipe == "ns-from-rbf":
        need(1)
        ctx = serialize.load_object(inputs[0], "context")
        N = ns_from_twisted_rb(ctx)
        _checked(check_ns_family_axioms(N), "splitting family")
        return serialize.ns_family_to_json(N), "splitting family of dim %d" % N.dim
    if recipe == "ns-tensor":
        need(1)
        N = serialize.load_object(inputs[0], "ns-family")
        _checked(check_ns_family_axioms(N), "input splitting family")
        T = ns_tensor_semigroup(N)
        _checked(check_ns_family_axioms(T), "tensor algebra")
        return serialize.ns_family_to_json(T), "algebra of dim %d" % T.dim
    if recipe == "omega-from-ns":
        need(1)
        N = serialize.load_object(inputs[0], "ns-family")
        O = omega_ly_from_ns_family(N)
        _checked(check_omega_ly_axioms(O), "indexed algebra")
        return serialize.omega_ly_to_json(O), "indexed algebra of dim %d" % O.dim
    if recipe == "semidirect":
        need(3)
        A = serialize.load_object(inputs[0], "ly")
        r = serialize.load_object(inputs[1], "representation")
        c = serialize.load_object(inputs[2], "cocycle")
        _checked(check_representation(A, r), "representation input")
        _checked(check_cocycle23(A, r, c), "cocycle input")
        B = semidirect_product(A, r, c)
        _checked(check_ly_axioms(B), "semidirect algebra")
        return serialize.ly_to_json(B), "algebra of dim %d" % B.dim
    if recipe == "bar-operator":
        need(1)
        ctx = serialize.load_object(inputs[0], "context")
        bar = bar_operator(ctx)
        _checked(bar.validate(), "context data")
        _checked(check_twisted_rb_family(bar), "collapsed operator")
        return serialize.context_to_json(bar), "context (dims %d, %d)" % (
            bar.dimL, bar.dimV)
    raise MalformedInputError("unknown recipe %r" % recipe)


def cmd_construct(args):
    payload, what = _run_recipe(args.recipe, args.inputs)
    serialize.save_json(args.output, payload)
    return _emit(args, "ok", "wrote %s: %s" % (args.output, what))


# ---------------------------------------------------------------------------
# check-rbf

def cmd_check_rbf(args):
    ctx = serialize.load_object(args.path, "context")
    rep = ctx.validate()
    rep.extend(check_twisted_rb_family(ctx))
    if rep.ok:
        return _emit(args, "ok", "%s: twisted family equations hold" % args.path)
    return _emit(args, "violations",
                 "%s: %d violation(s) in laws %s"
                 % (args.path, len(rep.violations), sorted(rep.laws())),
                 _report_payload(rep))


# ---------------------------------------------------------------------------
# cohomology

def cmd_cohomology(args):
    ctx = serialize.load_object(args.path, "context")
    cx = RBFComplex(ctx)
    result = {}
    summary = []
    if args.h1 or not (args.h1 or args.h23 or args.max_n):
        dim, reps = cohomology_H1(cx)
        result["H1"] = dim
        result["rigid"] = rigidity_certificate(cx) if dim == 0 else False
        result["representatives"] = [serialize.cochain_to_json(c)
                                     for c in reps]
        summary.append("H1=%d" % dim)
        summary.append("rigid" if result["rigid"] else "non-rigid")
    if args.h23:
        result["H23"] = cohomology_H23(cx, args.budget)
        summary.append("H23=%d" % result["H23"])
    if args.max_n:
        dims = omega_cohomology_dims(cx.induced_algebra, cx.induced_rep,
                                     args.max_n, args.budget)
        result["generic_dims"] = dims
        summary.append("generic=%s" % (dims,))
    return _emit(args, "ok", "%s: %s" % (args.path, " ".join(summary)),
                 result)


# ---------------------------------------------------------------------------
# deform

def cmd_deform(args):
    ctx = serialize.load_object(args.path, "context")
    cx = RBFComplex(ctx)
    d1 = DeformationDirection(serialize.load_object(args.t1, "direction"))
    if args.t2 is None:
        f = d1.as_cochain(ctx)
        verdict = check_infinitesimal(cx, f)
        if verdict:
            return _emit(args, "ok", "cocycle: true", {"cocycle": True})
        rep = _linearized_report(cx, f)
        first = rep.violations[0]
        return _emit(args, "violations",
                     "cocycle: false (first violated tuple: %s %s)"
                     % (first.law, first.witness),
                     {"cocycle": False, "first_violation": {
                         "law": first.law, "witness": list(first.witness)}})
    d2 = DeformationDirection(serialize.load_object(args.t2, "direction"))
    w = deformation_equivalence_witness(cx, d1, d2)
    if w is None:
        return _emit(args, "violations", "inequivalent",
                     {"equivalent": False})
    terms = [[[serialize.dump_scalar(v) for v in a],
              [serialize.dump_scalar(v) for v in b]] for a, b in w.terms]
    return _emit(args, "ok", "equivalent (%d witness term(s))" % len(terms),
                 {"equivalent": True, "witness": terms})


# ---------------------------------------------------------------------------
# dispatch

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lyfam",
        description="Validate, construct, and analyze bracket structures "
                    "with semigroup-indexed operator families.")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for any randomized work (printed for replay)")
    p.add_argument("--budget", type=int, default=None,
                   help="coordinate budget for large computations")
    p.add_argument("--json", action="store_true",
                   help="machine-readable output")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("validate", help="check one JSON file against its laws")
    v.add_argument("path")
    v.add_argument("kind", choices=sorted(serialize.KIND_LOADERS))
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("construct", help="run a construction recipe")
    c.add_argument("recipe", choices=[
        "ly-from-lie", "ly-from-leibniz", "tensor-semigroup", "adjoint",
        "gamma-ad", "identity-family", "nijenhuis-context", "ns-from-rbf",
        "ns-tensor", "omega-from-ns", "semidirect", "bar-operator"])
    c.add_argument("inputs", nargs="*")
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(func=cmd_construct)

    r = sub.add_parser("check-rbf", help="check the operator family equations")
    r.add_argument("path")
    r.set_defaults(func=cmd_check_rbf)

    h = sub.add_parser("cohomology", help="cohomology of a context")
    h.add_argument("path")
    h.add_argument("--h1", action="store_true")
    h.add_argument("--h23", action="store_true")
    h.add_argument("--max-n", type=int, default=0, dest="max_n")
    h.set_defaults(func=cmd_cohomology)

    d = sub.add_parser("deform", help="first-order deformation checks")
    d.add_argument("path")
    d.add_argument("t1")
    d.add_argument("t2", nargs="?", default=None)
    d.set_defaults(func=cmd_deform)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    seed = args.seed if args.seed is not None else random.randrange(2 ** 32)
    random.seed(seed)
    print("seed: %d" % seed, file=sys.stderr)
    if args.budget is not None:
        import os
        os.environ["LYFAM_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        return _emit(args, "error", "malformed input: %s" % exc)
    except (PreconditionError, BudgetExceededError, ConsistencyError,
            LyfamError) as exc:
        code = _emit(args, "violations", "error: %s" % exc)
        return code
    except (OSError,) as exc:
        return _emit(args, "error", "i/o error: %s" % exc)


if __name__ == "__main__":
    raise SystemExit(main())
