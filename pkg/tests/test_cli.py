import json

import pytest

from lyfam import serialize as sz
from lyfam.cli import main
from lyfam.rbfamily import identity_family
from lyfam import linalg as la
from lyfam.cohomology import RBFComplex, partial_deg0, DegreeZeroElement


@pytest.fixture
def files(tmp_path, a1, s2):
    a_path = tmp_path / "a1.json"
    s_path = tmp_path / "s2.json"
    sz.save_json(str(a_path), sz.ly_to_json(a1))
    sz.save_json(str(s_path), sz.semigroup_to_json(s2))
    ctx = identity_family(a1, s2)
    c_path = tmp_path / "ctx.json"
    sz.save_json(str(c_path), sz.context_to_json(ctx))
    return tmp_path, str(a_path), str(s_path), str(c_path), ctx


def test_validate_ok(files, capsys):
    _, a_path, s_path, c_path, _ = files
    assert main(["validate", a_path, "ly"]) == 0
    assert main(["validate", s_path, "semigroup"]) == 0
    assert main(["validate", c_path, "context"]) == 0


def test_validate_non_skew_exits_one(files, capsys):
    tmp, a_path, _, _, _ = files
    d = json.load(open(a_path))
    d["binary"].append([0, 0, 0, "1"])
    bad = tmp / "bad.json"
    json.dump(d, open(bad, "w"))
    assert main(["--json", "validate", str(bad), "ly"]) == 1
    out = json.loads(capsys.readouterr().out)
    laws = [v["law"] for v in out["payload"]]
    assert "invariant:skew-binary" in laws


def test_validate_malformed_exits_two(files):
    tmp, a_path, _, _, _ = files
    d = json.load(open(a_path))
    d["binary"].append([1, 0, 0, "1"])
    bad = tmp / "bad.json"
    json.dump(d, open(bad, "w"))
    assert main(["validate", str(bad), "ly"]) == 2
    notjson = tmp / "nj.json"
    notjson.write_text("{")
    assert main(["validate", str(notjson), "ly"]) == 2


def test_construct_identity_family_and_check(files, tmp_path):
    _, a_path, s_path, _, _ = files
    out = tmp_path / "built.json"
    assert main(["construct", "identity-family", a_path, s_path,
                 "-o", str(out)]) == 0
    assert main(["check-rbf", str(out)]) == 0
    assert main(["validate", str(out), "context"]) == 0


def test_construct_chain_to_indexed_algebra(files, tmp_path):
    _, _, _, c_path, _ = files
    ns = tmp_path / "ns.json"
    om = tmp_path / "om.json"
    assert main(["construct", "ns-from-rbf", c_path, "-o", str(ns)]) == 0
    assert main(["validate", str(ns), "ns-family"]) == 0
    assert main(["construct", "omega-from-ns", str(ns), "-o", str(om)]) == 0
    assert main(["validate", str(om), "omega-ly"]) == 0


def test_construct_rejects_non_jacobi(tmp_path):
    bad = tmp_path / "bil.json"
    sz.save_json(str(bad), {
        "kind": "bilinear", "dim": 3,
        "entries": [[0, 1, 2, "1"], [1, 0, 2, "-1"],
                    [0, 2, 0, "1"], [2, 0, 0, "-1"],
                    [1, 2, 1, "1"], [2, 1, 1, "-1"]]})
    out = tmp_path / "out.json"
    assert main(["construct", "ly-from-lie", str(bad), "-o", str(out)]) == 1


def test_corrupted_context_check_exits_one(files, tmp_path):
    _, _, _, c_path, ctx = files
    ctx.family[0][0][0] += 1
    bad = tmp_path / "badctx.json"
    sz.save_json(str(bad), sz.context_to_json(ctx))
    assert main(["check-rbf", str(bad)]) == 1


def test_cohomology_json_payload(files, capsys):
    _, _, _, c_path, _ = files
    assert main(["--json", "cohomology", c_path, "--h1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["payload"]["H1"] == 2
    assert out["payload"]["rigid"] is False


def test_cohomology_missing_unit_exits_one(tmp_path, a1):
    from lyfam.semigroup import FiniteCommutativeSemigroup
    s = FiniteCommutativeSemigroup(1, [[0]], unit=None)
    ctx = identity_family(a1, s)
    p = tmp_path / "ctx.json"
    sz.save_json(str(p), sz.context_to_json(ctx))
    assert main(["cohomology", str(p), "--h1"]) == 1


def test_deform_single_and_pair(files, tmp_path, capsys):
    _, _, _, c_path, ctx = files
    M = ctx.semigroup.order
    zero = [la.zeros(ctx.dimL, ctx.dimV) for _ in range(M)]
    z_path = tmp_path / "zero.json"
    sz.save_json(str(z_path), sz.direction_to_json(zero))
    assert main(["deform", c_path, str(z_path)]) == 0

    cx = RBFComplex(ctx)
    f = partial_deg0(cx, DegreeZeroElement(
        [(ctx.algebra.basis(0), ctx.algebra.basis(1))]))
    d_path = tmp_path / "d.json"
    sz.save_json(str(d_path), sz.direction_to_json(
        [[list(r) for r in f.even[a]] for a in range(M)]))
    assert main(["deform", c_path, str(d_path)]) == 0
    capsys.readouterr()
    assert main(["--json", "deform", c_path, str(d_path), str(z_path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["payload"]["equivalent"] is True

    bad = [la.zeros(ctx.dimL, ctx.dimV) for _ in range(M)]
    bad[0][0][0] = 1
    b_path = tmp_path / "bad.json"
    sz.save_json(str(b_path), sz.direction_to_json(bad))
    capsys.readouterr()
    assert main(["--json", "deform", c_path, str(b_path)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["payload"]["cocycle"] is False
    assert "first_violation" in out["payload"]


def test_seed_is_printed(files, capsys):
    _, a_path, _, _, _ = files
    assert main(["--seed", "123", "validate", a_path, "ly"]) == 0
    assert "seed: 123" in capsys.readouterr().err
