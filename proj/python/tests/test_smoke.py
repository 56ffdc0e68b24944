import json
import os
import pathlib
import subprocess

import jsonschema
import numpy as np
import pytest

import zxr

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schemas" / "report.schema.json").read_text())

H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)


def proportional(a, b, tol=1e-9):
    a = a / np.abs(a).max()
    b = b / np.abs(b).max()
    k = np.unravel_index(np.abs(b).argmax(), b.shape)
    return np.abs(a - (a[k] / b[k]) * b).max() <= tol


def test_evaluate_h_box():
    d = zxr.Diagram.load(str(ROOT / "data" / "h.zxd"))
    assert d.evaluate().shape == (2, 2)
    assert proportional(d.evaluate(), H)


def test_euler_chain_only_in_model_one():
    h = zxr.Diagram.load(str(ROOT / "data" / "h.zxd"))
    e = zxr.Diagram.load(str(ROOT / "data" / "euler.zxd"))
    assert zxr.equal_up_to_scalar(h.evaluate(1), e.evaluate(1))
    assert not zxr.equal_up_to_scalar(h.evaluate(2), e.evaluate(2))


def test_triangle_state_signs():
    g = zxr.Graph.parse((ROOT / "data" / "triangle.edges").read_text())
    v = g.graph_state().evaluate()[:, 0]
    bits = [(x >> 2 & 1, x >> 1 & 1, x & 1) for x in range(8)]
    want = np.array([(-1) ** (a * b + b * c + a * c) for a, b, c in bits], dtype=complex)
    assert proportional(v, want)


def test_rewrite_and_gate():
    d = zxr.Diagram.load(str(ROOT / "data" / "fusable.zxd"))
    out = d.apply("spider-fuse", ["a", "b"])
    assert out.node_count() == d.node_count() - 1
    assert "z 1/2" in out.to_zxd()
    h = zxr.Diagram.load(str(ROOT / "data" / "h.zxd"))
    with pytest.raises(zxr.GateError):
        h.apply("euler", ["h"])
    assert h.apply("euler", ["h"], enable_euler=True).node_count() == 5
    with pytest.raises(zxr.MatchError):
        d.apply("hopf", ["a", "b"])


def test_parse_error():
    with pytest.raises(zxr.ParseError):
        zxr.Diagram.load(str(ROOT / "data" / "syntax-error.zxd"))


def test_local_complement_and_vdn():
    g = zxr.Graph.parse((ROOT / "data" / "triangle.edges").read_text())
    assert g.local_complement("u").edge_list() == [("u", "v"), ("u", "w")]
    assert all(g.check_vdn(v) and g.check_fixpoint(v) for v in g.vertices)


def test_replay_shipped_script():
    out = zxr.replay_script(str(ROOT / "proofs" / "fixpoint-s3.json"))
    star = zxr.Graph.parse("vertices c l1 l2\nedge c l1\nedge c l2\n").graph_state()
    assert out.iso_equal(star)


def test_independence_report_validates():
    report = json.loads(zxr.independence_report())
    jsonschema.validate(report, SCHEMA)
    assert report["passed"]
    euler = {r["model_n"]: r for r in report["rows"] if r["axiom"] == "euler"}
    assert euler[1]["holds"] and not euler[2]["holds"]


def _cli():
    p = pathlib.Path(os.environ.get("ZXR_CLI", ROOT / "build" / "zxr"))
    if not p.exists():
        pytest.skip("zxr binary not built")
    return p


@pytest.mark.parametrize("suite", ["independence", "axioms", "vdn", "fixpoint"])
def test_cli_reports_validate(tmp_path, suite):
    out = tmp_path / "report.json"
    args = [str(_cli()), "verify", suite, "--json", str(out)]
    if suite in ("vdn", "fixpoint"):
        args += ["--max-vertices", "4"]
    rc = subprocess.run(args, capture_output=True).returncode
    report = json.loads(out.read_text())
    jsonschema.validate(report, SCHEMA)
    assert rc == (0 if report["passed"] else 1)
    assert report["passed"]


def test_cli_check_equal_report(tmp_path):
    out = tmp_path / "eq.json"
    rc = subprocess.run(
        [str(_cli()), "--model-n", "2", "check-equal", str(ROOT / "data" / "h.zxd"), str(ROOT / "data" / "euler.zxd"),
         "--json", str(out)],
        capture_output=True,
    ).returncode
    report = json.loads(out.read_text())
    jsonschema.validate(report, SCHEMA)
    assert rc == 1 and not report["passed"]
