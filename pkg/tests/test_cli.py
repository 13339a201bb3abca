import json
import pathlib

import pytest

from adjquot.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden" / "report_schema.json"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_disc(capsys):
    code, out, _ = run(capsys, "disc", "--coeffs", "-6,11,-6")
    assert code == 0 and json.loads(out)["discriminant"] == "4"
    code, out, _ = run(capsys, "disc", "--coeffs", "0,0", "--chain", "1")
    assert json.loads(out)["equations"] == ["D_2(1, a1, a2)"]
    code, out, _ = run(capsys, "disc", "--symbolic", "--n", "2")
    assert json.loads(out)["discriminant"] == "-4*a0*a2 + a1^2"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--coeffs", "-6,13,-12,4")
    d = json.loads(out)
    assert d["partition"] == "(2,2)"
    (m,) = [m for m in d["memberships"] if m["variety"] == "D(2,2)"]
    assert m["verdict"] == "member" and m["residuals"]["printed_cubic"] == "48"


def test_chi_and_region(capsys):
    code, out, _ = run(capsys, "chi", "--n", "3", "--torus", "1,1", "--convention", "paper-display")
    assert json.loads(out)["chi"] == ["3", "3"]
    code, out, _ = run(capsys, "region", "--n", "3", "--point", "3,3", "--convention", "paper-display")
    assert json.loads(out)["region"] == "boundary"


def test_rank_and_bracket(capsys):
    code, out, _ = run(capsys, "rank", "--n", "3", "--point", "2,2,1/4")
    assert json.loads(out)["rank"] == 2
    code, out, _ = run(capsys, "bracket", "--n", "2", "--pair", "(1,0),(0,1)", "--at", "2,1/2")
    d = json.loads(out)
    assert d["verdict"]["status"] == "identity" and d["value"] == "-17/2*i"


def test_pendulum_and_potential(capsys):
    code, out, _ = run(capsys, "pendulum", "--map", "theta", "--t", "1", "--phi-rational", "1/2")
    assert json.loads(out)["uvw"] == ["3/5", "4/5", "1"]
    code, out, _ = run(capsys, "potential", "--torus", "1,i")
    assert json.loads(out)["potential"] == 0


def test_curve_csv(capsys, tmp_path):
    dest = tmp_path / "e.csv"
    code, _, _ = run(capsys, "curve", "--family", "ellipse", "--param", "t=0", "--count", "4",
                     "--format", "csv", "--out", str(dest))
    assert code == 0 and dest.read_text().splitlines()[0] == "phi,x,y"


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "disc", "--coeffs", "1,,x")[0] == 2
    assert run(capsys, "chi", "--torus", "1", "--convention", "full")[0] == 2
    assert run(capsys, "rank", "--n", "3", "--point", "1,2,3")[0] == 1
    with pytest.raises(SystemExit):
        main(["curve", "--family", "spiral"])


def test_verify_su2_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "su2")
    d = json.loads(out)
    assert code == 0 and d["summary"]["fail"] == 0 and d["summary"]["erratum"] == 0


def test_verify_su3_orbit_sum_flag(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "su3", "--convention", "full")
    d = json.loads(out)
    assert d["orbit_sum"] == "full"
    assert all(c["orbit_sum"] == "full" for c in d["checks"] if c["status"] == "erratum")


def _shape(obj):
    if isinstance(obj, dict):
        return {k: _shape(v) for k, v in sorted(obj.items())}
    if isinstance(obj, list):
        return "list"
    return type(obj).__name__


def _report_schema(report):
    check_keys = sorted({k for c in report["checks"] for k in c})
    return {
        "top": _shape({k: v for k, v in report.items() if k != "checks"}),
        "check_keys": check_keys,
        "statuses": sorted({c["status"] for c in report["checks"]}),
        "ids": [c["id"] for c in report["checks"]],
    }


def test_verify_all_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--suite", "all", "--seed", "7", "--out", str(a)]) == 0
    assert main(["verify", "--suite", "all", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert report["schema"] == 1
    assert [c["id"] for c in report["checks"]] == sorted(c["id"] for c in report["checks"])
    for c in report["checks"]:
        if c["status"] == "erratum":
            assert "printed" in c and ("oracle" in c or "corrected_relation" in c or "ansatz" in c)
    assert _report_schema(report) == json.loads(GOLDEN.read_text())
