import json
import subprocess
import sys

from figures import FIG1, FIG4_BOTTOM, FIG4_TOP, FIG5_BOTTOM, FIG5_TOP
from ncpb import closed_forms as cf
from ncpb.cli import main
from ncpb.harness import REGISTRY
from ncpb.poly import X
from ncpb.serialize import colored_doc, dumps, parse_colored, parse_partition, partition_doc


def run(argv, capsys, **kw):
    code = main(argv, **kw)
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(dumps(doc))
    return str(path)


def test_count(capsys):
    code, out, _ = run(["count", "--n-max", "3"], capsys)
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert [r[1] for r in rows] == ["2", "6", "20"]
    assert rows[2][2] == "1,9,9,1"


def test_enumerate(capsys):
    code, out, _ = run(["enumerate", "--n", "2"], capsys)
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(["enumerate", "--n", "2", "--matchlike", "--json"], capsys)
    docs = json.loads(out)
    assert sorted(map(str, (parse_partition(json.dumps(d)) for d in docs))) == \
        ["{1,-2}{2,-1}", "{1,2}{-1,-2}"]
    code, _, err = run(["enumerate", "--n", "4", "--k", "1", "--matchlike"], capsys)
    assert code == 2 and "SpecError" in err


def test_verify_pass(capsys):
    code, out, _ = run(["verify", "--identity", "i1", "--n-max", "5"], capsys)
    assert code == 0
    assert "overall: pass (1/1)" in out


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--identity", "bi", "--n-max", "2", "--json"], capsys)
    recs = json.loads(out)
    assert code == 0
    assert recs[2]["id"] == "bi" and recs[2]["n"] == 2 and recs[2]["verdict"] == "pass"
    assert {v["poly"] for v in recs[2]["values"]} == {"1 - 6*x + 6*x^2"}


def test_verify_guard(capsys, monkeypatch):
    monkeypatch.delenv("NCPB_GUARD_OVERRIDE", raising=False)
    code, _, err = run(["verify", "--identity", "i6", "--n-max", "6"], capsys)
    assert code == 2 and "CostGuardError" in err


def test_verify_perturbed(capsys):
    bad = REGISTRY["i1"].with_evaluator("closed RHS", lambda n: cf.i1_rhs(n) + X ** n)
    reg = dict(REGISTRY, i1=bad)
    code, out, err = run(["verify", "--identity", "i1", "--n-max", "3"], capsys, registry=reg)
    assert code == 1
    assert "witness n=0" in out
    assert "i1 failed" in err


def test_reiner_encode_decode(capsys, tmp_path):
    code, out, _ = run(["reiner", "encode", "--n", "10", "--left", "2,5,7,8",
                        "--right", "1,3,6,10"], capsys)
    assert code == 0
    assert json.loads(out)["blocks"] == [[1, -7], [2, 3], [4, -4], [5, 6], [7, -1], [8, 9, 10],
                                         [-2, -3], [-5, -6], [-8, -9, -10]]
    path = write(tmp_path, "fig1.json", partition_doc(FIG1))
    code, out, _ = run(["reiner", "decode", "--input", path], capsys)
    assert json.loads(out) == {"n": 8, "left": [3, 6, 7, 8], "right": [1, 3, 4, 8]}
    code, _, err = run(["reiner", "encode", "--n", "3", "--left", "1", "--right", "1,2"], capsys)
    assert code == 2 and "PairSizeError" in err


def test_involution(capsys, tmp_path):
    path = write(tmp_path, "top.json", partition_doc(FIG4_TOP))
    code, out, _ = run(["involution", "--which", "rho", "--input", path, "--trace"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert parse_partition(json.dumps(doc["result"])) == FIG4_BOTTOM
    assert doc["trace"]["critical_point"] == 1
    assert doc["trace"]["target_block"] == [2, 3, -8]
    path = write(tmp_path, "fig5.json", colored_doc(FIG5_TOP))
    code, out, _ = run(["involution", "--which", "theta", "--input", path], capsys)
    assert parse_colored(out) == FIG5_BOTTOM


def test_involution_fixed_set(capsys, tmp_path):
    path = write(tmp_path, "a2.json", {"n": 2, "blocks": [[1, 2], [-1, -2]]})
    code, _, err = run(["involution", "--which", "eta", "--input", path], capsys)
    assert code == 2 and "FixedSetError" in err


def test_bad_input(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 2, "blocks": [[1], [-1]]}')
    code, _, err = run(["render", "--input", str(path), "--style", "linear",
                        "--out", str(tmp_path / "x.svg")], capsys)
    assert code == 2 and "not covered" in err
    code, _, err = run(["reiner", "decode", "--input", str(tmp_path / "nope.json")], capsys)
    assert code == 2


def test_render(capsys, tmp_path):
    path = write(tmp_path, "fig1.json", partition_doc(FIG1))
    out = tmp_path / "fig1.svg"
    code, stdout, err = run(["render", "--input", path, "--style", "cyclic", "--out", str(out)],
                            capsys)
    assert code == 0 and stdout == ""
    assert out.read_text().count('class="chord"') == 9


def test_usage_errors(capsys):
    code, _, err = run(["count"], capsys)
    assert code == 2 and "usage" in err
    code, _, err = run(["enumerate", "--n", "2", "--bogus"], capsys)
    assert code == 2 and "unrecognized" in err


def test_module_entry_and_stdin():
    doc = dumps(partition_doc(FIG4_BOTTOM))
    proc = subprocess.run([sys.executable, "-m", "ncpb", "involution", "--which", "rho",
                           "--input", "-"], input=doc, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert parse_partition(proc.stdout) == FIG4_TOP


def test_env_override(monkeypatch, capsys):
    monkeypatch.setenv("NCPB_GUARD_OVERRIDE", "1")
    code, out, _ = run(["verify", "--identity", "dawson", "--n-max", "9"], capsys)
    assert code == 0 and "overall: pass" in out
