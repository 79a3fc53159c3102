import json
import subprocess
import sys

import pytest

from toric_arrangements.cli import run
from toric_arrangements.verify import Limits, suite_bandscan, verify_all
from toric_arrangements.stability import D


def call(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(stdin)))
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_kcomplex(tmp_path, capsys):
    path = write(tmp_path, {"n": 3, "I": [[0, 1], [0, 2], [1, 2]]})
    code, out = call(capsys, ["kcomplex", "--input", path])
    assert code == 0
    assert json.loads(out) == {"n": 3, "faces": [[], [0], [1], [2]]}


def test_kcomplex_stdin(capsys, monkeypatch):
    code, out = call(capsys, ["kcomplex", "--input", "-"], {"n": 3, "I": [[0, 1, 2]]}, monkeypatch)
    assert code == 0
    assert len(json.loads(out)["faces"]) == 7


def test_fan_primitive_rsigma_rmin(tmp_path, capsys):
    path = write(tmp_path, {"n": 3, "I": [[0, 1]], "strict": True})
    assert json.loads(call(capsys, ["fan", "-i", path])[1])["cones"] == [[], [0], [1], [2], [0, 2], [1, 2]]
    assert json.loads(call(capsys, ["primitive", "-i", path])[1])["primitive"] == [[0, 1]]
    assert json.loads(call(capsys, ["rsigma", "-i", path])[1]) == {"r_sigma": 2}
    assert json.loads(call(capsys, ["rmin", "-i", path])[1]) == {"r_min": 2}


def test_stabdim(capsys):
    code, out = call(capsys, ["stabdim", "--r-min", "3", "--d", "2"])
    assert code == 0 and json.loads(out) == {"D": 4}
    code, out = call(capsys, ["stabdim", "--r-min", "3", "--d", "2", "--n", "3"])
    assert json.loads(out) == {"D": 4, "Dstar": 8}


def test_bandscan(capsys):
    code, out = call(capsys, ["bandscan", "--r-min", "3", "--d", "2"])
    doc = json.loads(out)
    assert code == 0
    assert doc["agree"] and doc["closed_form"] == 4 and doc["answer"] == 4
    assert doc["min_contaminated_s_minus_k"] == 5
    assert {"k", "s", "state"} == set(doc["cells"][0])
    code, out = call(capsys, ["bandscan", "--r-min", "3", "--d", "1", "--mode", "projective", "--summary"])
    doc = json.loads(out)
    assert code == 0 and doc["answer"] == 5 and "cells" not in doc


def test_holcheck(tmp_path, capsys):
    doc = {"n": 2, "I": [[0, 1]], "map": {"d": 1, "n": 2, "form": "roots",
                                          "components": [[["0+0*i", 1]], [["1+0*i", 1]]]}}
    code, out = call(capsys, ["holcheck", "-i", write(tmp_path, doc)])
    assert code == 0 and json.loads(out) == {"in_E": True, "in_hol": True}
    doc["map"] = {"d": 2, "n": 2, "form": "coeffs",
                  "components": [["0+0*i", "0+0*i"], ["0+0*i", "1+0*i"]]}
    code, out = call(capsys, ["holcheck", "-i", write(tmp_path, doc)])
    assert code == 0 and json.loads(out) == {"in_hol": False}


def test_stabilize(tmp_path, capsys):
    doc = {"d": 1, "n": 2, "form": "roots", "components": [[["0+0*i", 1]], [["1/2+0*i", 1]]]}
    code, out = call(capsys, ["stabilize", "-i", write(tmp_path, doc)])
    assert code == 0
    assert json.loads(out) == {"d": 2, "n": 2, "form": "roots", "components": [
        [["0+0*i", 1], ["3/2+0*i", 1]], [["1/2+0*i", 1], ["3/2+1*i", 1]]]}
    bad = {"d": 1, "n": 2, "form": "roots", "components": [[["2+0*i", 1]], [["0+0*i", 1]]]}
    code, out = call(capsys, ["stabilize", "-i", write(tmp_path, bad)])
    assert code == 1 and json.loads(out)["error"] == "ValidationError"


def test_orbitlimit(capsys):
    code, out = call(capsys, ["orbitlimit", "--n", "3", "--u", "2,3"])
    assert code == 0 and json.loads(out)["sigma"] == [1, 2]
    code, out = call(capsys, ["orbitlimit", "--n", "3", "--u", "2,x"])
    assert code == 1


def test_lemma63(tmp_path, capsys):
    code, out = call(capsys, ["lemma63", "-i", write(tmp_path, {"n": 4, "I": [[0, 1], [1, 2, 3]]})])
    assert code == 0 and json.loads(out) == {"n": 4, "holds": True, "first_failure": None}


@pytest.mark.parametrize("doc", [
    {"n": 3, "I": [[0, 1], [0, 1]]},
    {"n": 3, "I": [[0, 5]]},
    {"n": 3},
    {"n": 3, "I": [[0]]},
])
def test_validation_errors(tmp_path, capsys, doc):
    code, out = call(capsys, ["kcomplex", "-i", write(tmp_path, doc)])
    assert code == 1
    assert "message" in json.loads(out)


def test_malformed_json(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    code, out = call(capsys, ["kcomplex", "-i", str(p)])
    assert code == 1


def test_output_file_and_pretty(tmp_path, capsys):
    src = write(tmp_path, {"n": 3, "I": [[0, 1, 2]]})
    dst = tmp_path / "out.json"
    assert run(["kcomplex", "-i", src, "-o", str(dst)]) == 0
    assert json.loads(dst.read_text())["n"] == 3
    code, out = call(capsys, ["kcomplex", "-i", src, "--pretty"])
    assert code == 0 and out.startswith("n: 3\nfaces:\n")


def test_deterministic_bytes(tmp_path, capsys):
    src = write(tmp_path, {"n": 4, "I": [[0, 1], [2, 3]]})
    first = call(capsys, ["fan", "-i", src])[1]
    second = call(capsys, ["fan", "-i", src])[1]
    assert first == second


def test_verify_all_small(capsys):
    code, out = call(capsys, ["verify-all", "--n-max", "4", "--d-max", "4", "--samples", "30", "--seed", "5"])
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert [s["suite"] for s in doc["suites"]] == sorted(s["suite"] for s in doc["suites"])
    assert {"rsigma", "lemma63", "bandscan", "vandermonde", "stabilization", "orbit-limit"} <= {
        s["suite"] for s in doc["suites"]}


def test_verify_all_empty_limits(capsys):
    code, out = call(capsys, ["verify-all", "--n-max", "0"])
    assert code == 1
    with pytest.raises(ValueError):
        verify_all(None)


def test_fault_injection_names_disagreeing_parameters():
    perturbed = lambda p: D(p) + (1 if (p.r_min, p.d) == (3, 2) else 0)
    res = suite_bandscan(Limits(n_max=4, d_max=3), d_formula=perturbed)
    assert not res.passed
    assert [(f["r_min"], f["d"]) for f in res.failures] == [(3, 2)]
    report = verify_all(Limits(n_max=3, d_max=2, samples=5), d_formula=lambda p: D(p) - 1)
    assert not report["passed"]
    band = next(s for s in report["suites"] if s["suite"] == "bandscan")
    assert not band["passed"] and band["counterexamples"]


def test_seed_env_var(monkeypatch):
    monkeypatch.setenv("TORIC_ARR_SEED", "99")
    a = verify_all(Limits(n_max=3, d_max=2, samples=3))
    assert a["limits"]["seed"] == 99
    b = verify_all(Limits(n_max=3, d_max=2, samples=3, seed=7))
    assert b["limits"]["seed"] == 7


def test_console_script_module_entry(tmp_path):
    src = write(tmp_path, {"n": 3, "I": [[0, 1], [0, 2], [1, 2]]})
    proc = subprocess.run([sys.executable, "-m", "toric_arrangements.cli", "kcomplex", "-i", src],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["faces"] == [[], [0], [1], [2]]
