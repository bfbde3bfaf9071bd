import csv
import io
import json
from pathlib import Path

import pytest

from pseudoauto.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(args):
    out = io.StringIO()
    code = main(args, out)
    return code, out.getvalue()


def test_certify_ell2_passes_and_reports_salem():
    code, text = run(["certify", "--ell", "2", "--format", "json"])
    assert code == 0
    rep = json.loads(text)
    assert rep["passed"]
    salem = [c for c in rep["checks"] if c["name"] == "classification: Salem factor"][0]
    assert salem["details"]["factor"] == "x^8 - x^7 - x^5 + x^4 - x^3 - x + 1"
    flagged = {c["name"] for c in rep["checks"] if c["status"] == "flagged"}
    assert "jacobian: jacobian of F" in flagged


def test_certify_golden():
    code, text = run(["certify", "--ell", "2", "--format", "json", "--golden-dir", str(GOLDEN)])
    assert code == 0
    rep = json.loads(text)
    golden = [c for c in rep["checks"] if c["name"] == "golden"][0]
    assert golden["status"] == "pass"


def test_certify_deterministic():
    _, a = run(["certify", "--ell", "3", "--format", "json"])
    _, b = run(["certify", "--ell", "3", "--format", "json"])
    da, db = json.loads(a), json.loads(b)
    da.pop("timing"), db.pop("timing")
    assert da == db


def test_certify_ell1_rejected(capsys):
    code, _ = run(["certify", "--ell", "1"])
    assert code == 2
    assert "delta_1 = 0" in capsys.readouterr().err


def test_certify_perturb_fails():
    code, text = run(["certify", "--ell", "2", "--perturb", "--format", "json"])
    assert code != 0
    rep = json.loads(text)
    status = {c["name"]: c["status"] for c in rep["checks"]}
    assert status["orbit: l-condition"] == "fail"


def test_torus_stream():
    code, text = run(["torus", "--bound", "3"])
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    ex = [r for r in rows if (r["a"], r["b"], r["c"]) == (1, 0, -2)]
    assert ex and ex[0]["verdict"] == "non-fibered" and ex[0]["lambda1_equals_lambda2"]


def test_torus_csv_rows():
    code, text = run(["torus", "--bound", "1", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert {(r["a"], r["b"], r["c"]) for r in rows} == {("-1", "1", "1"), ("1", "1", "-1")}


def test_torus_bound_zero():
    code, text = run(["torus", "--bound", "0"])
    assert code == 0 and text == ""


def test_classify_salem():
    code, text = run(["classify", "1,-1,0,-1,1,-1,0,-1,1", "--format", "json"])
    assert code == 0
    assert json.loads(text)["checks"][0]["details"]["verdict"] == "Salem"


def test_classify_constant_first():
    _, text = run(["classify", "--constant-first", "--format", "json", "--", "-1,-1,0,1"])
    assert json.loads(text)["checks"][0]["details"]["verdict"] == "Pisot"


def test_degrees_csv():
    code, text = run(["degrees", "--ell", "2", "--n", "6", "--format", "csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "k,f_lattice,f_symbolic,g_lattice,g_symbolic"
    assert lines[1] == "1,3,3,4,4"
    assert lines[6].startswith("6,15,15")


def test_orbit_ell3():
    code, text = run(["orbit", "--ell", "3", "--format", "json"])
    assert code == 0
    rep = json.loads(text)
    steps = rep["checks"][0]["details"]["steps"]
    assert steps[-1]["k"] == 12 and steps[-1]["status"] == "reached-e0"


def test_golden_matrices():
    from pseudoauto.lattice import build_fx_star
    for ell in (2, 3, 4):
        data = json.loads((GOLDEN / f"fx_star_ell{ell}.json").read_text())
        assert data["matrix"] == build_fx_star(ell).matrix.to_lists()


def test_golden_salem_root():
    from fractions import Fraction
    from pseudoauto.lattice import SALEM_OCTIC
    from pseudoauto.numclass import dominant_root
    data = json.loads((GOLDEN / "salem_root.json").read_text())
    lo, hi = dominant_root(SALEM_OCTIC, Fraction(1, 10 ** 9))
    assert [str(lo), str(hi)] == data["interval"]
