import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from dercurve.cli import main

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def test_analyze_5_6_9(capsys):
    code, rep = run_json(capsys, "analyze", "5", "6", "9")
    assert code == 0
    assert rep["derivations"]["mu"] == 4
    assert rep["poincare"]["relation"] == "1+2·P_K"
    assert rep["plane"]["gamma2"] == [3, 4]


def test_analyze_arslan_h2(capsys):
    code, rep = run_json(capsys, "analyze", "6", "7", "9", "10")
    assert code == 0
    der = rep["derivations"]
    assert der["mu"] == 6
    assert der["minimal_ideal_count"] == 5
    assert der["annihilation"] is True
    assert rep["semigroup"]["pf"] == [3, 8, 11]
    assert rep["semigroup"]["homogeneous"] is True
    assert any("mu=6" in n for n in rep["notes"])
    assert any("d/du" in n for n in rep["notes"])


def test_analyze_with_series(capsys):
    code, rep = run_json(capsys, "analyze", "6", "7", "9", "10", "--coeffs", "1,5", "--rational", "1;1,-2")
    assert rep["poincare"]["truncated"] == [5, 20]
    assert rep["poincare"]["rational"] == "5,-2;1,-2"  # (1-2z) + 4


def test_analyze_gcd_error(capsys):
    code, rep = run_json(capsys, "analyze", "4", "6")
    assert code == 1
    assert rep["error"]["type"] == "GcdNotOne"


def test_analyze_not_cm(capsys):
    code, rep = run_json(capsys, "analyze", "3", "7", "8")
    assert code == 2
    assert rep["error"]["type"] == "NotCohenMacaulay"
    assert rep["error"]["counterexample"] == [6, 2]


def test_family_arslan(capsys):
    code, rep = run_json(capsys, "family", "arslan", "--h", "2")
    assert code == 0
    assert rep["passed"] and rep["mu"] == 6


def test_family_backelin(capsys):
    code, rep = run_json(capsys, "family", "backelin", "--n", "2", "--r", "8")
    assert code == 0
    assert rep["passed"] and rep["mu"] == 11
    assert rep["relation"] == "1+9·P_K"


def test_family_out_of_range(capsys):
    code, rep = run_json(capsys, "family", "arslan", "--h", "1")
    assert code == 1
    assert rep["error"]["type"] == "ParamOutOfRange"


def test_family_sweep_sorted(capsys):
    code, reps = run_json(capsys, "family", "arslan", "--sweep", "2:4", "--jobs", "2")
    assert code == 0
    assert [r["params"]["h"] for r in reps] == [2, 3, 4]
    assert [r["mu"] for r in reps] == [6, 8, 10]


def test_poincare_coeffs(capsys):
    code, rep = run_json(capsys, "poincare", "--h1", "3", "--h2", "1", "--coeffs", "1,5")
    assert code == 0
    assert rep["truncated_wire"] == "5,20"


def test_poincare_rational(capsys):
    code, rep = run_json(capsys, "poincare", "--h1", "1", "--h2", "1", "--rational", "1;1,-2")
    assert rep["rational"] == "3,-2;1,-2"


@pytest.mark.parametrize("argv, kind", [
    (["--coeffs", "2,5"], "BadResidueField"),
    (["--rational", "1;x"], "ParseError"),
    ([], "DercurveError"),
])
def test_poincare_errors(capsys, argv, kind):
    code, rep = run_json(capsys, "poincare", "--h1", "3", "--h2", "1", *argv)
    assert code == 1
    assert rep["error"]["type"] == kind


def test_human_output(capsys):
    code, out = run(capsys, "analyze", "5", "6", "9", "--human")
    assert code == 0
    assert "mu=4" in out
    code, out = run(capsys, "family", "arslan", "--h", "2", "--human")
    assert "PASS" in out


def test_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("DERCURVE_BOUND", "5")
    code, rep = run_json(capsys, "analyze", "6", "7", "9", "10")
    assert rep["plane"]["cm"]["bound"] == 5
    monkeypatch.setenv("DERCURVE_BOUND", "1")
    code, rep = run_json(capsys, "analyze", "6", "7", "9", "10")
    # c' = 2 is out of reach with a single iteration
    assert code == 1 and rep["error"]["type"] == "SearchExhausted"


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "dercurve", "analyze", "67", "70", "74", "75"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
