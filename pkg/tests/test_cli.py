import json
import subprocess
import sys
from io import StringIO

import pytest

from csl.cli import main


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_square_rotations():
    code, out = run("square", "rotations", "--max-index", "5", "--format", "json")
    recs = lines(out)
    assert code == 0
    assert [r["z"] for r in recs if r["sigma"] == 5] == ["1+2i", "1-2i"]
    assert recs[1]["matrix"] == [["-3/5", "-4/5"], ["4/5", "-3/5"]]


def test_diamond():
    code, out = run("diamond", "--quaternion", "1,1,0,0")
    rec = json.loads(out)
    assert code == 0 and rec["sigma"] == 2 and rec["cosets"] == 1


def test_series_csv():
    assert run("series", "--which", "z2", "--max", "1") == (0, "1,1\n")
    code, out = run("series", "--which", "shift:1/5", "--max", "13", "--format", "json")
    assert json.loads(out)["coefficients"][12] == [13, 2]


def test_shifted_and_classify():
    code, out = run("square", "shifted", "--shift", "1/2", "--max-index", "5", "--rotations-only")
    recs = lines(out)
    assert code == 0
    assert [(r["z"], r["unit"]) for r in recs] == [("1", "1"), ("1", "-1"), ("1+2i", "1"), ("1+2i", "-1"), ("1-2i", "1"), ("1-2i", "-1")]
    assert recs[0]["representative"] == "1/2"
    assert recs[2]["representative"] == "(1+2i)/2"
    code, out = run("square", "classify-shift", "--shift", "(2+1i)/5")
    rec = json.loads(out)
    assert not rec["closed_up_to_bound"] and rec["counterexample"][0]["reflection"]
    code, out = run("square", "classify-shift", "--shift-class", "re-irrational:b=1/2")
    assert json.loads(out)["generator"] == {"z": "1", "unit": "1", "reflection": True}


def test_cubic():
    code, out = run("cubic", "csl", "--quaternion", "1,1,1,0", "--lattice", "B")
    assert json.loads(out)["sigma"] == 3
    code, out = run("cubic", "rotations", "--max-index", "3", "--format", "csv")
    # 24 rotations for each of the four index-3 lattices
    assert sum(line.startswith("3,") for line in out.splitlines()) == 96


def test_multilattice(tmp_path):
    f = tmp_path / "ml.json"
    f.write_text(json.dumps({"dim": 2, "basis": [[1, 0], [0, 1]], "shifts": [[0, 0], ["1/2", "1/2"]], "R": [["3/5", "-4/5"], ["4/5", "3/5"]]}))
    code, out = run("multilattice", "--file", str(f))
    rec = json.loads(out)
    assert code == 0 and rec["index"] == "5" and len(rec["cosets"]) == 2


def test_verify():
    code, out = run("verify", "--suite", "square", "--bound", "10")
    rec = json.loads(out)
    assert code == 0 and rec["ok"] and rec["identities"]["csl"] > 0


def test_exit_codes(capsys):
    assert run("cubic", "csl", "--quaternion", "2,0,0,0")[0] == 1
    assert run("square", "shifted", "--shift", "(2+x)/5", "--max-index", "5")[0] == 2
    assert "position" in capsys.readouterr().err
    assert run("diamond", "--quaternion", "1,1,z,0")[0] == 2
    assert run("series", "--which", "z2", "--max", "0")[0] == 2
    assert run("bogus")[0] == 2
    assert run("multilattice", "--file", "/nonexistent.json")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "csl", "series", "--which", "z3", "--max", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1,1\n2,0\n3,4\n"


def test_deterministic():
    assert run("square", "shifted", "--shift", "(2+1i)/5", "--max-index", "30") == run(
        "square", "shifted", "--shift", "(2+1i)/5", "--max-index", "30"
    )
