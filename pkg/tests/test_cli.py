import io
import json
import math
import os
import subprocess
import sys
from pathlib import Path

import pytest

from morphic import __version__
from morphic.cli import run_command

GOLDEN = Path(__file__).parent / "golden"
KEYS = {"command", "input", "results", "budgets", "version"}

CASES = {
    "gen_fibonacci": ["--format", "json", "gen", "--spec", "fibonacci.spec", "--length", "8"],
    "analyze_gamma": [
        "--format", "json", "analyze", "--spec", "gamma.spec", "--length", "1000",
        "--complexity", "5", "--cubes", "10", "--freq", "--xxxr", "3", "--gaps", "11",
    ],
    "analyze_fibonacci": [
        "analyze", "--spec", "fibonacci.spec", "--length", "500", "--format", "json",
        "--powers", "3,10", "--overlaps", "20", "--recurrence", "4", "--limit", "5",
    ],
    "classify": ["--format", "json", "classify", "--evidence", "P6=true,P1=false"],
    "taxonomy_enumerate": ["taxonomy", "enumerate", "--format", "json"],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def close(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=1e-6, abs_tol=1e-9)
    if isinstance(a, dict):
        return isinstance(b, dict) and a.keys() == b.keys() and all(close(a[k], b[k]) for k in a)
    if isinstance(a, list):
        return isinstance(b, list) and len(a) == len(b) and all(close(x, y) for x, y in zip(a, b))
    return a == b


@pytest.fixture
def in_golden(monkeypatch):
    monkeypatch.chdir(GOLDEN)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, in_golden):
    code, out, _ = run(CASES[name])
    assert code == 0
    got = json.loads(out)
    assert set(got) == KEYS
    path = GOLDEN / f"{name}.json"
    if os.environ.get("MORPHIC_UPDATE_GOLDEN"):
        path.write_text(json.dumps({**got, "version": "<version>"}, indent=2) + "\n", encoding="utf-8")
    want = json.loads(path.read_text(encoding="utf-8"))
    assert got.pop("version") == __version__
    want.pop("version")
    assert close(got, want)


def test_gen_text(in_golden):
    code, out, _ = run(["gen", "--spec", "fibonacci.spec", "--length", "8"])
    assert (code, out) == (0, "01001010\n")


def test_text_limit(in_golden):
    code, out, _ = run(["analyze", "--spec", "fibonacci.spec", "--length", "1000", "--powers", "3,20", "--limit", "2"])
    line = next(x for x in out.splitlines() if x.startswith("3-powers"))
    assert line.endswith("[(5, 3), (8, 5)]")


def test_taxonomy_has_twenty(in_golden):
    _, out, _ = run(["--format", "json", "taxonomy", "enumerate"])
    assert len(json.loads(out)["results"]) == 20


def test_corpus_verify_i():
    code, out, _ = run(["--format", "json", "corpus", "verify", "i"])
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == KEYS
    (report,) = doc["results"]
    assert report["passed"]
    cubes = [c for c in report["checks"] if c["kind"] == "avoidance"]
    assert cubes and set(cubes[0]["witness"]["cubes"]) <= {"000", "111"}


def test_corpus_list():
    code, out, _ = run(["corpus", "list"])
    assert code == 0
    assert sum(1 for line in out.splitlines() if line.strip()) >= 29


def test_corpus_dump_round_trips(tmp_path):
    code, out, _ = run(["corpus", "dump", "m"])
    assert code == 0
    p = tmp_path / "m.spec"
    p.write_text(out, encoding="utf-8")
    code, out, _ = run(["gen", "--spec", str(p), "--length", "8"])
    assert out.strip() == "01001010"


class TestExitCodes:
    def test_parse_error(self, in_golden):
        code, _, err = run(["gen", "--spec", "bad.spec", "--length", "3"])
        assert code == 2
        assert err.startswith("bad.spec: line 2, column 13: undeclared letter")

    def test_missing_file(self):
        code, _, _ = run(["gen", "--spec", "/nonexistent.spec", "--length", "3"])
        assert code == 2

    def test_usage(self):
        assert run(["frobnicate"])[0] == 2
        assert run(["gen"])[0] == 2

    def test_bad_evidence(self):
        assert run(["classify", "--evidence", "P1=perhaps"])[0] == 2

    def test_contradictory_evidence(self):
        code, _, _ = run(["classify", "--evidence", "P2=true,P9=true,P6=false"])
        assert code == 1

    def test_cubes_need_values(self, in_golden):
        assert run(["analyze", "--spec", "fibonacci.spec", "--length", "100", "--cubes", "3"])[0] == 2

    def test_unknown_entry(self):
        assert run(["corpus", "verify", "nope"])[0] == 2

    def test_budget_exceeded(self, in_golden, monkeypatch):
        monkeypatch.setenv("MORPHIC_STREAM_BUDGET", "100")
        assert run(["gen", "--spec", "fibonacci.spec", "--length", "1000"])[0] == 2

    def test_help(self):
        assert run(["--help"])[0] == 0


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "morphic", "gen", "--spec", str(GOLDEN / "gamma.spec"), "--length", "25"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "0314301103434303101101103"
