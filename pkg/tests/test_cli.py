import io
import json
import os
import subprocess
import sys

import pytest

from roughideals import cli
from roughideals.errors import SchemaError

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = cli.main(list(argv), out=out, err=err)
    return rc, out.getvalue(), err.getvalue()


def golden(name):
    with open(os.path.join(GOLDEN, name), encoding="utf-8") as fh:
        return fh.read()


@pytest.mark.parametrize("name, argv", [
    ("s6_inspect.txt", ["inspect"]),
    ("s6_ideals_strict.json", ["ideals", "--mode", "strict"]),
    ("s6_approx_gosi.json", ["approx", "--op", "gosi", "--set", "A"]),
])
def test_golden_outputs(s6_path, name, argv):
    rc, out, _ = run(argv[0], s6_path, *argv[1:])
    assert rc == 0
    assert out == golden(name)


def test_global_flags_before_or_after_the_command(s6_path):
    a = run("--mode", "strict", "ideals", s6_path)
    b = run("ideals", s6_path, "--mode", "strict")
    assert a == b and a[0] == 0


def test_inspect_json_carries_the_neighborhood_deviation(s6_path):
    rc, out, _ = run("inspect", s6_path, "--json")
    d = json.loads(out)
    assert rc == 0
    assert [dev["quantity"] for dev in d["deviations"]] == ["U(e,e)"]


def test_input_errors_exit_1(s6_path, tmp_path):
    assert run("approx", s6_path, "--op", "kappa", "--set", "A", "--ideal", "Nope")[0] == 1
    assert run("approx", s6_path, "--op", "nope", "--set", "A")[0] == 1
    assert run("bogus")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": "1", "universe": ["a"], "relation": [["a", "q"]]}')
    rc, _, err = run("inspect", str(bad))
    assert rc == 1 and SchemaError.code in err and "$.relation[0][1]" in err
    assert run("mereo", s6_path)[0] == 1  # no actual points


def test_verify_exit_codes_and_report(tmp_path):
    path = tmp_path / "r.json"
    rc, _, _ = run("verify", "--suite", "iad", "--exhaustive", "--report", str(path))
    assert rc == 0 and json.loads(path.read_text())["ok"]
    rc, _, err = run("verify", "--suite", "gosih")
    assert rc == 2 and "gosih.idempotent_lower" in err
    assert run("verify", "--suite", "nope")[0] == 1
    assert run("verify", "--suite", "gosi", "--count", "-1")[0] == 1


def test_verify_seed_changes_the_stream(tmp_path):
    reports = []
    for seed in (1, 2):
        p = tmp_path / f"{seed}.json"
        run("verify", "--suite", "gosi", "--count", "30", "--seed", str(seed), "--report", str(p))
        reports.append(p.read_text())
    assert reports[0] != reports[1]


def test_mereo_command(tmp_path):
    doc = tmp_path / "m.json"
    doc.write_text(json.dumps({
        "version": "1", "universe": ["a", "b", "c"], "relation": [],
        "actual_points": ["a", "b"], "sets": {"A": ["a"]},
    }))
    rc, out, _ = run("mereo", str(doc), "--set", "A", "--scheme", "CG")
    d = json.loads(out)
    assert rc == 0
    assert all(v["holds"] for block in d["axioms"].values() for v in block.values())
    assert len(d["actual_clans"]) == len(d["results"]) == 2
    for r in d["results"]:
        assert set(r["lower"]) <= {"a"} <= set(r["upper"])


def test_console_entry_point(s6_path):
    proc = subprocess.run([sys.executable, "-m", "roughideals.cli", "inspect", s6_path],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == golden("s6_inspect.txt")
