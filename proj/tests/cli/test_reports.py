"""Runs every ggor subcommand and validates the JSON reports against the
published schema, the documented exit codes and determinism."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

GGOR, ROOT = sys.argv[1], pathlib.Path(sys.argv[2])
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())
FIX = ROOT / "fixtures"

failures = []


def run(*args):
    proc = subprocess.run([GGOR, "--format", "json", *args], capture_output=True, text=True, timeout=600)
    report = json.loads(proc.stdout)
    jsonschema.validate(report, SCHEMA)
    return proc.returncode, report


def expect(args, code):
    got, report = run(*args)
    if got != code or report["exit_code"] != code:
        failures.append(f"{' '.join(args)}: exit {got}, expected {code}: {report.get('error', '')}")
    return report


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    (tmp / "hb.json").write_text(json.dumps({
        "ring": {"vars": ["x", "y", "z", "u", "v", "w"]},
        "matrix": [["u", "0", "0"], ["0", "v", "0"], ["0", "0", "w"], ["x", "y", "z"]]}))
    (tmp / "bad.json").write_text('{"ring": {"vars": ["x"]},\n "ideal": ["x +* 2"]}')
    (tmp / "broken.json").write_text('{"ring": {"vars": ["x"]},\n "ideal": [}')

    intro = str(FIX / "intro-example.json")
    expect(["gamma", intro], 0)
    expect(["check", intro], 0)
    expect(["resolve", intro], 0)
    expect(["zeta", intro], 0)
    expect(["resolve", "--verify", str(FIX / "example-I.json")], 0)
    expect(["decompose", str(tmp / "hb.json")], 0)
    expect(["betti-classify", "--seq", "(1,1,1;2,2,2;3)"], 0)
    expect(["betti-classify", "--homogeneous", "4", "3", "5"], 2)
    expect(["betti-classify", "--homogeneous", "4", "5", "8"], 3)
    expect(["betti-reduce", "--seq", "(2,2,2,3;4,3,3,3;4)"], 0)
    expect(["betti-reduce", "--strategy", "smallest", "--seq", "(2,2,2,3;4,3,3,3;4)"], 0)
    expect(["betti-lift", "--seq", "(1,1,1;2,2,2;3)", "--u", "1,1,1"], 0)
    expect(["construct", "--homogeneous", "5", "3", "4"], 0)
    expect(["construct", "--homogeneous", "4", "3", "5"], 2)
    report = expect(["verify-paper-example", "closing-remark"], 0)
    if not report["result"]["all_ok"]:
        failures.append("closing-remark checks failed")
    bad = expect(["gamma", str(tmp / "bad.json")], 1)
    if ":2:" not in bad.get("error", ""):
        failures.append("parse error lacks a line number: " + bad.get("error", ""))
    broken = expect(["gamma", str(tmp / "broken.json")], 1)
    if ":2:" not in broken.get("error", ""):
        failures.append("JSON error lacks a line number: " + broken.get("error", ""))
    expect(["zeta", str(FIX / "example-I.json")], 1)

    # Same input, same report apart from timings.
    a, b = run("check", intro)[1], run("check", intro)[1]
    a.pop("timings"), b.pop("timings")
    if a != b:
        failures.append("check report is not deterministic")

for f in failures:
    print("FAIL:", f)
print("cli reports:", "ok" if not failures else f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
