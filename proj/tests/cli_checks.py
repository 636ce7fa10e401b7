#!/usr/bin/env python3
"""End-to-end checks of the critgroup command line.

usage: cli_checks.py <critgroup binary> <source dir> <work dir>
"""

import csv
import io
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, source, work = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
work.mkdir(parents=True, exist_ok=True)
failures = []


def run(*args):
    return subprocess.run([binary, *map(str, args)], capture_output=True, text=True, timeout=600)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


r = run("group", "--family", "cone-cycle", "--m", 6, "--l", 1, "--cone", 1, "--method", "both")
check(r.returncode == 0 and r.stdout.strip() == "Z8 + Z40 | Z8 + Z40 | MATCH", "group on the wheel W6")

r = run("group", "--family", "Lmm", "--m", 3, "--l", 1, "--cone", 1, "--method", "both")
check(r.returncode == 0 and r.stdout.strip().endswith("MISMATCH"), "group reports the Lmm mismatch")

r = run("snf", source / "samples/identity3.json")
check(r.returncode == 0 and r.stdout.strip() == "1 1 1", "snf of the identity")

r = run("snf", source / "samples/wheel6.json", "--group")
check(r.returncode == 0 and r.stdout.strip() == "Z8 + Z40", "snf --group of a graph file")

r = run("snf", source / "samples/bad_entry.json")
check(r.returncode == 1 and "entries[2]" in r.stderr, "bad entry names the field: " + r.stderr.strip())

r = run("snf", work / "missing.json")
check(r.returncode == 1 and r.stderr.startswith("error:"), "missing file is an error")

r = run("verify", "--claim", "G2", "--sweep", "m=1..3")
check(r.returncode == 1 and "error:" in r.stderr, "out-of-bounds sweep is rejected")

r = run("verify", "--claim", "NOPE")
check(r.returncode == 1, "unknown claim is rejected")

out = work / "g2.json"
r = run("verify", "--claim", "G2", "--sweep", "m=3,l=1,n=0..2", "--out", out)
doc = json.loads(out.read_text()) if out.exists() else {}
check(r.returncode == 0 and doc.get("reports", [{}])[0].get("verdict") == "REFUTED"
      and len(doc["reports"][0]["counterexamples"]) >= 1, "verify G2 writes counterexamples")

schema = json.loads((source / "schemas/report.schema.json").read_text())
first, second = work / "all1.json", work / "all2.json"
r1 = run("verify-all", "--out", first)
r2 = run("verify-all", "--out", second)
check(r1.returncode == 0 and r2.returncode == 0, "verify-all matches the recorded verdicts: " + r1.stderr.strip())
check(first.exists() and first.read_bytes() == second.read_bytes(), "verify-all output is byte-identical across runs")
try:
    report = json.loads(first.read_text())
    jsonschema.validate(report, schema)
    check(report["summary"]["claims"] == 31, "report covers every claim")
    check(True, "report validates against the schema")
except (OSError, ValueError, jsonschema.ValidationError) as e:
    check(False, "report validates against the schema: " + str(e).splitlines()[0])

expectations = work / "wrong.json"
expectations.write_text(json.dumps({"schema_version": 1, "verdicts": {"G1": "REFUTED"}}))
r = run("verify-all", "--expectations", expectations, "--out", work / "wrong_out.json")
check(r.returncode == 2 and "G1: expected REFUTED, got VERIFIED" in r.stderr, "changed verdict exits 2")

r = run("verify", "--claim", "G2", "--sweep", "m=3,l=1,n=0..1", "--format", "csv")
rows = list(csv.reader(io.StringIO(r.stdout)))
check(r.returncode == 0 and rows[0] == ["claim", "params", "status", "boundary", "claimed", "oracle"]
      and rows[2] == ["G2", "m=3,l=1,n=1", "MISMATCH", "false", "2 216", "8 40"], "csv ledger rows")

r = run("verify", "--claim", "G1", "--timing")
check(r.returncode == 0 and "timing_seconds" in r.stdout, "timing only when asked")
r = run("verify", "--claim", "G1")
check(r.returncode == 0 and "timing_seconds" not in r.stdout, "no timing by default")

r = run("matrix", "build", "--kind", "T", "--n", 3, "--a", 2, "--b", 1)
try:
    m = json.loads(r.stdout)
    check(m["entries"] == ["2", "1", "0", "1", "2", "1", "0", "1", "2"], "matrix build T")
except ValueError:
    check(False, "matrix build T produces JSON")

mfile = work / "c6.json"
r = run("matrix", "build", "--kind", "C", "--n", 6, "--a", 3, "--b", -1)
mfile.write_text(r.stdout)
r = run("snf", mfile)
check(r.returncode == 0 and r.stdout.strip() == "1 1 1 1 8 40", "snf of C6(3,-1)")

r = run("matrix", "phi", "--m", 3, "--A", source / "samples/phi_A.json", "--B", source / "samples/phi_B.json")
pfile = work / "phi.json"
pfile.write_text(r.stdout)
r = run("snf", pfile, "--group")
check(r.returncode == 0 and r.stdout.strip() == "Z8 + Z40", "phi matrix of L_{3,3}")

gfile = work / "w6.json"
r = run("graph", "build", "--family", "cone-cycle", "--m", 6, "--l", 1, "--cone", 1)
gfile.write_text(r.stdout)
r = run("snf", gfile, "--group")
check(r.returncode == 0 and r.stdout.strip() == "Z8 + Z40", "graph build then snf")

r = run("poly", "f", "--n", 3, "--x", 2, "--y", 1)
r2 = run("poly", "f", "--n", 3, "--x", 2, "--y", 1, "--closed")
check(r.returncode == 0 and r.stdout == r2.stdout and r.stdout.strip() != "", "poly f recurrence equals closed form")

r = run("poly", "p", "--m", 4, "--n", 2, "--x", 3, "--y", -1)
r2 = run("poly", "p", "--m", 4, "--n", 2, "--x", 3, "--y", -1, "--closed")
check(r.returncode == 0 and r.stdout == r2.stdout and r.stdout.strip() != "", "poly p recurrence equals closed form")

r = run("claims")
check(r.returncode == 0 and len(r.stdout.strip().splitlines()) == 31, "claims lists 31 entries")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
