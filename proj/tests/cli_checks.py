#!/usr/bin/env python3
"""End-to-end checks for the goodprime command line tool.

usage: cli_checks.py <goodprime binary> <report.schema.json>
"""

import json
import subprocess
import sys

import jsonschema

BIN = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, timeout=600)


def check(name, ok, detail=""):
    print(("PASS " if ok else "FAIL ") + name + ("" if ok else " -- " + detail))
    if not ok:
        failures.append(name)


def report(*args):
    r = run(*args)
    if r.returncode != 0:
        raise RuntimeError(" ".join(args) + ": exit " + str(r.returncode) + " " + r.stderr.decode())
    doc = json.loads(r.stdout)
    errors = [e.message for e in VALIDATOR.iter_errors(doc)]
    check("schema: " + " ".join(args), not errors, "; ".join(errors[:3]))
    again = run(*args)
    check("deterministic: " + " ".join(args), again.stdout == r.stdout)
    return doc


def expect_exit(code, *args):
    r = run(*args)
    ok = r.returncode == code
    detail = "exit " + str(r.returncode)
    if code != 0:
        try:
            err = json.loads(r.stderr)["error"]
            ok = ok and isinstance(err["code"], str) and isinstance(err["message"], str)
        except (ValueError, KeyError, TypeError):
            ok, detail = False, "stderr is not an error document: " + r.stderr.decode()[:200]
    check("exit " + str(code) + ": " + " ".join(args), ok, detail)


VALIDATOR.check_schema(SCHEMA)

report("group", "--type", "B", "--rank", "3")
report("group", "--type", "I2", "--m", "5")
report("group", "--matrix", "1,3;3,1")
report("marks", "--type", "A", "--rank", "3", "--prime", "5")
report("idempotents", "--type", "A", "--rank", "2", "--prime", "5")
report("radical", "--type", "A", "--rank", "3", "--prime", "7")

a3 = report("nw", "--type", "A", "--rank", "3")
check("A3 n_W", a3["nw"]["n_W"] == "24", a3["nw"]["n_W"])
check("A3 omega size", len(a3["nw"]["omega"]) == 3)
i7 = report("nw", "--type", "I2", "--m", "7")
check("I2(7) n_W", i7["nw"]["n_W"] == "14", i7["nw"]["n_W"])
anchored = report("nw", "--type", "A", "--rank", "4", "--basis", "anchored")
consecutive = report("nw", "--type", "A", "--rank", "4")
check("basis independence A4", anchored["nw"]["n_W"] == consecutive["nw"]["n_W"] == "120")

cartan = report("cartan", "--type", "A", "--rank", "3", "--prime", "5")
check("cartan fields agree", cartan["cartan"]["equal"] is True)
ext = report("ext", "--type", "B", "--rank", "2", "--prime", "3", "--max-degree", "2")
check("ext fields agree", ext["ext"]["equal"] is True)
report("ext", "--algebra", "faces", "--normals", "1,0;0,1;1,1", "--prime", "2", "--max-degree", "2")

nil = report("nilcoxeter", "--type", "A", "--rank", "2", "--prime", "2")
check("nilcoxeter A2 ext", nil["nilcoxeter"]["ext"] == [1, 2, 3, 4, 5], str(nil["nilcoxeter"]["ext"]))
check("nilcoxeter A2 equal", nil["nilcoxeter"]["equal"] is True)

faces = report("faces", "--normals", "1,0;0,1", "--prime", "3")
check("faces quiver equals hasse", faces["faces"]["quiver_equals_hasse"] is True)
check("faces count", faces["faces"]["num_faces"] == 9)
hecke = report("hecke", "--type", "A", "--rank", "2", "--prime", "2")
check("hecke simples", len(hecke["hecke"]["simples"]) == 4)

ver = report("verify", "--filter", "nw")
check("verify filter", [c["key"] for c in ver["verify"]["criteria"]] == ["nw-a3", "nw-dihedral"])
check("verify passed", ver["verify"]["passed"] is True)

csv = run("--format", "csv", "nw", "--type", "A", "--rank", "3").stdout.decode().splitlines()
check("csv header", csv[0] == "key,value", csv[0])
check("csv n_W row", "nw.n_W,24" in csv)
text = run("--format", "text", "nw", "--type", "A", "--rank", "3").stdout.decode().splitlines()
check("text n_W row", "nw.n_W = 24" in text)

expect_exit(2, "nw", "--type", "A", "--rank", "3", "--budget-group", "10")
expect_exit(2, "nilcoxeter", "--type", "A", "--rank", "3", "--budget-syzygy", "5")
expect_exit(1, "nw", "--type", "A", "--rank", "0")
expect_exit(1, "nw", "--type", "Z", "--rank", "3")
expect_exit(1, "marks", "--type", "A", "--rank", "2", "--prime", "4")
expect_exit(1, "faces", "--normals", "1,0;2,0")
expect_exit(1, "cartan", "--type", "A", "--rank", "2", "--prime", "3")
expect_exit(1, "group", "--matrix", "1,3;2,1")

print(str(len(failures)) + " failure(s)")
sys.exit(1 if failures else 0)
