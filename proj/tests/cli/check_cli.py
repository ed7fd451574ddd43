#!/usr/bin/env python3
"""Exit codes, record layout and schema conformance of the orbitlab CLI.

usage: check_cli.py <orbitlab binary> <source dir> <scratch dir>
"""

import csv
import json
import shutil
import subprocess
import sys
from pathlib import Path

cli, source, scratch = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
configs = sorted((source / "configs").glob("*.json"))
failures = []


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def orbitlab(*args):
    return subprocess.run([cli, *map(str, args)], capture_output=True, text=True)


shutil.rmtree(scratch, ignore_errors=True)
scratch.mkdir(parents=True)

for cfg in configs:
    r = orbitlab("validate", "--config", cfg)
    check(r.returncode == 0, f"validate {cfg.name} -> 0")

bad = json.loads((source / "configs" / "plane_infinite.json").read_text())
del bad["normalization"]["alpha"]
(scratch / "no_alpha.json").write_text(json.dumps(bad))
check(orbitlab("validate", "--config", scratch / "no_alpha.json").returncode == 2, "missing alpha -> 2")
check(orbitlab("run", "--config", scratch / "no_alpha.json").returncode == 2, "run refuses an invalid config -> 2")
(scratch / "broken.json").write_text("{ not json")
check(orbitlab("validate", "--config", scratch / "broken.json").returncode == 2, "malformed JSON -> 2")
check(orbitlab("validate", "--config", scratch / "absent.json").returncode == 2, "missing file -> 2")
check(orbitlab("report", "--out", scratch / "nothing_here").returncode == 2, "report without a record -> 2")

s4 = source / "configs" / "free_quotient_s4.json"
r = orbitlab("run", "--config", s4, "--budget", "1000", "--out", scratch / "starved")
check(r.returncode == 3, "run over budget -> 3")
starved = json.loads((scratch / "starved" / "record.json").read_text())
check(starved["status"] == "budget_exceeded" and starved["valid"] is False, "over-budget record is kept and flagged")

r = orbitlab("run", "--config", s4, "--out", scratch / "s4")
check(r.returncode == 0, "run free_quotient_s4 -> 0")
r = orbitlab("report", "--out", scratch / "s4")
check(r.returncode == 0 and "verified" in r.stdout, "report verifies the payload hash")
r = orbitlab("oracle", "--config", s4)
check(r.returncode == 0 and json.loads(r.stdout)["all_agree"], "oracle cross-checks agree -> 0")
r = orbitlab("run", "--config", s4, "--out", scratch / "s4_again", "--threads", "3")
again = json.loads((scratch / "s4_again" / "record.json").read_text())
first = json.loads((scratch / "s4" / "record.json").read_text())
check(again["payload_hash"] == first["payload_hash"], "rerun with other threads reproduces the payload hash")
check(orbitlab("--version").returncode == 0, "--version -> 0")

try:
    import jsonschema
except ImportError:
    print("skip schema checks: jsonschema is not installed")
else:
    schema = json.loads((source / "schema" / "experiment.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema)
    for cfg in configs:
        errors = list(validator.iter_errors(json.loads(cfg.read_text())))
        check(not errors, f"schema accepts {cfg.name}" + (f": {errors[0].message}" if errors else ""))
    check(any(validator.iter_errors(bad)), "schema rejects a power normalisation without alpha")

    record_schema = {"$schema": schema["$schema"], "$defs": schema["$defs"], "$ref": "#/$defs/record"}
    record_validator = jsonschema.Draft202012Validator(record_schema)
    for rec in (first, starved):
        errors = list(record_validator.iter_errors(rec))
        check(not errors, f"record schema accepts a {rec['status']} record" + (f": {errors[0].message}" if errors else ""))

    columns = [c["name"] for c in schema["$defs"]["series_csv"]["x-csv-columns"]]
    series = first["payload"]["series"]
    for path in sorted((scratch / "s4" / "series").glob("*.csv")):
        with path.open() as f:
            rows = list(csv.reader(f))
        meta = series[path.stem]
        ok = rows[0] == columns and len(rows) - 1 == len(meta["t"])
        ok = ok and all(row[2] == meta["norm"] and row[3] == meta["metadata_hash"] for row in rows[1:])
        check(ok, f"series/{path.name} matches its columns and record entry")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
