#!/usr/bin/env python3
"""Run a set of CLI commands and validate every JSON line against the schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    (0, ["eval", "--fn", "H1", "--nu", "10", "--x", "2", "--method", "debye", "--N", "5"]),
    (0, ["eval", "--fn", "J", "--nu", "8", "--x", "1", "--method", "oracle"]),
    (0, ["eval", "--fn", "Y", "--nu", "12*exp(0.2i*pi)", "--beta", "pi/4"]),
    (0, ["oracle", "--fn", "H2", "--nu", "9-2i", "--x", "1.5"]),
    (0, ["hyper", "eval", "--nu", "10", "--beta", "pi/3"]),
    (0, ["hyper", "stokes", "--nu-abs", "12", "--points", "3"]),
    (0, ["coeffs", "u", "--n", "3", "--beta", "pi/3"]),
    (0, ["coeffs", "d", "--n", "4"]),
    (0, ["terminant", "--p", "5.5", "--z", "3*exp(i*pi/4)"]),
    (0, ["late", "u", "--n", "50", "--beta", "pi/6", "--M", "25"]),
    (0, ["late", "d", "--n", "10", "--M", "5"]),
    (0, ["late", "meissel", "--n", "10"]),
    (0, ["late", "optimal", "--n", "20"]),
    (0, ["tables", "2"]),
    (0, ["verify", "inequalities"]),
    (3, ["eval", "--fn", "H1", "--nu", "10*exp(1.6i*pi)", "--x", "2", "--method", "debye"]),
    (2, ["eval", "--nu", "what", "--x", "2"]),
    (2, ["--no-such-flag"]),
]

failures = 0
for want, args in runs:
    p = subprocess.run([cli, "--json", "--digits", "30"] + args, capture_output=True, text=True)
    lines = [l for l in (p.stdout + p.stderr).splitlines() if l.strip()]
    problems = []
    if p.returncode != want:
        problems.append(f"exit {p.returncode}, expected {want}")
    if not lines:
        problems.append("no output")
    for l in lines:
        try:
            rec = json.loads(l)
        except json.JSONDecodeError as e:
            problems.append(f"not JSON: {l[:80]} ({e})")
            continue
        for err in validator.iter_errors(rec):
            problems.append(f"{err.message} in {l[:80]}")
    status = "ok" if not problems else "FAIL"
    print(f"{status}: {' '.join(args)}")
    for pr in problems:
        print(f"    {pr}")
    failures += bool(problems)

# determinism: same config and seed give byte-identical output
a = subprocess.run([cli, "--json", "--digits", "30", "--seed", "7", "verify", "inequalities"], capture_output=True)
b = subprocess.run([cli, "--json", "--digits", "30", "--seed", "7", "verify", "inequalities"], capture_output=True)
if a.stdout != b.stdout:
    print("FAIL: repeated run differs")
    failures += 1
else:
    print("ok: repeated run is byte-identical")

sys.exit(1 if failures else 0)
