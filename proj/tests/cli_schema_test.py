#!/usr/bin/env python3
"""Runs every CLI subcommand with --json over a small corpus and validates the
output against the published schema."""

import itertools
import json
import subprocess
import sys

import jsonschema

BINARY, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH) as f:
    SCHEMA = json.load(f)
jsonschema.Draft202012Validator.check_schema(SCHEMA)

CORPUS = [(12, "aabaaaaabaa"), (6, "aaaba"), (2, "a"), (4, "aaa")]
CORPUS += [(m, "".join(w)) for m in range(2, 6) for w in itertools.product("ab", repeat=m - 1)]

failures = 0
checked = 0


def validate(kind, args, expect_status):
    global failures, checked
    proc = subprocess.run([BINARY, "--json", *args], capture_output=True, text=True)
    checked += 1
    try:
        doc = json.loads(proc.stdout)
        validator = jsonschema.Draft202012Validator({**SCHEMA, "$ref": f"#/$defs/{kind}"})
        validator.validate(doc)
        if expect_status is not None and proc.returncode not in expect_status:
            raise AssertionError(f"exit status {proc.returncode}")
    except Exception as exc:  # noqa: BLE001
        failures += 1
        print(f"FAIL {' '.join(args)}: {exc}")


for m, w in CORPUS:
    spec = ["--m", str(m), "--word", w]
    validate("generate", ["generate", *spec, "--length", str(3 * m)], {0})
    validate("access", ["access", *spec, "--index", str(m**3 + 1)], {0})
    validate("enumerate", ["enumerate", *spec], {0})
    for q in range(1, m**2 + 1):
        validate("decision", ["decide", *spec, "--q", str(q)], {0, 1})
        validate("decision", ["decompose", *spec, "--q", str(q)], {0, 1})
    for q in (1, 2, 3, m + 1):
        validate("verify", ["verify", *spec, "--q", str(q)], {0})

validate("compose", ["compose", "aa?", "b?", "a?"], {0})
validate("error", ["decide", "--m", "6", "--word", "aaab", "--q", "2"], {2})
validate("error", ["access", "--m", "6", "--word", "aaaba", "--index", "0"], {2})

print(f"{checked - failures}/{checked} CLI documents valid")
sys.exit(1 if failures else 0)
