#!/usr/bin/env python3
"""Run the CLI in json mode and validate each document against its schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("roots", ["--n", "4", "--eps", "+-+", "roots"]),
    ("cells", ["--n", "4", "--eps", "++-", "cells"]),
    ("cells", ["--n", "3", "--eps", "+-", "--degree", "2", "cells"]),
    ("homology", ["--n", "5", "--eps", "+-+-", "homology"]),
    ("homology", ["--n", "4", "--eps", "++-", "--method", "snf", "homology"]),
    ("weights", ["--n", "5", "weights"]),
    ("weights", ["--n", "7", "--weight", "1,2,3,3,2,1,1", "weights"]),
    ("decompose", ["--n", "7", "--eps", "++++++", "--weight", "1,2,3,3,2,1,1", "decompose"]),
    ("decompose", ["--n", "7", "--eps", "++++++", "--weight", "1,2,3,3,2,1,1", "--cut", "3", "decompose"]),
    ("presentation", ["--n", "3", "--eps", "++", "--output", "json", "presentation"]),
    ("presentation", ["--n", "3", "--eps", "+-", "--group", "u", "--output", "json", "presentation"]),
    ("ring", ["--n", "5", "ring"]),
    ("ring", ["--n", "3", "--degree", "1", "ring"]),
    ("complex", ["--n", "3", "--eps", "+-", "complex"]),
    ("verify", ["--n", "3", "--eps", "+-", "verify"]),
    ("sweep", ["--n", "3", "--eps", "all", "homology"]),
    ("sweep", ["--n", "3", "--eps", "all", "ring"]),
    ("sweep", ["--n", "3", "--eps", "all", "verify"]),
]


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {str(e).splitlines()[0]}")
            failures += 1
            continue
        print(f"ok   {name}: {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
