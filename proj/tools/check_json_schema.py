"""Run every JSON-producing daff subcommand and validate the output against docs/output.schema.json."""

import json
import subprocess
import sys

import jsonschema

X = "X[1,1;1;1] Y[0,1]"
RUNS = [
    ["len", X],
    ["ldset", X, "1,0;-2;1"],
    ["cocovers", X],
    ["covers", X],
    ["leq", X, X],
    ["interval", "X[1,1;1;1] Y[3,1] s1", X],
    ["graph", X, "--nu", "1,0", "--window", "-6", "3", "0", "6"],
    ["qbg", "--radius", "2"],
    ["--type", "A", "--rank", "1", "cocovers", "X[14;-23;8]"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS:
        out = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True, check=True)
        errors = list(validator.iter_errors(json.loads(out.stdout)))
        status = "ok  " if not errors else "FAIL"
        print(status, " ".join(args))
        for e in errors[:3]:
            print("     ", e.message)
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
