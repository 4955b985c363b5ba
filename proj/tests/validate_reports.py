"""Validate reports from a range of tool invocations against the schema."""

import json
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import jsonschema

RUNS = [
    ["analyze", "--family", "syminv", "--n", "3"],
    ["analyze", "--family", "tfull", "--n", "3", "--field", "fp:3", "--verify", "generators"],
    ["analyze", "--family", "tpartial", "--n", "2", "--verify", "off"],
    ["twist", "--family", "jones", "--n", "3", "--delta", "2"],
    ["twist", "--family", "jones", "--n", "2", "--delta", "0"],
    ["twist", "--family", "jones", "--n", "4", "--delta", "1/2", "--field", "fp:5"],
    ["verify", "--family", "jones", "--n", "4", "--delta", "2"],
    ["verify", "--family", "syminv", "--n", "2"],
]


def scalars(node):
    if isinstance(node, dict):
        for key, value in node.items():
            if key == "gram":
                for row in value:
                    yield from row
            else:
                yield from scalars(value)
    elif isinstance(node, list):
        for item in node:
            yield from scalars(item)


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        runs = list(RUNS)
        cayley = Path(tmp) / "i2.json"
        subprocess.run([tool, "export", "--family", "syminv", "--n", "2", "--out", str(cayley)],
                       check=True, capture_output=True)
        runs.append(["analyze", "--cayley", str(cayley), "--field", "fp:2"])
        for k, args in enumerate(runs):
            report = Path(tmp) / f"r{k}.json"
            proc = subprocess.run([tool, *args, "--quiet", "--report", str(report)],
                                  capture_output=True, text=True)
            if proc.returncode != 0:
                print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
                failures += 1
                continue
            data = json.loads(report.read_text())
            errors = sorted(validator.iter_errors(data), key=lambda e: list(e.path))
            for err in errors[:3]:
                print(f"FAIL schema: {' '.join(args)}: {list(err.path)}: {err.message}")
            failures += bool(errors)
            for s in scalars(data):
                if str(Fraction(s)) != s:
                    print(f"FAIL scalar {s!r} is not canonical in {' '.join(args)}")
                    failures += 1
            print(f"ok {' '.join(args)}")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
