"""Runs the cartan binary on every fixture in data/ and checks that each
machine-readable report validates against the shipped schema and is
byte-identical across two runs."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

EXPECTED_EXIT = {"link_touching": 3}


def run(cartan, command, path):
    proc = subprocess.run(
        [cartan, command, "--input", str(path), "--format", "machine"],
        capture_output=True,
        check=False,
    )
    return proc.returncode, proc.stdout


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cartan", required=True)
    parser.add_argument("--data", required=True, type=pathlib.Path)
    parser.add_argument("--schema", required=True, type=pathlib.Path)
    args = parser.parse_args()

    schema = json.loads(args.schema.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    fixtures = sorted(args.data.glob("*.json"))
    if not fixtures:
        print("no fixtures found")
        return 1
    for path in fixtures:
        command = path.stem.split("_")[0]
        code, first = run(args.cartan, command, path)
        _, second = run(args.cartan, command, path)
        problems = []
        want = EXPECTED_EXIT.get(path.stem, 0)
        if code != want:
            problems.append(f"exit {code}, expected {want}")
        if first != second:
            problems.append("reports differ between runs")
        try:
            report = json.loads(first)
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            problems.extend(f"schema: {'/'.join(map(str, e.path))}: {e.message}" for e in errors)
        except json.JSONDecodeError as e:
            problems.append(f"not JSON: {e}")
        status = "ok" if not problems else "FAIL"
        print(f"{status:4} {path.name}")
        for p in problems:
            print(f"     {p}")
        failures += bool(problems)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
