#!/usr/bin/env python3
"""Validate posetlab JSON reports against docs/report.schema.json."""
import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def run(binary, *args):
    res = subprocess.run([binary, *args], capture_output=True, text=True, check=True)
    return res.stdout


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("binary")
    ap.add_argument("schema")
    ap.add_argument("gallery_dir")
    args = ap.parse_args()

    schema = json.loads(pathlib.Path(args.schema).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    reports = []
    for pos in sorted(pathlib.Path(args.gallery_dir).glob("*.pos")):
        reports.append((pos.name, run(args.binary, "check", str(pos), "--format", "json")))
    for name in ["J", "P1xP3", "ONExP2", "ONE"]:
        reports.append((name, run(args.binary, "gallery", "--poset", name, "--report", "--format", "json")))
    with tempfile.TemporaryDirectory() as tmp:
        run(args.binary, "search", "--count", "60", "--query", "!meet_continuous | !dcpo", "--out", tmp)
        for pos in sorted(pathlib.Path(tmp).glob("*.pos")):
            reports.append((pos.name, run(args.binary, "check", str(pos), "--format", "json")))

    bad = 0
    for name, text in reports:
        errors = list(validator.iter_errors(json.loads(text)))
        for e in errors:
            print(f"{name}: {e.message}")
        bad += bool(errors)
    print(f"{len(reports) - bad}/{len(reports)} reports valid")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
