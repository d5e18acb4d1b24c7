#!/usr/bin/env python3
"""Validate CLI fixture inputs and outputs against the shipped schemas.

usage: check_schemas.py CLI FIXTURE_DIR SCHEMA_DIR
"""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    cli, fixtures, schemas = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    registry = Registry()
    for path in schemas.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

    def validator(uri: str) -> jsonschema.Draft202012Validator:
        return jsonschema.Draft202012Validator({"$ref": uri}, registry=registry)

    failures = 0
    seen = set()
    for line in (fixtures / "cases.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code, command, *flags = line.split()
        seen.add(command)
        if not (schemas / f"{command}.schema.json").exists():
            print(f"{name}: no schema for {command}")
            failures += 1
            continue
        checks = []
        if code == "0":
            doc = json.loads((fixtures / f"{name}.json").read_text())
            checks.append(("input", validator(f"{command}.schema.json#/$defs/input"), doc))
        run = subprocess.run([cli, command, *flags, str(fixtures / f"{name}.json")], capture_output=True, text=True)
        out = json.loads(run.stdout)
        target = f"{command}.schema.json#/$defs/output" if run.returncode == 0 else "error.schema.json"
        checks.append(("output", validator(target), out))
        for label, v, doc in checks:
            errors = list(v.iter_errors(doc))
            if errors:
                failures += 1
                print(f"{name}: {label} fails schema: {errors[0].message}")
    for path in schemas.glob("*.schema.json"):
        stem = path.name.removesuffix(".schema.json")
        if stem not in seen | {"defs", "error"}:
            print(f"schema {path.name} has no fixture")
            failures += 1
    print(f"{len(seen)} subcommands checked, {failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
