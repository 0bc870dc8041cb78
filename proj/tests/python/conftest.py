import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
DEMO = ROOT / "demo"
SCHEMAS = ROOT / "schemas"


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("RSB_CLI", str(ROOT / "build" / "rsb"))
    if not pathlib.Path(exe).exists():
        pytest.skip("rsb binary not built")

    def run(*args):
        proc = subprocess.run([exe, *map(str, args)], capture_output=True, text=True, timeout=300)
        report = json.loads(proc.stdout) if proc.stdout.strip() else None
        return proc.returncode, report

    return run


@pytest.fixture(scope="session")
def schema_registry():
    from referencing import Registry, Resource

    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def validator(registry, schema_id):
    from jsonschema import Draft202012Validator

    return Draft202012Validator(registry.contents(schema_id), registry=registry)
