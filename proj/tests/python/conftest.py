import json
import os
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]
DATA = Path(os.environ.get("POLCD_TEST_DATA", ROOT / "tests" / "data"))
SCHEMAS = Path(os.environ.get("POLCD_SCHEMAS", ROOT / "schemas"))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def cli():
    path = os.environ.get("POLCD_CLI")
    if not path:
        pytest.skip("POLCD_CLI not set")
    return path


@pytest.fixture(scope="session")
def validate():
    jsonschema = pytest.importorskip("jsonschema")
    from referencing import Registry, Resource

    schemas = {p.name: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in schemas.items()
    )

    def check(document, schema_name):
        jsonschema.Draft202012Validator(schemas[schema_name], registry=registry).validate(document)

    return check
