import json
from pathlib import Path

import pytest

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


@pytest.fixture(scope="session")
def schema():
    def load(name):
        return json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    return load
