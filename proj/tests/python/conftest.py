import os
import pathlib

import pytest

ROOT = pathlib.Path(os.environ.get("GREECHIE_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


@pytest.fixture
def corpus():
    return lambda name: str(ROOT / "corpus" / name)


@pytest.fixture
def fixture_path():
    return lambda name: str(ROOT / "tests" / "fixtures" / name)


@pytest.fixture
def schema():
    import json

    return json.loads((ROOT / "schema" / "report.schema.json").read_text())
