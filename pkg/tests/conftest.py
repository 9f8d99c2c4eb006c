import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linarr import catalog  # noqa: E402

ARRANGEMENTS = Path(__file__).resolve().parent.parent / "arrangements"


@pytest.fixture(scope="session")
def nested():
    return {k: catalog.nested(v) for k, v in catalog.ROMAN.items()}


@pytest.fixture(scope="session")
def arr_dir():
    return ARRANGEMENTS
