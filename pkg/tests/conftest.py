import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

FIXTURES = HERE / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


def valid_fixture_files():
    return sorted(FIXTURES.glob("*.triad"))


def invalid_fixture_files():
    return sorted((FIXTURES / "invalid").glob("*.triad"))
