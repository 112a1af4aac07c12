from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "corktwist" / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def load():
    def _load(name: str) -> str:
        return (FIXTURES / name).read_text()
    return _load
