import pathlib

import pytest

REPO = pathlib.Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def scripts_dir() -> pathlib.Path:
    return REPO / "scripts"


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return REPO / "src" / "twistbench" / "data"
