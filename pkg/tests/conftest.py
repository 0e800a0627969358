import pathlib

import pytest

from roofpairs.configs import builtin_config, load_config

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def g2():
    return builtin_config("g2dagger")


@pytest.fixture(scope="session")
def d4():
    return builtin_config("d4")


@pytest.fixture(scope="session")
def toy_path():
    return str(DATA / "toy_symmetric.json")


@pytest.fixture(scope="session")
def toy(toy_path):
    return load_config(toy_path)
