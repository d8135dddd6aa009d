import os

os.environ.setdefault("LOG_TO_FILE", "false")
os.environ.setdefault("LOG_LEVEL", "WARNING")

import numpy as np  # noqa: E402
import pytest  # noqa: E402

from sidonlab.dependency import get_catalog  # noqa: E402
from sidonlab.models.vector_model import PointSet  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run the t=7 enumeration")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long enumeration, needs --run-slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def catalog():
    return get_catalog()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def m4(catalog) -> PointSet:
    """{0, 1, 2, 4, 8, 15}"""
    return catalog.get("M_4")


@pytest.fixture
def example_dim7(catalog) -> PointSet:
    return catalog.get("T1_7_12")
