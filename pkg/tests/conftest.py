from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from graphs import Graph, generate, parse_family

FIXTURES = Path(__file__).parent / "fixtures"

PROPERTY_SETTINGS = "dee-properties"

settings.register_profile(
    PROPERTY_SETTINGS,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(PROPERTY_SETTINGS)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def c6() -> Graph:
    return generate(parse_family("cycle", ["6"]))


@pytest.fixture(scope="session")
def tree5() -> Graph:
    return generate(parse_family("tree5"))


@pytest.fixture(scope="session")
def c60() -> Graph:
    return generate(parse_family("c60"))


@pytest.fixture(scope="session")
def k1() -> Graph:
    return Graph(n=1, edges=())
