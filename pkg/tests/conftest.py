import json
from importlib import resources

import pytest
from hypothesis import settings

from tricoble import HomogeneousForm, TangencyConfig

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def fixture_raw():
    text = resources.files("tricoble.data").joinpath("fixture.json").read_text()
    return json.loads(text)


@pytest.fixture(scope="session")
def fixture_config(fixture_raw):
    return TangencyConfig.from_vectors(fixture_raw["quadrics"],
                                       fixture_raw["points"])


@pytest.fixture(scope="session")
def fixture_cubic(fixture_raw):
    return HomogeneousForm.from_vector(4, 3, fixture_raw["cubic"])


@pytest.fixture(scope="session")
def fixture_pairs(fixture_config):
    return {name: fixture_config.pair(name) for name in ("p", "q", "r")}


@pytest.fixture(scope="session")
def fixture_star(fixture_raw):
    return tuple(int(c) for c in fixture_raw["cubic"])
