import pytest

from nearfrob.fixtures import FixtureSet


@pytest.fixture(scope="session")
def fx():
    return FixtureSet()
