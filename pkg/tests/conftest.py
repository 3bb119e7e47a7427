import pytest

from discarr.discriminantal import build_disc
from discarr.fixtures import load_fixture


@pytest.fixture(scope="session")
def ex51():
    return load_fixture("example-5-1").arrangement


@pytest.fixture(scope="session")
def ex52():
    return load_fixture("example-5-2").arrangement


@pytest.fixture(scope="session")
def prop61():
    return load_fixture("prop-6-1").arrangement


@pytest.fixture(scope="session")
def triangle():
    return load_fixture("triangle-altitudes").arrangement


@pytest.fixture(scope="session")
def disc51(ex51):
    return build_disc(ex51.coeffs)


@pytest.fixture(scope="session")
def disc52(ex52):
    return build_disc(ex52.coeffs)


@pytest.fixture(scope="session")
def disc61(prop61):
    return build_disc(prop61.coeffs)
