import pytest

from innerproj import fixtures


@pytest.fixture(scope="session")
def rnc3_ideal():
    return fixtures.rnc(3).to_ideal()


@pytest.fixture(scope="session")
def rnc4_ideal():
    return fixtures.rnc(4).to_ideal()


@pytest.fixture(scope="session")
def two_planes_ideal():
    return fixtures.two_planes_p4().to_ideal()


@pytest.fixture(scope="session")
def g24_ideal():
    return fixtures.plucker24().to_ideal()
