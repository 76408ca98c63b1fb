import pytest

from qhopf import corpus, hopf_seeds, quasi_z2


@pytest.fixture(scope="session")
def all_corpus():
    return corpus()


@pytest.fixture(scope="session")
def seeds():
    return hopf_seeds()


@pytest.fixture(scope="session")
def hq():
    return quasi_z2()
