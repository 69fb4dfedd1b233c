import pytest

from sd40.constructions import c40_de, c40_se
from sd40.oracle import build_oracle
from sd40.quaternary import b10_table, e10_table


@pytest.fixture(scope="session")
def e10():
    return e10_table()


@pytest.fixture(scope="session")
def b10():
    return b10_table()


@pytest.fixture(scope="session")
def de_matrix():
    return c40_de()


@pytest.fixture(scope="session")
def se_matrix():
    return c40_se()


@pytest.fixture(scope="session")
def de_oracle(de_matrix):
    return build_oracle(de_matrix)


@pytest.fixture(scope="session")
def se_oracle(se_matrix):
    return build_oracle(se_matrix)
