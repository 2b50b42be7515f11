import pytest

from stratal import corpus


@pytest.fixture(scope="session")
def spaces():
    return corpus.load_corpus()


@pytest.fixture(scope="session")
def t2(spaces):
    return spaces["t2_7"]


@pytest.fixture(scope="session")
def s2(spaces):
    return spaces["s2"]


@pytest.fixture(scope="session")
def s1(spaces):
    return spaces["s1_hex"]


@pytest.fixture(scope="session")
def s0(spaces):
    return spaces["s0"]


@pytest.fixture(scope="session")
def susp_t2(spaces):
    return spaces["susp_t2"]


@pytest.fixture(scope="session")
def cone_t2(spaces):
    return spaces["cone_t2"]


@pytest.fixture(scope="session")
def mobius(spaces):
    return spaces["mobius"]
