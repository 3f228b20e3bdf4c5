import pytest

from jsplit import build_josp_table, regular_bimodule, skew_bimodule


@pytest.fixture(scope="session")
def josp11():
    return build_josp_table(1, 1)


@pytest.fixture(scope="session")
def josp21():
    return build_josp_table(2, 1)


@pytest.fixture(scope="session")
def josp12():
    return build_josp_table(1, 2)


@pytest.fixture(scope="session")
def reg11(josp11):
    return regular_bimodule(josp11)


@pytest.fixture(scope="session")
def skew11():
    return skew_bimodule(1, 1)
