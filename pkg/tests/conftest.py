import pytest

from softmtl.fixtures import load_fixture


@pytest.fixture(scope="session")
def a1():
    return load_fixture("a1")


@pytest.fixture(scope="session")
def a2():
    return load_fixture("a2")


@pytest.fixture(scope="session")
def a3():
    return load_fixture("a3")


@pytest.fixture(scope="session")
def b2():
    return load_fixture("b2")
