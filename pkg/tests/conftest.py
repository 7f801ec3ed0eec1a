import pytest

from diracoh import build_root_system
from diracoh.blocks import ambient_weyl


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A1")


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def a3():
    return build_root_system("A3")


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B2")


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G2")


@pytest.fixture(scope="session")
def wa2(a2):
    return ambient_weyl(a2)


@pytest.fixture(scope="session")
def wa3(a3):
    return ambient_weyl(a3)


@pytest.fixture(scope="session")
def wb2(b2):
    return ambient_weyl(b2)
