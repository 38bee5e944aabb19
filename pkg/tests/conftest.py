import pytest
from hypothesis import settings

from minpoly.field import GF2, QQ, PrimeField

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture
def gf2():
    return GF2


@pytest.fixture
def gf3():
    return PrimeField(3)


@pytest.fixture
def gf5():
    return PrimeField(5)


@pytest.fixture
def gf7():
    return PrimeField(7)


@pytest.fixture
def qq():
    return QQ
