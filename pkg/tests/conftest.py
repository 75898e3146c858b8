import pytest

from derhed.linalg import PrimeField


@pytest.fixture(scope="session")
def fld():
    return PrimeField()
