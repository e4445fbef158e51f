import pytest
from kkdrop.algebra import DimensionDropAlgebra
from kkdrop.config import EQUALITY_ENV_VAR
from kkdrop.kk import KKElement


@pytest.fixture(autouse=True)
def default_equality(monkeypatch):
    monkeypatch.delenv(EQUALITY_ENV_VAR, raising=False)


@pytest.fixture
def algebra():
    return DimensionDropAlgebra(m0=2, m=12, m1=3)


@pytest.fixture
def doubled():
    return DimensionDropAlgebra(m0=2, m=24, m1=3)


@pytest.fixture
def element(algebra):
    def make(*coeffs: int) -> KKElement:
        return KKElement(source=algebra, target=algebra, coeffs=coeffs)

    return make
