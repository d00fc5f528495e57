import pytest

from triple_semigroup.core.generators import validate
from triple_semigroup.oracle.bruteforce import sample_triples


@pytest.fixture
def wide_triple():
    return validate((23, 29, 44))


@pytest.fixture
def small_triple():
    return validate((3, 4, 5))


@pytest.fixture
def symmetric_triple():
    return validate((4, 5, 6))


@pytest.fixture(scope="session")
def random_triples():
    return sample_triples(500, 300, seed=2024)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in (
        "TSG_MAGNITUDE_GUARD",
        "TSG_JOBS",
        "TSG_CONTOUR_RADIUS",
        "TSG_QUADRATURE_POINTS",
    ):
        monkeypatch.delenv(name, raising=False)
