import pytest

from triple_semigroup.core.config import DEFAULT_MAGNITUDE_GUARD, get_config
from triple_semigroup.core.errors import ConfigError


def test_defaults():
    cfg = get_config()
    assert cfg.magnitude_guard == DEFAULT_MAGNITUDE_GUARD == 2**40
    assert cfg.jobs == 1
    assert cfg.contour_radius == 0.9
    assert cfg.quadrature_points == 2**14


def test_env_override(monkeypatch):
    monkeypatch.setenv("TSG_MAGNITUDE_GUARD", "1_000_000")
    monkeypatch.setenv("TSG_JOBS", "4")
    cfg = get_config()
    assert cfg.magnitude_guard == 1_000_000
    assert cfg.jobs == 4


@pytest.mark.parametrize(
    "name, value",
    [
        ("TSG_MAGNITUDE_GUARD", "lots"),
        ("TSG_MAGNITUDE_GUARD", "0"),
        ("TSG_JOBS", "-2"),
        ("TSG_CONTOUR_RADIUS", "1.5"),
        ("TSG_CONTOUR_RADIUS", "wide"),
        ("TSG_QUADRATURE_POINTS", "0"),
    ],
)
def test_bad_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        get_config()
