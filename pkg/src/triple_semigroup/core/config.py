"""Centralised configuration helpers."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ConfigError

DEFAULT_MAGNITUDE_GUARD = 2**40


@dataclass(frozen=True)
class SemigroupConfig:
    magnitude_guard: int = DEFAULT_MAGNITUDE_GUARD
    jobs: int = 1
    contour_radius: float = 0.9
    quadrature_points: int = 2**14


def get_config() -> SemigroupConfig:
    """Read and validate TSG_* env vars. Raises ConfigError on bad values."""
    defaults = SemigroupConfig()
    guard = _read_int("TSG_MAGNITUDE_GUARD", defaults.magnitude_guard)
    jobs = _read_int("TSG_JOBS", defaults.jobs)
    points = _read_int("TSG_QUADRATURE_POINTS", defaults.quadrature_points)
    radius = _read_float("TSG_CONTOUR_RADIUS", defaults.contour_radius)

    bad: list[str] = []
    if guard < 1:
        bad.append("TSG_MAGNITUDE_GUARD")
    if jobs < 1:
        bad.append("TSG_JOBS")
    if points < 1:
        bad.append("TSG_QUADRATURE_POINTS")
    if not 0.0 < radius < 1.0:
        bad.append("TSG_CONTOUR_RADIUS")
    if bad:
        raise ConfigError(f"Out of range env: {', '.join(bad)}")

    return SemigroupConfig(
        magnitude_guard=guard,
        jobs=jobs,
        contour_radius=radius,
        quadrature_points=points,
    )


def _read_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if not raw:
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


def _read_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from None
