"""The auxiliary series Psi_k and its numeric (contour) forms.

Psi_k(z) = H_jl(z) (x) 1/(1 - z^{d_k}) - 1, where H_jl is the Hilbert
series of the pair (d_j, d_l). Its exponents are the multiples b*d_k that
<d_j, d_l> represents, so the lowest one is a_kk * d_k.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..core.config import get_config
from ..core.errors import GeneratorsError, HorizonTooSmallError, InvalidContourError
from ..core.generators import Generators, other_axes
from .sparse import (
    SparseSeries,
    hadamard_numeric,
    intersect_sets_series,
    multisection,
    pair_hilbert,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PsiSeries:
    base: SparseSeries
    k: int
    gens: Generators

    @property
    def step(self) -> int:
        return self.gens.axis(self.k)

    @property
    def lowest_exponent(self) -> int | None:
        return self.base.lowest_exponent

    @property
    def multipliers(self) -> tuple[int, ...]:
        """The integers b with b*d_k representable by the other two generators."""
        return tuple(e // self.step for e in self.base.exponents)

    @property
    def diagonal(self) -> int:
        """a_kk: the lowest exponent divided by d_k."""
        low = self.lowest_exponent
        if low is None:
            raise HorizonTooSmallError(
                f"Psi_{self.k} of {self.gens} has no term below {self.base.horizon}"
            )
        return low // self.step


def _require_triple(gens: Generators) -> None:
    if gens.m != 3:
        raise GeneratorsError(f"expected three generators, got m={gens.m}")


def _pair(gens: Generators, k: int) -> tuple[int, int, int]:
    j, l = other_axes(k)
    return gens.axis(k), gens.axis(j), gens.axis(l)


def default_horizon(gens: Generators, k: int) -> int:
    """d_j*d_l, raised to min(d_j, d_l)*d_k when that is larger.

    min(d_j, d_l)*d_k is always representable, so the first term of Psi_k
    is guaranteed to fall inside this horizon.
    """
    dk, dj, dl = _pair(gens, k)
    return max(dj * dl, min(dj, dl) * dk)


def psi(gens: Generators, k: int, horizon: int | None = None) -> PsiSeries:
    _require_triple(gens)
    dk, dj, dl = _pair(gens, k)
    if horizon is None:
        horizon = default_horizon(gens, k)
    if horizon < dj * dl:
        raise HorizonTooSmallError(
            f"Psi_{k} needs horizon >= d_j*d_l = {dj * dl}, got {horizon}"
        )

    sliced = multisection(pair_hilbert(dj, dl, horizon), dk)
    if any(c != 1 for _, c in sliced.terms):
        raise GeneratorsError(f"pair ({dj}, {dl}) series is not 0/1")
    # drop the constant term
    base = sliced - SparseSeries.constant(1, horizon)
    if base.is_zero:
        raise HorizonTooSmallError(
            f"Psi_{k} of {gens} has no term up to horizon {horizon}"
        )
    logger.debug("Psi_%d%s: %d terms to %d", k, gens, len(base.terms), horizon)
    return PsiSeries(base=base, k=k, gens=gens)


def gap_multiples(gens: Generators, k: int, horizon: int | None = None) -> SparseSeries:
    """Characteristic series of the multiples of d_k that <d_j, d_l> misses."""
    _require_triple(gens)
    dk, dj, dl = _pair(gens, k)
    if horizon is None:
        horizon = dj * dl
    gaps = SparseSeries.geometric(1, horizon) - pair_hilbert(dj, dl, horizon)
    multiples = SparseSeries.geometric(dk, horizon)
    return intersect_sets_series(gaps, multiples)


def largest_gap_multiple(gens: Generators, k: int) -> int:
    """N_k: the largest N with N*d_k a gap of the coprime pair (d_j, d_l)."""
    _require_triple(gens)
    dk, dj, dl = _pair(gens, k)
    if math.gcd(dj, dl) != 1:
        raise GeneratorsError(f"pair ({dj}, {dl}) is not coprime; its gap set is infinite")
    series = gap_multiples(gens, k)
    top = series.degree
    return 0 if top is None else top // dk


def _pair_hilbert_closed(dj: int, dl: int):
    top = math.lcm(dj, dl)

    def h(w: np.ndarray) -> np.ndarray:
        return (1 - w**top) / ((1 - w**dj) * (1 - w**dl))

    return h


def psi_numeric(
    gens: Generators,
    k: int,
    z: complex,
    radius: float | None = None,
    points: int | None = None,
) -> complex:
    """Psi_k(z) by contour quadrature on |w| = radius < 1.

    The pair Hilbert series is sampled on the circle and 1/(1 - w^{d_k}) at
    (z / radius) e^{-it}; the unit circle itself carries poles of H_jl.
    """
    _require_triple(gens)
    cfg = get_config()
    radius = cfg.contour_radius if radius is None else radius
    points = cfg.quadrature_points if points is None else points
    if not abs(z) < radius < 1.0:
        raise InvalidContourError(
            f"need |z| < radius < 1, got |z|={abs(z):.6g}, radius={radius}"
        )
    if z == 0:
        return 0j

    dk, dj, dl = _pair(gens, k)

    def ones(w: np.ndarray) -> np.ndarray:
        return 1 / (1 - w**dk)

    return hadamard_numeric(_pair_hilbert_closed(dj, dl), ones, z, radius, points) - 1


def xi_numeric(
    gens: Generators,
    k: int,
    b: float,
    radius: float | None = None,
    points: int | None = None,
) -> float:
    """Xi_k at a real b: 1 minus the contour coefficient integral at n = b*d_k.

    At integer b this is the exact Xi up to quadrature error. The radius
    defaults to exp(-1/n) so that radius**n stays of order one.
    """
    _require_triple(gens)
    if b <= 0:
        raise InvalidContourError(f"b must be positive, got {b}")
    dk, dj, dl = _pair(gens, k)
    n = b * dk
    if radius is None:
        radius = math.exp(-1.0 / n)
    if not 0.0 < radius < 1.0:
        raise InvalidContourError(f"radius must lie in (0, 1), got {radius}")
    if points is None:
        points = max(get_config().quadrature_points, 32 * math.ceil(n))

    t = 2.0 * math.pi * np.arange(points) / points
    w = radius * np.exp(1j * t)
    integrand = _pair_hilbert_closed(dj, dl)(w) * np.exp(-1j * n * t)
    coefficient = np.mean(integrand).real / radius**n
    return float(1.0 - coefficient)
