"""Sparse truncated power series with termwise (Hadamard) products.

A series stores its non-zero coefficients and a truncation horizon T:
coefficients above T are unknown, so every operation propagates the
smallest horizon it was fed. ``horizon=None`` marks an exact polynomial.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from ..core.errors import (
    HorizonTooSmallError,
    InvalidContourError,
    NotCharacteristicError,
    SeriesError,
)

logger = logging.getLogger(__name__)

Horizon = Optional[int]
Analytic = Union["SparseSeries", Callable[[np.ndarray], np.ndarray]]


def meet(*horizons: Horizon) -> Horizon:
    """Smallest finite horizon, or None when every input is exact."""
    finite = [h for h in horizons if h is not None]
    return min(finite) if finite else None


@dataclass(frozen=True)
class SparseSeries:
    terms: tuple[tuple[int, int], ...] = ()
    horizon: Horizon = None

    def __post_init__(self) -> None:
        if self.horizon is not None and self.horizon < 0:
            raise HorizonTooSmallError(f"horizon must be >= 0, got {self.horizon}")
        merged: dict[int, int] = {}
        for e, c in self.terms:
            if e < 0:
                raise SeriesError(f"negative exponent {e}")
            merged[e] = merged.get(e, 0) + int(c)
        cleaned = tuple(
            (e, c)
            for e, c in sorted(merged.items())
            if c != 0 and (self.horizon is None or e <= self.horizon)
        )
        object.__setattr__(self, "terms", cleaned)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_mapping(cls, coeffs: Mapping[int, int], horizon: Horizon = None) -> "SparseSeries":
        return cls(tuple(coeffs.items()), horizon)

    @classmethod
    def zero(cls, horizon: Horizon = None) -> "SparseSeries":
        return cls((), horizon)

    @classmethod
    def constant(cls, value: int, horizon: Horizon = None) -> "SparseSeries":
        return cls(((0, value),), horizon)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, horizon: Horizon = None) -> "SparseSeries":
        return cls(((exponent, coeff),), horizon)

    @classmethod
    def geometric(cls, step: int, horizon: int) -> "SparseSeries":
        """1/(1 - z^step) truncated at *horizon*."""
        if step < 1:
            raise SeriesError(f"step must be >= 1, got {step}")
        return cls(tuple((e, 1) for e in range(0, horizon + 1, step)), horizon)

    @classmethod
    def from_array(cls, coeffs: np.ndarray, horizon: Horizon = None) -> "SparseSeries":
        idx = np.flatnonzero(coeffs)
        return cls(tuple(zip(idx.tolist(), coeffs[idx].tolist())), horizon)

    # -- accessors ------------------------------------------------------------

    @cached_property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def coefficient(self, n: int) -> int:
        if self.horizon is not None and n > self.horizon:
            raise HorizonTooSmallError(
                f"coefficient {n} requested beyond horizon {self.horizon}"
            )
        return self.coeffs.get(n, 0)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lowest_exponent(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    @property
    def degree(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    def at_one(self) -> int:
        """Sum of coefficients, i.e. the value at z = 1 of the stored terms."""
        return sum(c for _, c in self.terms)

    def to_array(self, length: int | None = None) -> np.ndarray:
        if length is None:
            if self.horizon is not None:
                length = self.horizon + 1
            else:
                length = (self.degree or 0) + 1
        out = np.zeros(length, dtype=np.int64)
        for e, c in self.terms:
            if e < length:
                out[e] = c
        return out

    def evaluate(self, z):
        """Value of the stored terms at z (scalar or numpy array)."""
        z = np.asarray(z, dtype=complex)
        if not self.terms:
            return np.zeros_like(z)
        exps = np.array(self.exponents, dtype=np.int64)
        values = np.array([c for _, c in self.terms], dtype=float)
        return np.power.outer(z, exps) @ values

    def __call__(self, z):
        return self.evaluate(z)

    # -- algebra --------------------------------------------------------------

    def __add__(self, other: "SparseSeries") -> "SparseSeries":
        coeffs = dict(self.coeffs)
        for e, c in other.terms:
            coeffs[e] = coeffs.get(e, 0) + c
        return SparseSeries.from_mapping(coeffs, meet(self.horizon, other.horizon))

    def __neg__(self) -> "SparseSeries":
        return SparseSeries(tuple((e, -c) for e, c in self.terms), self.horizon)

    def __sub__(self, other: "SparseSeries") -> "SparseSeries":
        return self + (-other)

    def __mul__(self, other: "SparseSeries") -> "SparseSeries":
        """Cauchy product, truncated at the common horizon."""
        horizon = meet(self.horizon, other.horizon)
        coeffs: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                if horizon is not None and e > horizon:
                    continue
                coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return SparseSeries.from_mapping(coeffs, horizon)

    def truncate(self, horizon: int) -> "SparseSeries":
        return SparseSeries(self.terms, meet(self.horizon, horizon))

    def substitute_power(self, k: int) -> "SparseSeries":
        """u(z) -> u(z^k)."""
        if k < 1:
            raise SeriesError(f"power must be >= 1, got {k}")
        horizon = None if self.horizon is None else self.horizon * k
        return SparseSeries(tuple((e * k, c) for e, c in self.terms), horizon)

    def __str__(self) -> str:
        if not self.terms:
            body = "0"
        else:
            parts = []
            for e, c in self.terms:
                mono = "1" if e == 0 else ("z" if e == 1 else f"z^{e}")
                if e == 0:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
            body = " + ".join(parts).replace("+ -", "- ")
        return body if self.horizon is None else f"{body} + O(z^{self.horizon + 1})"


# -- set <-> series -----------------------------------------------------------


def tau_inverse(values: Iterable[int], horizon: int) -> SparseSeries:
    """Characteristic series of a finite set of non-negative integers."""
    elements = sorted(set(values))
    if elements and elements[-1] > horizon:
        raise HorizonTooSmallError(
            f"set element {elements[-1]} lies beyond horizon {horizon}"
        )
    if elements and elements[0] < 0:
        raise SeriesError(f"negative set element {elements[0]}")
    return SparseSeries(tuple((e, 1) for e in elements), horizon)


def tau(series: SparseSeries) -> frozenset[int]:
    """The set enumerated by a 0/1 series."""
    _require_characteristic(series)
    return frozenset(series.exponents)


def _require_characteristic(series: SparseSeries) -> None:
    for e, c in series.terms:
        if c != 1:
            raise NotCharacteristicError(f"coefficient {c} at z^{e} is not 0 or 1")


# -- Hadamard products ----------------------------------------------------------


def hadamard(u: SparseSeries, v: SparseSeries) -> SparseSeries:
    """Termwise product: coefficient n of the result is u_n * v_n."""
    small, large = (u, v) if len(u.terms) <= len(v.terms) else (v, u)
    other = large.coeffs
    terms = tuple((e, c * other[e]) for e, c in small.terms if e in other)
    return SparseSeries(terms, meet(u.horizon, v.horizon))


def circ(u: SparseSeries, v: SparseSeries) -> SparseSeries:
    """Sum of u_n * v_n * z^(2n); horizon doubles."""
    h = meet(u.horizon, v.horizon)
    product = hadamard(u, v)
    return SparseSeries(
        tuple((2 * e, c) for e, c in product.terms),
        None if h is None else 2 * h,
    )


def hadamard_multi(us: Sequence[SparseSeries]) -> SparseSeries:
    if not us:
        raise SeriesError("hadamard_multi needs at least one operand")
    return reduce(hadamard, us)


def multisection(u: SparseSeries, n: int) -> SparseSeries:
    """Keep the terms of u whose exponent is divisible by n.

    Equals u (x) 1/(1 - z^n), the average of u(z w^k) over the n-th roots
    of unity w^k.
    """
    if n < 1:
        raise SeriesError(f"multisection step must be >= 1, got {n}")
    return SparseSeries(tuple((e, c) for e, c in u.terms if e % n == 0), u.horizon)


def intersect_sets_series(a: SparseSeries, b: SparseSeries) -> SparseSeries:
    """Characteristic series of tau(a) & tau(b)."""
    _require_characteristic(a)
    _require_characteristic(b)
    return hadamard(a, b)


# -- rational expansion ----------------------------------------------------------


def expand_rational_array(
    numerator: SparseSeries, degrees: Iterable[int], horizon: int
) -> np.ndarray:
    """Dense coefficients 0..horizon of numerator / prod(1 - z^d)."""
    if horizon < 0:
        raise HorizonTooSmallError(f"horizon must be >= 0, got {horizon}")
    if numerator.horizon is not None and numerator.horizon < horizon:
        raise HorizonTooSmallError(
            f"numerator known to {numerator.horizon}, expansion asked to {horizon}"
        )
    out = numerator.to_array(horizon + 1)
    for d in degrees:
        out = _divide_by_binomial(out, d)
    return out


def _divide_by_binomial(coeffs: np.ndarray, d: int) -> np.ndarray:
    # c_n += c_{n-d}, done as a running sum inside each residue class mod d
    n = len(coeffs)
    pad = (-n) % d
    grid = np.concatenate([coeffs, np.zeros(pad, dtype=coeffs.dtype)]).reshape(-1, d)
    return np.cumsum(grid, axis=0).ravel()[:n]


def expand_rational(
    numerator: SparseSeries, degrees: Iterable[int], horizon: int
) -> SparseSeries:
    return SparseSeries.from_array(
        expand_rational_array(numerator, degrees, horizon), horizon
    )


def pair_numerator(a: int, b: int) -> SparseSeries:
    """1 - z^lcm(a, b); for a coprime pair the lcm is a*b."""
    return SparseSeries(((0, 1), (math.lcm(a, b), -1)))


def pair_hilbert(a: int, b: int, horizon: int) -> SparseSeries:
    """0/1 series of the set <a, b> = {x*a + y*b}."""
    return expand_rational(pair_numerator(a, b), (a, b), horizon)


# -- numeric cross-checks -----------------------------------------------------------


def _as_function(u: Analytic) -> Callable[[np.ndarray], np.ndarray]:
    return u.evaluate if isinstance(u, SparseSeries) else u


def hadamard_numeric(
    u: Analytic, v: Analytic, z: complex, radius: float, points: int
) -> complex:
    """Contour-integral form of u (x) v at z, trapezoidal rule on |w| = radius.

    The factor u is sampled on the circle and v at (z / radius) e^{-it}, so
    both stay inside the unit disk when |z| < radius < 1.
    """
    if not abs(z) < radius < 1.0:
        raise InvalidContourError(
            f"need |z| < radius < 1, got |z|={abs(z):.6g}, radius={radius}"
        )
    if points < 1:
        raise InvalidContourError(f"need at least one quadrature point, got {points}")
    t = 2.0 * math.pi * np.arange(points) / points
    phase = np.exp(1j * t)
    values = _as_function(u)(radius * phase) * _as_function(v)((z / radius) / phase)
    return complex(np.mean(values))


def multisection_average(u: Analytic, n: int, z: complex) -> complex:
    """(1/n) * sum over k of u(z * w^k), w = exp(2*pi*i/n)."""
    if n < 1:
        raise SeriesError(f"multisection step must be >= 1, got {n}")
    roots = np.exp(2j * math.pi * np.arange(n) / n)
    return complex(np.mean(_as_function(u)(z * roots)))
