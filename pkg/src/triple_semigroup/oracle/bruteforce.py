"""Brute-force ground truth: a reachability table over 0..bound.

Nothing here calls into the series or invariants code, so results can be
compared against the formulas without sharing any logic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..core.errors import GeneratorsError, HorizonTooSmallError, SamplingError
from ..core.generators import GapSet, Generators, validate
from ..series.sparse import SparseSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepresentabilityTable:
    """reachable[n] is True iff n is a non-negative combination of the generators."""

    gens: tuple[int, ...]
    bound: int
    reachable: np.ndarray

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, (int, np.integer)):
            return False
        if n < 0:
            return False
        if n > self.bound:
            raise HorizonTooSmallError(f"{n} lies beyond the table bound {self.bound}")
        return bool(self.reachable[n])


def _close_under(reachable: np.ndarray, d: int) -> np.ndarray:
    # n reachable => n + d reachable: prefix OR inside each residue class mod d
    n = len(reachable)
    pad = (-n) % d
    grid = np.concatenate([reachable, np.zeros(pad, dtype=bool)]).reshape(-1, d)
    return np.logical_or.accumulate(grid, axis=0).ravel()[:n]


def default_bound(d: tuple[int, ...]) -> int:
    """A table length that always reaches past the conductor.

    The conductor F + 1 of <d1, ..., dm> never exceeds (d1 - 1)(dm - 1), so
    the top d1 entries of 0..(d1 - 1)(dm - 1) + d1 are all reachable. Pairs
    keep d1*d2, which is larger.
    """
    d1, dm = min(d), max(d)
    return max(d[0] * d[1], (d1 - 1) * (dm - 1) + d1)


def build_table(gens: Generators | tuple[int, ...], bound: int | None = None) -> RepresentabilityTable:
    d = tuple(gens.d if isinstance(gens, Generators) else gens)
    if len(d) < 2:
        raise GeneratorsError("the oracle needs at least two generators")
    if bound is None:
        bound = default_bound(d)
    if bound < 0:
        raise HorizonTooSmallError(f"bound must be >= 0, got {bound}")
    reachable = np.zeros(bound + 1, dtype=bool)
    reachable[0] = True
    for step in d:
        reachable = _close_under(reachable, step)
    logger.debug("table for %s to %d: %d reachable", d, bound, int(reachable.sum()))
    return RepresentabilityTable(gens=d, bound=bound, reachable=reachable)


def gaps_bruteforce(gens: Generators, bound: int | None = None) -> GapSet:
    table = build_table(gens, bound)
    d1 = table.gens[0]
    # d1 consecutive elements at the top mean everything beyond is reachable
    if table.bound + 1 < d1 or not table.reachable[-d1:].all():
        raise HorizonTooSmallError(
            f"table bound {table.bound} does not reach the conductor of {gens}"
        )
    return GapSet.of(np.flatnonzero(~table.reachable).tolist())


def frobenius_bruteforce(gens: Generators, bound: int | None = None) -> int:
    return gaps_bruteforce(gens, bound).frobenius


def genus_bruteforce(gens: Generators, bound: int | None = None) -> int:
    return gaps_bruteforce(gens, bound).genus


def hilbert_bruteforce(gens: Generators, horizon: int) -> SparseSeries:
    table = build_table(gens, horizon)
    return SparseSeries.from_array(table.reachable.astype(np.int64), horizon)


def johnson_direct(gens: Generators) -> tuple[int, int, int]:
    """(a11, a22, a33) as the least v >= 2 with v*d_k in <d_j, d_l>."""
    if gens.m != 3:
        raise GeneratorsError(f"expected three generators, got m={gens.m}")
    d = gens.d
    out = []
    for k in range(3):
        dk = d[k]
        dj, dl = d[(k + 1) % 3], d[(k + 2) % 3]
        table = build_table((dj, dl), dk * min(dj, dl))
        hits = np.flatnonzero(table.reachable[2 * dk :: dk])
        out.append(int(hits[0]) + 2)
    return tuple(out)  # type: ignore[return-value]


def sample_triples(count: int, max_d: int, seed: int) -> list[Generators]:
    """*count* distinct valid triples with d3 <= max_d, same list for the same seed."""
    if count < 0:
        raise SamplingError(f"count must be >= 0, got {count}")
    if max_d < 5:
        raise SamplingError(f"max_d must be >= 5 to admit any triple, got {max_d}")
    rng = np.random.default_rng(seed)
    seen: set[tuple[int, ...]] = set()
    out: list[Generators] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * (count + 1):
            raise SamplingError(f"could not draw {count} triples with d3 <= {max_d}")
        raw = tuple(sorted(int(x) for x in rng.choice(np.arange(3, max_d + 1), 3, replace=False)))
        if raw in seen:
            continue
        try:
            gens = validate(raw)
        except GeneratorsError:
            continue
        seen.add(raw)
        out.append(gens)
    return out
