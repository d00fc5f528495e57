"""Frobenius number, genus, J and the Hilbert-series numerator Q."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..core.errors import (
    HorizonTooSmallError,
    InvariantError,
    NotPerfectSquareError,
)
from ..core.generators import FrobeniusGenus, Generators, closed_form, exact_sqrt
from ..series.sparse import SparseSeries, expand_rational, pair_numerator
from .johnson import (
    DiagonalTriple,
    JohnsonMatrix,
    diagonal_via_xi,
    inner_product,
    is_symmetric,
    j_squared,
    off_diagonal,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Invariants3:
    gens: Generators
    frobenius: int
    genus: int
    j_value: int | None
    numerator: SparseSeries
    symmetric: bool
    diagonal: DiagonalTriple
    matrix: JohnsonMatrix | None = None
    symmetric_pair: tuple[int, int] | None = None
    genus_by_formula: int | None = None
    numerator_collapses: bool | None = None


def j_invariant(gens: Generators, diag: DiagonalTriple) -> int:
    return exact_sqrt(j_squared(gens, diag))


def numerator_nonsymmetric(gens: Generators, diag: DiagonalTriple, j_value: int) -> SparseSeries:
    """Q_n = 1 - sum z^{a_kk d_k} + z^{(<a,d> - J)/2} + z^{(<a,d> + J)/2}."""
    total = inner_product(gens, diag)
    if (total + j_value) % 2:
        raise InvariantError(f"<a,d> + J = {total + j_value} is odd for {gens}")
    terms = [(0, 1)]
    terms += [(x, -1) for x in diag.weighted(gens)]
    terms += [((total - j_value) // 2, 1), ((total + j_value) // 2, 1)]
    return SparseSeries(tuple(terms))


def numerator_symmetric(
    gens: Generators, diag: DiagonalTriple, pair: tuple[int, int]
) -> SparseSeries:
    """Q_s = (1 - z^{a_jj d_j})(1 - z^{a_mm d_m}) for the matched pair (i, j)."""
    _, j = pair
    m = 6 - sum(pair)
    weighted = diag.weighted(gens)
    return SparseSeries(((0, 1), (weighted[j - 1], -1))) * SparseSeries(
        ((0, 1), (weighted[m - 1], -1))
    )


def _genus_formula(gens: Generators, diag: DiagonalTriple) -> int | None:
    total = inner_product(gens, diag)
    value = 1 + total - gens.total - diag.a11 * diag.a22 * diag.a33
    if value % 2:
        return None
    return value // 2


def _genus_from_numerator(gens: Generators, q: SparseSeries, frobenius: int) -> int:
    # gaps below the conductor: F + 1 slots minus the semigroup elements
    h = expand_rational(q, gens.d, frobenius)
    return frobenius + 1 - h.at_one()


def invariants(gens: Generators) -> Invariants3:
    if gens.m != 3:
        raise InvariantError(f"invariants needs three generators, got m={gens.m}")
    diag = diagonal_via_xi(gens)
    symmetry = is_symmetric(gens, diag)
    genus_by_formula = _genus_formula(gens, diag)

    if not symmetry:
        j_value = j_invariant(gens, diag)
        q = numerator_nonsymmetric(gens, diag, j_value)
        frobenius = (inner_product(gens, diag) + j_value) // 2 - gens.total
        if genus_by_formula is None:
            raise InvariantError(f"genus formula is not an integer for {gens}")
        if q.degree is not None and q.degree - gens.total != frobenius:
            logger.warning("deg Q - sum d != F for %s", gens)
        return Invariants3(
            gens=gens,
            frobenius=frobenius,
            genus=genus_by_formula,
            j_value=j_value,
            numerator=q,
            symmetric=False,
            diagonal=diag,
            matrix=off_diagonal(gens, diag),
            genus_by_formula=genus_by_formula,
        )

    assert symmetry.pair is not None
    q = numerator_symmetric(gens, diag, symmetry.pair)
    frobenius = (q.degree or 0) - gens.total
    genus = _genus_from_numerator(gens, q, frobenius)
    if genus_by_formula != genus:
        logger.warning(
            "genus formula gives %s, series gives %d for symmetric %s",
            genus_by_formula,
            genus,
            gens,
        )

    j_value: int | None
    collapses: bool | None
    try:
        j_value = j_invariant(gens, diag)
        collapses = numerator_nonsymmetric(gens, diag, j_value) == q
    except (NotPerfectSquareError, InvariantError):
        j_value, collapses = None, None
    if collapses is False:
        logger.warning("Q_n does not collapse to Q_s for symmetric %s", gens)

    return Invariants3(
        gens=gens,
        frobenius=frobenius,
        genus=genus,
        j_value=j_value,
        numerator=q,
        symmetric=True,
        diagonal=diag,
        symmetric_pair=symmetry.pair,
        genus_by_formula=genus_by_formula,
        numerator_collapses=collapses,
    )


def frobenius_genus(gens: Generators) -> FrobeniusGenus:
    """F and G for any embedding dimension."""
    if gens.m < 3:
        return closed_form(gens)
    inv = invariants(gens)
    return FrobeniusGenus(frobenius=inv.frobenius, genus=inv.genus)


def numerator(gens: Generators) -> SparseSeries:
    if gens.m == 1:
        return SparseSeries.constant(1)
    if gens.m == 2:
        return pair_numerator(*gens.d)
    return invariants(gens).numerator


def hilbert_series(gens: Generators, horizon: int | None = None) -> SparseSeries:
    """Q / prod(1 - z^{d_j}) expanded to *horizon* (default: the conductor)."""
    if horizon is None:
        if gens.m == 1:
            horizon = gens.d[0]
        else:
            horizon = int(frobenius_genus(gens).frobenius) + 1
    if horizon < 0:
        raise HorizonTooSmallError(f"horizon must be >= 0, got {horizon}")
    h = expand_rational(numerator(gens), gens.d, horizon)
    bad = [(e, c) for e, c in h.terms if c != 1]
    if bad:
        raise InvariantError(f"Hilbert series of {gens} has coefficient {bad[0][1]} at z^{bad[0][0]}")
    return h


def gap_generating_function(gens: Generators, horizon: int | None = None) -> SparseSeries:
    """Phi = 1/(1 - z) - H; a polynomial of degree F whose value at 1 is G."""
    if gens.m == 1:
        raise HorizonTooSmallError(f"{gens} has infinitely many gaps")
    frobenius = int(frobenius_genus(gens).frobenius)
    if horizon is None:
        horizon = max(frobenius, 0)
    if horizon < frobenius:
        raise HorizonTooSmallError(
            f"gap series needs horizon >= F = {frobenius}, got {horizon}"
        )
    return SparseSeries.geometric(1, horizon) - hilbert_series(gens, horizon)
