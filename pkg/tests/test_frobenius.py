import pytest

from triple_semigroup.core.errors import HorizonTooSmallError, InvariantError
from triple_semigroup.core.generators import INFINITE, validate
from triple_semigroup.invariants.frobenius import (
    frobenius_genus,
    gap_generating_function,
    hilbert_series,
    invariants,
    numerator,
)
from triple_semigroup.oracle.bruteforce import (
    frobenius_bruteforce,
    gaps_bruteforce,
    hilbert_bruteforce,
)
from triple_semigroup.series.sparse import SparseSeries, expand_rational, tau


def test_wide_triple(wide_triple):
    inv = invariants(wide_triple)
    assert inv.frobenius == 239
    assert inv.genus == 122
    assert inv.j_value == 86
    assert not inv.symmetric
    assert inv.diagonal.as_tuple() == (7, 7, 5)
    assert inv.numerator.terms == (
        (0, 1),
        (161, -1),
        (203, -1),
        (220, -1),
        (249, 1),
        (335, 1),
    )
    assert inv.matrix.to_lists() == [[7, 1, 3], [5, 7, 2], [2, 6, 5]]


def test_small_triple(small_triple):
    inv = invariants(small_triple)
    assert (inv.frobenius, inv.genus, inv.j_value) == (2, 2, 1)
    assert inv.numerator.terms == ((0, 1), (8, -1), (9, -1), (10, -1), (13, 1), (14, 1))


def test_symmetric_branch(symmetric_triple):
    inv = invariants(symmetric_triple)
    assert inv.symmetric
    assert inv.symmetric_pair == (1, 3)
    assert inv.numerator.terms == ((0, 1), (10, -1), (12, -1), (22, 1))
    assert (inv.frobenius, inv.genus) == (7, 4)
    assert inv.matrix is None
    assert inv.j_value == 10
    assert inv.genus_by_formula == 4
    assert inv.numerator_collapses is True


def test_symmetric_with_three_equal_weights():
    inv = invariants(validate((6, 10, 15)))
    assert inv.symmetric
    assert inv.numerator.terms == ((0, 1), (30, -2), (60, 1))
    assert (inv.frobenius, inv.genus) == (29, 15)
    assert inv.numerator_collapses is True


def test_needs_three_generators():
    with pytest.raises(InvariantError):
        invariants(validate((3, 5)))


def test_oracle_equivalence(random_triples):
    assert len(random_triples) == 500
    assert all(g.d[2] <= 300 for g in random_triples)
    for gens in random_triples:
        inv = invariants(gens)
        gaps = gaps_bruteforce(gens)
        assert (inv.frobenius, inv.genus) == (gaps.frobenius, gaps.genus), gens


def test_numerator_identity(random_triples):
    for gens in random_triples[:100]:
        inv = invariants(gens)
        horizon = inv.frobenius + gens.d[2]
        assert expand_rational(inv.numerator, gens.d, horizon) == hilbert_bruteforce(gens, horizon), gens
        assert inv.numerator.at_one() == 0
        assert inv.numerator.degree - gens.total == inv.frobenius


def test_nonsymmetric_numerator_shape(random_triples):
    for gens in random_triples:
        inv = invariants(gens)
        if inv.symmetric:
            continue
        coeffs = sorted(c for _, c in inv.numerator.terms)
        assert coeffs == [-1, -1, -1, 1, 1, 1], gens


def test_symmetric_collapse_on_sample(random_triples):
    symmetric = [g for g in random_triples if invariants(g).symmetric]
    for gens in symmetric:
        inv = invariants(gens)
        assert inv.frobenius == frobenius_bruteforce(gens)
        if inv.numerator_collapses is not None:
            assert inv.numerator_collapses, gens


def test_numerator_any_dimension():
    assert numerator(validate((7,))).terms == ((0, 1),)
    assert numerator(validate((3, 5))).terms == ((0, 1), (15, -1))


def test_hilbert_series(small_triple):
    h = hilbert_series(small_triple)
    assert h.horizon == 3
    assert h.exponents == (0, 3)
    assert hilbert_series(small_triple, 10) == hilbert_bruteforce(small_triple, 10)
    assert hilbert_series(validate((3, 5)), 10).exponents == (0, 3, 5, 6, 8, 9, 10)
    assert hilbert_series(validate((4,)), 12).exponents == (0, 4, 8, 12)


def test_gap_generating_function(small_triple, wide_triple):
    phi = gap_generating_function(small_triple)
    assert phi.terms == ((1, 1), (2, 1))
    phi = gap_generating_function(wide_triple)
    assert phi.degree == 239
    assert phi.at_one() == 122
    assert tau(phi) == frozenset(gaps_bruteforce(wide_triple))
    assert gap_generating_function(validate((3, 5))).at_one() == 4


def test_gap_generating_function_horizon(small_triple):
    with pytest.raises(HorizonTooSmallError):
        gap_generating_function(small_triple, 1)
    with pytest.raises(HorizonTooSmallError):
        gap_generating_function(validate((5,)))


def test_frobenius_genus_dispatch(small_triple):
    assert frobenius_genus(validate((3, 5))).frobenius == 7
    assert frobenius_genus(validate((2,))).genus is INFINITE
    assert frobenius_genus(small_triple).genus == 2


def test_hilbert_series_examples(small_triple, symmetric_triple):
    assert hilbert_series(small_triple, 10).exponents == (0, 3, 4, 5, 6, 7, 8, 9, 10)
    assert hilbert_series(symmetric_triple, 8).exponents == (0, 4, 5, 6, 8)


def test_gap_generating_function_examples(symmetric_triple):
    assert gap_generating_function(symmetric_triple).exponents == (1, 2, 3, 7)
    assert gap_generating_function(validate((3, 5))).exponents == (1, 2, 4, 7)


def test_hilbert_plus_gaps_is_all_ones(random_triples):
    for gens in random_triples[:50]:
        horizon = frobenius_genus(gens).frobenius + 10
        total = hilbert_series(gens, horizon) + gap_generating_function(gens, horizon)
        assert total == SparseSeries.geometric(1, horizon)


def test_numerator_from_oracle_series(random_triples):
    for gens in random_triples[:50]:
        inv = invariants(gens)
        top = inv.numerator.degree
        q = hilbert_bruteforce(gens, top)
        for d in gens.d:
            q = q * SparseSeries(((0, 1), (d, -1)), top)
        assert q.terms == inv.numerator.terms, gens
