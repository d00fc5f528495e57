import math

import numpy as np
import pytest

from triple_semigroup.core.errors import (
    GcdNotOneError,
    GeneratorsError,
    MultiplicityTooSmallError,
    NonMinimalError,
    NotPerfectSquareError,
    NotStrictlyIncreasingError,
    OverflowGuardError,
    PairTooSmallError,
)
from triple_semigroup.core.generators import (
    INFINITE,
    GapSet,
    closed_form,
    ensure_int64,
    exact_sqrt,
    is_representable,
    matrix_representation,
    other_axes,
    representable_by,
    sylvester_pair,
    validate,
)
from triple_semigroup.oracle.bruteforce import build_table, gaps_bruteforce


def test_validate_accepts_triple():
    gens = validate([23, 29, 44])
    assert gens.d == (23, 29, 44)
    assert gens.m == 3
    assert gens.total == 96
    assert gens.axis(3) == 44
    assert str(gens) == "(23, 29, 44)"


@pytest.mark.parametrize(
    "raw, error",
    [
        ((), GeneratorsError),
        ((3, 4, 5, 7), GeneratorsError),
        ((0, 4, 5), GeneratorsError),
        ((3, 3, 4), NotStrictlyIncreasingError),
        ((5, 4, 7), NotStrictlyIncreasingError),
        ((4, 6, 8), GcdNotOneError),
        ((2, 3, 5), MultiplicityTooSmallError),
        ((1, 2), MultiplicityTooSmallError),
        ((1,), MultiplicityTooSmallError),
        ((3, 6, 7), NonMinimalError),
        ((3, 5, 8), NonMinimalError),
        ((4.5, 5, 6), GeneratorsError),
        ((4, 5.25, 6), GeneratorsError),
        ((float("nan"), 5, 6), GeneratorsError),
        ((float("inf"), 5, 6), GeneratorsError),
        (("four", 5, 6), GeneratorsError),
    ],
)
def test_validate_rejects(raw, error):
    with pytest.raises(error):
        validate(raw)


def test_validate_accepts_integral_floats():
    gens = validate((4.0, 5, 6))
    assert gens.d == (4, 5, 6)
    assert all(type(x) is int for x in gens.d)


def test_gcd_message_names_rule():
    with pytest.raises(GcdNotOneError, match="gcd is 2, must be 1"):
        validate((4, 6, 8))


def test_non_minimal_index():
    with pytest.raises(NonMinimalError) as info:
        validate((3, 5, 8))
    assert info.value.index == 3
    assert info.value.value == 8


def test_single_generator_skips_gcd():
    gens = validate((7,))
    assert closed_form(gens).frobenius is INFINITE
    assert closed_form(gens).genus is INFINITE
    assert str(INFINITE) == "∞"


def test_magnitude_guard(monkeypatch):
    with pytest.raises(OverflowGuardError):
        validate((1000, 1001, 1003), guard=10**6)
    monkeypatch.setenv("TSG_MAGNITUDE_GUARD", "100")
    with pytest.raises(OverflowGuardError):
        validate((5, 6, 7))


def test_ensure_int64():
    assert ensure_int64(2**63 - 1) == 2**63 - 1
    with pytest.raises(OverflowGuardError):
        ensure_int64(2**63)


def test_exact_sqrt():
    assert exact_sqrt(7396) == 86
    assert exact_sqrt(0) == 0
    with pytest.raises(NotPerfectSquareError):
        exact_sqrt(10)
    with pytest.raises(NotPerfectSquareError):
        exact_sqrt(-4)


def test_representable_by():
    assert representable_by(9, 4, 5)
    assert not representable_by(6, 4, 5)
    assert representable_by(0, 4, 5)
    assert not representable_by(-3, 4, 5)
    assert is_representable(8, validate((3, 5)))
    assert not is_representable(7, validate((3, 5)))
    with pytest.raises(GeneratorsError):
        is_representable(8, validate((3, 4, 5)))


def test_other_axes():
    assert other_axes(1) == (2, 3)
    assert other_axes(2) == (3, 1)
    assert other_axes(3) == (1, 2)
    with pytest.raises(GeneratorsError):
        other_axes(4)


def test_sylvester_pair():
    fg = sylvester_pair(validate((3, 5)))
    assert (fg.frobenius, fg.genus) == (7, 4)
    fg = sylvester_pair(validate((2, 3)))
    assert (fg.frobenius, fg.genus) == (1, 1)


@pytest.mark.slow
def test_sylvester_matches_oracle_on_every_pair_below_limit():
    limit = 10**5
    checked = 0
    for d1 in range(2, math.isqrt(limit) + 1):
        for d2 in range(d1 + 1, limit // d1 + 1):
            if math.gcd(d1, d2) != 1:
                continue
            gens = validate((d1, d2), guard=limit)
            holes = np.flatnonzero(~build_table(gens).reachable)
            fg = sylvester_pair(gens)
            assert (fg.frobenius, fg.genus) == (int(holes[-1]), holes.size), gens
            checked += 1
    assert checked > 200_000


def test_matrix_representation_three_five():
    entries = matrix_representation(validate((3, 5)))
    grid = {(e.p, e.q): e.value for e in entries}
    assert grid == {
        (1, 1): 7,
        (1, 2): 2,
        (2, 1): 4,
        (2, 2): -1,
        (3, 1): 1,
        (3, 2): -4,
    }
    positives = sorted(e.value for e in entries if e.positive)
    assert positives == [1, 2, 4, 7]


@pytest.mark.parametrize("pair", [(4, 7), (5, 8), (7, 12), (9, 10)])
def test_matrix_representation_hits_every_gap_once(pair):
    gens = validate(pair)
    positives = [e.value for e in matrix_representation(gens) if e.positive]
    assert len(positives) == len(set(positives))
    assert sorted(positives) == list(gaps_bruteforce(gens))


def test_matrix_representation_needs_d1_three():
    with pytest.raises(PairTooSmallError):
        matrix_representation(validate((2, 5)))


def test_gap_set():
    gaps = GapSet.of([7, 1, 2, 4, 2])
    assert gaps.elements == (1, 2, 4, 7)
    assert gaps.frobenius == 7
    assert gaps.genus == 4
    assert 4 in gaps
    assert 5 not in gaps
    assert GapSet.of([]).frobenius == -1


def test_non_minimal_example():
    with pytest.raises(NonMinimalError) as info:
        validate((4, 5, 9))
    assert info.value.index == 3


def test_representability_matches_oracle():
    for pair in [(3, 5), (4, 9), (7, 10)]:
        gens = validate(pair)
        gaps = gaps_bruteforce(gens)
        for t in range(pair[0] * pair[1] + 1):
            assert is_representable(t, gens) == (t not in gaps)
    assert representable_by(161, 29, 44)


def test_matrix_representation_wide_pair():
    gens = validate((23, 29))
    entries = matrix_representation(gens)
    positives = [e.value for e in entries if e.positive]
    assert len(positives) == 308
    assert entries[0].value == 615
    assert sylvester_pair(gens).genus == 308


@pytest.mark.slow
def test_matrix_representation_on_every_pair_below_limit():
    limit = 2500
    for d1 in range(3, math.isqrt(limit) + 1):
        for d2 in range(d1 + 1, limit // d1 + 1):
            if math.gcd(d1, d2) != 1:
                continue
            gens = validate((d1, d2), guard=limit)
            positives = [e.value for e in matrix_representation(gens) if e.positive]
            assert sorted(positives) == list(gaps_bruteforce(gens)), gens
