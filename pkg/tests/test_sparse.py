import cmath
import math

import numpy as np
import pytest

from triple_semigroup.core.errors import (
    HorizonTooSmallError,
    InvalidContourError,
    NotCharacteristicError,
    SeriesError,
)
from triple_semigroup.series.sparse import (
    SparseSeries,
    circ,
    expand_rational,
    hadamard,
    hadamard_multi,
    hadamard_numeric,
    intersect_sets_series,
    meet,
    multisection,
    multisection_average,
    pair_hilbert,
    tau,
    tau_inverse,
)


def test_terms_are_merged_and_cleaned():
    s = SparseSeries(((3, 1), (0, 2), (3, -1), (12, 5)), horizon=10)
    assert s.terms == ((0, 2),)
    assert s.horizon == 10


def test_meet():
    assert meet(None, 5, 3) == 3
    assert meet(None, None) is None


def test_coefficient_beyond_horizon():
    s = SparseSeries.geometric(2, 8)
    assert s.coefficient(4) == 1
    assert s.coefficient(5) == 0
    with pytest.raises(HorizonTooSmallError):
        s.coefficient(9)


def test_algebra():
    one_minus_z = SparseSeries(((0, 1), (1, -1)))
    geo = SparseSeries.geometric(1, 10)
    assert (one_minus_z * geo).terms == ((0, 1),)
    assert (geo - geo).is_zero
    assert (geo + geo).coefficient(3) == 2
    assert (-one_minus_z).terms == ((0, -1), (1, 1))
    assert geo.truncate(4).horizon == 4
    assert geo.substitute_power(3).exponents == tuple(range(0, 31, 3))
    assert geo.substitute_power(3).horizon == 30


def test_str():
    assert str(SparseSeries(((0, 1), (10, -1), (22, 1)))) == "1 - z^10 + z^22"
    assert str(SparseSeries.zero()) == "0"
    assert str(SparseSeries(((1, 2),), horizon=3)) == "2*z + O(z^4)"


def test_degree_and_at_one():
    q = SparseSeries(((0, 1), (8, -1), (9, -1), (10, -1), (13, 1), (14, 1)))
    assert q.lowest_exponent == 0
    assert q.degree == 14
    assert q.at_one() == 0


def test_evaluate_matches_polynomial():
    s = SparseSeries(((0, 1), (2, 3)))
    assert s(0.5) == pytest.approx(1.75)
    values = s.evaluate(np.array([0.0, 1.0, 2.0]))
    assert values.tolist() == pytest.approx([1.0, 4.0, 13.0])


def test_array_round_trip():
    s = SparseSeries(((1, 2), (4, -1)), horizon=6)
    arr = s.to_array()
    assert arr.tolist() == [0, 2, 0, 0, -1, 0, 0]
    assert SparseSeries.from_array(arr, 6) == s


def test_negative_exponent_rejected():
    with pytest.raises(SeriesError):
        SparseSeries(((-1, 1),))


def test_tau_and_inverse():
    s = tau_inverse({1, 4, 7}, 10)
    assert s.horizon == 10
    assert tau(s) == frozenset({1, 4, 7})
    with pytest.raises(HorizonTooSmallError):
        tau_inverse({11}, 10)
    with pytest.raises(NotCharacteristicError):
        tau(SparseSeries(((2, 2),)))


def test_hadamard_of_multiples():
    twos = SparseSeries.geometric(2, 30)
    threes = SparseSeries.geometric(3, 24)
    product = hadamard(twos, threes)
    assert product.horizon == 24
    assert product.exponents == (0, 6, 12, 18, 24)
    assert intersect_sets_series(twos, threes) == product
    assert hadamard_multi([twos, threes, SparseSeries.geometric(4, 30)]).exponents == (0, 12, 24)


def test_hadamard_scales_coefficients():
    u = SparseSeries(((0, 2), (1, 3), (4, -1)))
    v = SparseSeries(((1, 5), (4, 2), (6, 7)))
    assert hadamard(u, v).terms == ((1, 15), (4, -2))


def test_circ_doubles_exponents():
    u = SparseSeries(((1, 2), (3, 1)), horizon=5)
    v = SparseSeries(((1, 4), (3, 3)), horizon=7)
    out = circ(u, v)
    assert out.terms == ((2, 8), (6, 3))
    assert out.horizon == 10


def test_multisection_filters_exponents():
    u = SparseSeries.geometric(1, 20)
    assert multisection(u, 5).exponents == (0, 5, 10, 15, 20)
    assert multisection(u, 5) == hadamard(u, SparseSeries.geometric(5, 20))


def test_multisection_average_matches_filter():
    u = SparseSeries(((0, 1), (2, -3), (3, 2), (6, 5), (7, 1)))
    z = 0.4 + 0.3j
    assert multisection_average(u, 3, z) == pytest.approx(complex(multisection(u, 3)(z)), abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_roots_of_unity_average_of_geometric(n):
    z = 0.35 - 0.2j

    def geometric(w):
        return 1 / (1 - w)

    assert multisection_average(geometric, n, z) == pytest.approx(1 / (1 - z**n), abs=1e-9)


def test_hadamard_numeric_with_scaled_geometric():
    u = SparseSeries(((0, 1), (1, 2), (3, 3)))
    c = 2.0

    def v(w):
        return 1 / (c - w)

    z = 0.3 + 0.1j
    got = hadamard_numeric(u, v, z, radius=0.9, points=256)
    assert got == pytest.approx(complex(u(z / c)) / c, abs=1e-9)


def test_hadamard_numeric_product_rule():
    a, b = 2.0, 3.0
    z = 0.5

    def u(w):
        return 1 / (a - w)

    def v(w):
        return 1 / (b - w)

    got = hadamard_numeric(u, v, z, radius=0.9, points=1024)
    assert got == pytest.approx(1 / (a * b - z), abs=1e-9)


def test_hadamard_numeric_matches_exact_product():
    u = pair_hilbert(3, 5, 40)
    v = SparseSeries.geometric(4, 40)
    z = 0.5 * cmath.exp(0.7j)
    exact = complex(hadamard(u, v)(z))
    got = hadamard_numeric(u, v, z, radius=0.9, points=512)
    assert got == pytest.approx(exact, abs=1e-9)


@pytest.mark.parametrize(
    "z, radius",
    [(0.95, 0.9), (0.1, 1.0), (0.1, 1.2)],
)
def test_hadamard_numeric_contour_checks(z, radius):
    with pytest.raises(InvalidContourError):
        hadamard_numeric(SparseSeries.constant(1), SparseSeries.constant(1), z, radius, 64)


def test_pair_hilbert_coprime():
    h = pair_hilbert(3, 5, 20)
    assert h.exponents == (0, 3, 5, 6) + tuple(range(8, 21))
    assert all(c == 1 for _, c in h.terms)


def test_pair_hilbert_shared_factor():
    h = pair_hilbert(4, 6, 30)
    assert h.exponents == (0,) + tuple(range(4, 31, 2))
    assert all(c == 1 for _, c in h.terms)


def test_expand_rational_checks_horizon():
    q = SparseSeries(((0, 1), (15, -1)), horizon=10)
    with pytest.raises(HorizonTooSmallError):
        expand_rational(q, (3, 5), 12)
    with pytest.raises(HorizonTooSmallError):
        expand_rational(SparseSeries.constant(1), (3,), -1)


def test_hadamard_of_geometric_series_is_lcm_series():
    for a in range(1, 31):
        for b in range(a, 31):
            horizon = 2 * math.lcm(a, b)
            got = hadamard(SparseSeries.geometric(a, horizon), SparseSeries.geometric(b, horizon))
            assert got == SparseSeries.geometric(math.lcm(a, b), horizon), (a, b)
