from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridfree.polynomial import Polynomial, format_polynomial, interpolate


def test_construction_normalises():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([]).degree == -1
    assert Polynomial([0]).degree == -1
    assert Polynomial([5]).degree == 0
    assert Polynomial([0, 0, Fraction(1, 2)]).leading == Fraction(1, 2)


def test_evaluation_and_arithmetic():
    p = Polynomial([1, -2, 1])  # (x-1)^2
    assert p(1) == 0
    assert p(4) == 9
    q = Polynomial([0, 1])
    assert (p + q).coeffs == (1, -1, 1)
    assert (p - p).degree == -1
    assert (q * q).coeffs == (0, 0, 1)
    assert (3 * q).coeffs == (0, 3)
    assert (-p).coeffs == (-1, 2, -1)


def test_shifted():
    p = Polynomial([0, 0, 1])  # x^2
    assert p.shifted(1).coeffs == (1, 2, 1)       # (x+1)^2
    assert p.shifted(-1).coeffs == (1, -2, 1)     # (x-1)^2
    for x in range(-3, 4):
        assert p.shifted(-1)(x) == p(x - 1)


def test_coefficient_accessor():
    p = Polynomial([Fraction(1, 3), 0, 2])
    assert p.coefficient(0) == Fraction(1, 3)
    assert p.coefficient(1) == 0
    assert p.coefficient(5) == 0


def test_interpolate_recovers_polynomials():
    p = interpolate([(0, 1), (1, 2), (2, 5)])  # x^2 + 1
    assert p.coeffs == (1, 0, 1)
    line = interpolate([(3, 6), (7, 14)])
    assert line.coeffs == (0, 2)
    const = interpolate([(10, 4)])
    assert const.coeffs == (4,)


def test_interpolate_exactness_with_rationals():
    p = interpolate([(1, Fraction(1, 2)), (2, Fraction(1, 3)), (3, Fraction(1, 5))])
    for x, y in [(1, Fraction(1, 2)), (2, Fraction(1, 3)), (3, Fraction(1, 5))]:
        assert p(x) == y


def test_interpolate_rejects_duplicate_nodes():
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        interpolate([])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_interpolation_roundtrip(coeffs):
    p = Polynomial(coeffs)
    nodes = range(len(coeffs))
    assert interpolate([(x, p(x)) for x in nodes]) == p


def test_format_polynomial():
    assert format_polynomial(Polynomial([])) == "0"
    assert format_polynomial(Polynomial([0, 3])) == "3n"
    assert format_polynomial(Polynomial([2, -4, 2])) == "2n^2 - 4n + 2"
    assert format_polynomial(Polynomial([3, Fraction(-13, 2), Fraction(9, 2)])) \
        == "(9n^2 - 13n + 6)/2"
    assert format_polynomial(Polynomial([-1, 0, 1])) == "n^2 - 1"
    assert format_polynomial(Polynomial([0, -1])) == "-n"
    assert format_polynomial(Polynomial([Fraction(1, 2)])) == "(1)/2"
    assert format_polynomial(Polynomial([0, 1]), var="x") == "x"
