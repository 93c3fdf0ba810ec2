from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grossone.core import GROSSONE as G, NumberClass, ONE, ZERO
from grossone.errors import DegreeTooHigh, RatioOne
from grossone.extended import ExtendedValue, PowAtom, SymbolicPower, classify_extended, sub
from grossone.formatting import format_value
from grossone.series import (
    SeqDescriptor,
    concat,
    e_approximant,
    is_complete,
    sum_const,
    sum_geometric,
    sum_poly,
    validate_length,
)

F = Fraction


def test_validate_length():
    assert validate_length(G)
    assert not validate_length(G + 1)
    assert validate_length(2 * G / 5)
    assert validate_length(0)
    assert not validate_length(-1)
    assert not validate_length(G**-1)


def test_is_complete():
    assert is_complete(G)
    assert not is_complete(G / 2)
    assert not is_complete(5)
    with pytest.raises(ValueError):
        is_complete(G + 1)


def test_descriptor():
    assert SeqDescriptor(4 * G / 5, "5n").length == 4 * G / 5
    with pytest.raises(ValueError):
        SeqDescriptor(2 * G)


def test_concat():
    assert concat(2 * G / 5, 4 * G / 5) == (G, G / 5)
    assert concat(3, 4) == (7, 0)
    assert concat(G, 1) == (G, 1)


@given(st.fractions(0, 1, max_denominator=20), st.fractions(0, 1, max_denominator=20), st.integers(-5, 5))
def test_concat_conservation(x, y, c):
    l1 = G * x
    l2 = G * y + (c if y else abs(c))
    if not (validate_length(l1) and validate_length(l2)):
        return
    first, leftover = concat(l1, l2)
    assert first + leftover == l1 + l2
    assert first <= G


def test_sum_const():
    s1, s2 = sum_const(10, 5 * G), sum_const(3, 5 * G)
    assert (s1, s2) == (50 * G, 15 * G)
    assert s2 / s1 == F(3, 10)
    assert sum_const(10, 3 * G + 4) - sum_const(3, 10 * G) == 40
    assert sum_const(7, 0) == ZERO
    with pytest.raises(ValueError):
        sum_const(1, G / 2 + F(1, 2))


@given(st.fractions(-10, 10, max_denominator=7), st.fractions(-10, 10, max_denominator=7))
def test_sum_const_linear(a, b):
    k = 3 * G + 2
    assert sum_const(a + b, k) == sum_const(a, k) + sum_const(b, k)


def test_sum_poly():
    assert sum_poly([0, 1], G) == G**2 / 2 + G / 2
    assert sum_poly([1], G) == G
    assert sum_poly([0, 1], 10) == 55
    with pytest.raises(DegreeTooHigh):
        sum_poly([0, 0, 0, 0, 1], G)
    assert sum_poly([0, 0, 0, 0, 0], G) == 0


@given(st.lists(st.fractions(-9, 9, max_denominator=5), max_size=4), st.integers(0, 200))
def test_sum_poly_brute_force(coeffs, k):
    brute = sum(sum(c * i**d for d, c in enumerate(coeffs)) for i in range(1, k + 1))
    assert sum_poly(coeffs, k) == brute


def test_sum_geometric():
    v = sum_geometric(F(1, 2), G)
    assert isinstance(v, ExtendedValue)
    assert v == sub(ONE, PowAtom(F(2), -G).as_value())
    assert format_value(v) == "1 - 2^(-G)"
    assert sum_geometric(F(1, 2), 10) == F(1023, 1024)
    assert sum_geometric(F(1, 2), 0) == 0
    with pytest.raises(RatioOne):
        sum_geometric(1, G)


def test_geometric_residual_is_infinitesimal():
    residual = sub(sum_geometric(F(1, 2), G), ONE)
    assert classify_extended(residual) is NumberClass.INFINITESIMAL
    assert classify_extended(sum_geometric(F(1, 2), G)) is NumberClass.FINITE_MIXED


@given(st.fractions(-3, 3, max_denominator=9).filter(lambda r: r not in (0, 1)), st.integers(0, 30))
def test_geometric_telescopes(r, k):
    s = sum_geometric(r, k)
    assert (1 - r) * s.as_fraction() == r - r ** (k + 1)


@given(st.fractions(F(1, 10), F(9, 10), max_denominator=10), st.integers(1, 5))
def test_geometric_infinite_pure_part(r, c):
    v = sum_geometric(r, c * G)
    assert v.pure_part() == r / (1 - r)


def test_e_approximant():
    assert e_approximant(1) == 2
    assert e_approximant(3) == F(64, 27)
    e0 = e_approximant(G)
    assert isinstance(e0, SymbolicPower)
    assert format_value(e0) == "(1G^0 1G^-1)^G"
    assert format_value(e_approximant(G**2)) == "(1G^0 1G^-2)^(G^2)"
