from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gf2fourier.dyadic import Dyadic, dyadic_add, dyadic_mul, granularity_of, parse_dyadic
from gf2fourier.errors import DomainError

dyadics = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(-5, 40))
nonzero = dyadics.filter(bool)


def test_add_examples():
    assert dyadic_add(Dyadic(1, 1), Dyadic(1, 1)) == Dyadic(1, 0)
    assert dyadic_add(Dyadic(1, 2), Dyadic(1, 3)) == Dyadic(3, 3)
    a = Dyadic(35, 3)
    assert a + Dyadic() == a


def test_mul_examples():
    assert dyadic_mul(Dyadic(3, 3), Dyadic(-1, 1)) == Dyadic(-3, 4)
    a = Dyadic(-7, 5)
    assert a * Dyadic(1) == a
    assert (a * Dyadic(0)).is_zero()


def test_granularity_examples():
    assert granularity_of(Dyadic(1, 1)) == 1
    assert granularity_of(Dyadic(35, 3)) == 3
    assert granularity_of(Dyadic(0, 7)) is None


def test_normal_form():
    two = Dyadic(2, 0)
    assert (two.numerator, two.exponent) == (1, -1)
    assert Dyadic(12, 5) == Dyadic(3, 3)
    z = Dyadic(0, 9)
    assert (z.numerator, z.exponent) == (0, 0)


def test_immutable():
    with pytest.raises(AttributeError):
        Dyadic(1, 1).numerator = 3


@pytest.mark.parametrize("text,value", [("0", Dyadic()), ("1/2", Dyadic(1, 1)), ("-3/8", Dyadic(-3, 3)), ("2", Dyadic(1, -1))])
def test_serialization(text, value):
    assert str(value) == text
    assert parse_dyadic(text) == value


def test_parse_rejects_non_dyadic():
    with pytest.raises(DomainError):
        parse_dyadic("1/3")


@given(nonzero, nonzero)
def test_granularity_of_sum_bounded(x, y):
    s = x + y
    if s:
        assert granularity_of(s) <= max(granularity_of(x), granularity_of(y))


@given(nonzero)
def test_granularity_of_negation(x):
    assert granularity_of(-x) == granularity_of(x)


@given(dyadics, dyadics)
def test_equality_matches_rationals(x, y):
    assert (x == y) == (x.as_fraction() == y.as_fraction())
    assert (x == y) == ((x.numerator, x.exponent) == (y.numerator, y.exponent))
    assert (x + y).as_fraction() == x.as_fraction() + y.as_fraction()
    assert (x * y).as_fraction() == x.as_fraction() * y.as_fraction()
    assert (x < y) == (x.as_fraction() < y.as_fraction())


@given(dyadics)
def test_string_round_trip(x):
    assert parse_dyadic(str(x)) == x
    assert Fraction(str(x)) == x.as_fraction()
