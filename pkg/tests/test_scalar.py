from fractions import Fraction

import pytest
from hypothesis import given

from g2forge.scalar import SQRT2, Scalar
from conftest import scalars, small_fractions


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2.field_norm() == -2


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    if a != 0:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(small_fractions, small_fractions)
def test_norm_is_product_with_conjugate(p, q):
    x = Scalar(p, q)
    assert x * x.conjugate() == Scalar(p * p - 2 * q * q)


@given(small_fractions, small_fractions)
def test_rational_part_multiplies_like_fractions(p, q):
    assert Scalar(p) * Scalar(q) == Scalar(p * q)


@given(scalars)
def test_canonical_string_round_trips(x):
    s = str(x)
    assert " " not in s
    assert Scalar.parse(s) == x


@given(scalars)
def test_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-12:
        assert x.sign() == (1 if f > 0 else -1)
    assert (x > 0) == (x.sign() == 1)


def test_sign_is_exact_near_cancellation():
    # continued-fraction convergents alternate around sqrt2
    assert (SQRT2 - Fraction(41, 29)).sign() == 1
    assert (SQRT2 - Fraction(99, 70)).sign() == -1
    assert (SQRT2 - Fraction(8119, 5741)).sign() == 1
    assert (Fraction(19601, 13860) - SQRT2).sign() == 1


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3", Scalar(3)),
        ("-2/4", Scalar(Fraction(-1, 2))),
        ("1/2+3/4*sqrt2", Scalar(Fraction(1, 2), Fraction(3, 4))),
        ("-sqrt2/2", Scalar(0, Fraction(-1, 2))),
        ("sqrt(2)", Scalar(0, 1)),
        ("1 - 3*sqrt2", Scalar(1, -3)),
    ],
)
def test_parse_permissive(text, expected):
    assert Scalar.parse(text) == expected


@pytest.mark.parametrize("text", ["", "x", "1/0", "2sqrt3", "1++2"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Scalar.parse(text)


def test_canonical_forms():
    assert str(Scalar(0, 1)) == "sqrt2"
    assert str(Scalar(0, -1)) == "-sqrt2"
    assert str(Scalar(Fraction(1, 2), Fraction(-3, 4))) == "1/2-3/4*sqrt2"
    assert str(Scalar(Fraction(6, 4))) == "3/2"
    assert str(Scalar(0)) == "0"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)
