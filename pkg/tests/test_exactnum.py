from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from adjquot.exactnum import (
    ONE, ZERO, I, GaussianRational, ParseError, ZeroDivisionErrorGR, as_gr, format_gaussian,
    format_rational, parse_complex, parse_gaussian, parse_rational, rational_circle,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_norm_product():
    assert GaussianRational(1, 1) * GaussianRational(1, -1) == 2


def test_conjugate_sum():
    a = GaussianRational(Fraction(1, 2), Fraction(1, 3))
    assert a + a.conj() == ONE


def test_inverse_of_one_plus_i():
    q = ONE / GaussianRational(1, 1)
    assert q == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert q * GaussianRational(1, 1) == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionErrorGR):
        ONE / ZERO


@pytest.mark.parametrize("s,expected", [(0, (1, 0)), (1, (0, 1)), (Fraction(1, 2), (Fraction(3, 5), Fraction(4, 5)))])
def test_rational_circle(s, expected):
    assert rational_circle(s) == expected


def test_i_squared():
    assert I * I == -ONE


@pytest.mark.parametrize("text,value", [
    ("3", GaussianRational(3)),
    ("-2/3", GaussianRational(Fraction(-2, 3))),
    ("1/2+1/3*i", GaussianRational(Fraction(1, 2), Fraction(1, 3))),
    ("-i", GaussianRational(0, -1)),
    ("2-5*i", GaussianRational(2, -5)),
])
def test_parse_gaussian(text, value):
    assert parse_gaussian(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "1+", "abc", "1/2/3", "3*j"])
def test_parse_rejects_with_position(bad):
    with pytest.raises(ParseError) as info:
        parse_gaussian(bad)
    assert 0 <= info.value.position <= len(bad)


def test_parse_rational_and_complex():
    assert parse_rational("-7/21") == Fraction(-1, 3)
    assert parse_complex("1.5-2.0*i") == complex(1.5, -2.0)
    assert format_rational(Fraction(6, 4)) == "3/2"


@given(gaussians)
def test_format_parse_round_trip(q):
    assert parse_gaussian(format_gaussian(q)) == q


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_norm_is_z_times_conj(a):
    assert as_gr(a.norm()) == a * a.conj()


@given(rationals)
def test_rational_circle_is_unimodular(s):
    c, sn = rational_circle(s)
    assert c * c + sn * sn == 1
