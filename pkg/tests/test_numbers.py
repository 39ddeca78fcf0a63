#!/usr/bin/env python
# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from countable.error import InvalidArgumentError, InvalidRationalError, NotInDomainError
from countable.numbers import Digit, Integer, Natural, Rational, Whole, \
    gcd, is_reduced, make_rational, parse_fraction, parse_integer, parse_rational


def test_bounded_types():
    assert Natural(1) == 1
    assert Whole(0) == 0
    assert Integer(-4) == -4
    assert Digit(9) == 9

    assert repr(Natural(5)) == "Natural(5)"
    assert str(Integer(-4)) == "-4"


@pytest.mark.parametrize("cls,value,msg", [
    (Natural, 0, "0 is not a natural number"),
    (Whole, -1, "-1 is not a whole number"),
    (Digit, 10, "10 is not a decimal digit"),
    (Digit, -1, "-1 is not a decimal digit"),
])
def test_bounded_type_range(cls, value, msg):
    with pytest.raises(NotInDomainError, match=msg):
        cls(value)


def test_bounded_type_rejects_non_integers():
    with pytest.raises(TypeError, match="expected an integer"):
        Natural(1.5)
    with pytest.raises(TypeError, match="expected an integer"):
        Natural("3")


@pytest.mark.parametrize("a,b,expected", [
    (12, 8, 4),
    (7, 1, 1),
    (28, 7, 7),
    (0, 5, 5),
])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_undefined():
    with pytest.raises(InvalidArgumentError, match=r"gcd\(0, 0\) is undefined"):
        gcd(0, 0)
    with pytest.raises(InvalidArgumentError, match="non-negative"):
        gcd(-2, 4)


def test_gcd_brute_force():
    for a in range(1, 30):
        for b in range(1, 30):
            expected = max(d for d in range(1, min(a, b) + 1) if a % d == 0 and b % d == 0)
            assert gcd(a, b) == expected


@pytest.mark.parametrize("p,q,text", [
    (-7, 28, "-1/4"),
    (5, 1, "5/1"),
    (0, 9, "0/1"),
    (3, -6, "-1/2"),
])
def test_make_rational(p, q, text):
    r = make_rational(p, q)

    assert str(r) == text
    assert r.denominator >= 1
    assert isinstance(r, Rational)


def test_make_rational_zero_denominator():
    with pytest.raises(InvalidRationalError, match="zero denominator"):
        make_rational(1, 0)
    with pytest.raises(ZeroDivisionError):
        make_rational(0, 0)


def test_make_rational_canonical():
    for p in range(-12, 13):
        for q in range(1, 13):
            r = make_rational(p, q)
            for k in (-3, -1, 2, 7):
                assert make_rational(k * p, k * q) == r
            # idempotent on the reduced pair
            assert make_rational(r.numerator, r.denominator) == r
            assert is_reduced(r.numerator, r.denominator)


def test_rational_behaves_like_fraction():
    r = Rational(2, 4)

    assert r == Fraction(1, 2)
    assert hash(r) == hash(Fraction(1, 2))
    assert repr(r) == "Rational(1, 2)"
    assert isinstance(-r, Rational)
    assert str(-r) == "-1/2"


def test_is_reduced():
    assert is_reduced(2, 3)
    assert not is_reduced(2, 4)
    assert not is_reduced(1, 0)
    assert is_reduced(-1, 4)


def test_parse_integer():
    assert parse_integer("-4") == -4
    assert parse_integer(" 17 ") == 17
    assert parse_integer("+3") == 3

    for bad in ("", "1.5", "x", "1/2"):
        with pytest.raises(NotInDomainError, match="is not an integer"):
            parse_integer(bad)


def test_parse_fraction_keeps_raw_pair():
    assert parse_fraction("2/4") == (2, 4)
    assert parse_fraction("3/-6") == (-3, 6)
    assert parse_fraction("5") == (5, 1)

    with pytest.raises(InvalidRationalError):
        parse_fraction("1/0")
    with pytest.raises(NotInDomainError, match="is not a rational"):
        parse_fraction("one half")


def test_parse_rational_normalizes():
    assert parse_rational("-7/28") == Rational(-1, 4)
    assert str(parse_rational("10/2")) == "5/1"

    for text in ("-1/4", "5/1", "0/1", "22/7"):
        assert str(parse_rational(text)) == text
