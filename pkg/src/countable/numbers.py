#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright 2026 The countable-sets Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""
Exact values shared by every other module.

Python's ``int`` is already arbitrary precision, so the number types below
are thin ``int`` subclasses that only enforce their range on construction.
Arithmetic on them yields plain ``int`` values; re-wrap a result when the
invariant matters.

.. list-table::
    :header-rows: 1

    * - Type
      - Range
      - Text form
    * - Natural
      - 1, 2, 3, ...
      - ``7``
    * - Whole
      - 0, 1, 2, ...
      - ``0``
    * - Integer
      - any
      - ``-4``
    * - Digit
      - 0 .. 9
      - ``5``
    * - Rational
      - reduced p/q, q >= 1
      - ``-1/4``, ``5/1``, ``0/1``

"""
import math
import operator
import re
from fractions import Fraction

from .error import InvalidArgumentError, InvalidRationalError, NotInDomainError

__all__ = ['Digit',
           'Integer',
           'Natural',
           'Rational',
           'Whole',
           'gcd',
           'is_reduced',
           'make_rational',
           'parse_fraction',
           'parse_integer',
           'parse_rational']

_INTEGER_RE = re.compile(r'^\s*([+-]?\d+)\s*$')
_FRACTION_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$')


def _as_int(value):
    try:
        return operator.index(value)
    except TypeError:
        raise TypeError("expected an integer, not " + str(type(value)))


class _BoundedInt(int):
    """
    int with a lower (and optional upper) bound checked on construction.
    """
    __slots__ = ()

    _min = None
    _max = None
    _what = 'number'

    def __new__(cls, value):
        value = _as_int(value)
        if (cls._min is not None and value < cls._min) or \
                (cls._max is not None and value > cls._max):
            raise NotInDomainError("{} is not {}".format(value, cls._what))
        return super(_BoundedInt, cls).__new__(cls, value)

    def __repr__(self):
        return "{}({})".format(type(self).__name__, int.__repr__(self))

    def __str__(self):
        return int.__repr__(self)


class Natural(_BoundedInt):
    """
    A member of N = {1, 2, 3, ...}.

    Raises:
        NotInDomainError: if value < 1.

    """
    __slots__ = ()
    _min = 1
    _what = 'a natural number'


class Whole(_BoundedInt):
    """
    A member of N0 = {0, 1, 2, ...}.

    Raises:
        NotInDomainError: if value < 0.

    """
    __slots__ = ()
    _min = 0
    _what = 'a whole number'


class Integer(_BoundedInt):
    """A member of Z."""
    __slots__ = ()
    _what = 'an integer'


class Digit(_BoundedInt):
    """
    A decimal digit.

    Raises:
        NotInDomainError: unless 0 <= value <= 9.

    """
    __slots__ = ()
    _min = 0
    _max = 9
    _what = 'a decimal digit'


def gcd(a, b):
    """
    Greatest common divisor of two non-negative integers.

    Args:
        a (int): non-negative integer

        b (int): non-negative integer

    Raises:
        InvalidArgumentError: if either argument is negative or both are 0.

    Returns:
        int: gcd(a, b)

    """
    a, b = _as_int(a), _as_int(b)
    if a < 0 or b < 0:
        raise InvalidArgumentError("gcd({}, {}): arguments must be non-negative".format(a, b))
    if a == 0 and b == 0:
        raise InvalidArgumentError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def is_reduced(p, q):
    """
    True if p/q is already the canonical representative: q >= 1 and
    gcd(|p|, q) = 1.
    """
    return q >= 1 and gcd(abs(p), q) == 1


class Rational(Fraction):
    """
    An exact rational number, always held in reduced form with a positive
    denominator.

    Rational extends :py:class:`fractions.Fraction`: construction normalizes,
    comparisons and hashing are Fraction's. Unlike Fraction, the text form
    always shows the denominator (``5/1``, ``0/1``) and negation keeps the
    type. Other arithmetic returns plain Fraction.

    Args:
        numerator (int): numerator

        denominator (int, optional): non-zero denominator. Defaults to 1.

    Raises:
        InvalidRationalError: if denominator is 0.

    """
    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        try:
            return super(Rational, cls).__new__(cls, numerator, denominator)
        except ZeroDivisionError:
            raise InvalidRationalError("{}/{} has a zero denominator".format(numerator, denominator))

    def __neg__(self):
        return Rational(-self.numerator, self.denominator)

    def __repr__(self):
        return "Rational({}, {})".format(self.numerator, self.denominator)

    def __str__(self):
        return "{}/{}".format(self.numerator, self.denominator)


def make_rational(p, q):
    """
    Build the unique reduced representative of p/q.

    Args:
        p (int): numerator

        q (int): denominator

    Raises:
        InvalidRationalError: if q is 0.

    Returns:
        Rational: p/q in lowest terms, sign on the numerator.

    """
    return Rational(_as_int(p), _as_int(q))


def parse_integer(text):
    """
    Parse an optional ``-`` followed by decimal digits.

    Raises:
        NotInDomainError: if text is not an integer literal.

    """
    m = _INTEGER_RE.match(text)
    if m is None:
        raise NotInDomainError("{!r} is not an integer".format(text))
    return Integer(int(m.group(1)))


def parse_fraction(text):
    """
    Parse ``p`` or ``p/q`` without reducing.

    Raises:
        NotInDomainError: if text is not a fraction literal.

        InvalidRationalError: if q is 0.

    Returns:
        tuple(int, int): the raw (p, q) pair with the sign moved to p.

    """
    m = _FRACTION_RE.match(text)
    if m is None:
        raise NotInDomainError("{!r} is not a rational".format(text))
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise InvalidRationalError("{} has a zero denominator".format(text.strip()))
    if q < 0:
        p, q = -p, -q
    return p, q


def parse_rational(text):
    """
    Parse ``p`` or ``p/q`` (unreduced input allowed) into a Rational.

    Example:
        ``parse_rational('-7/28')`` is ``Rational(-1, 4)``.

    """
    return make_rational(*parse_fraction(text))
