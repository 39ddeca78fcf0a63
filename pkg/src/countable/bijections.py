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
Pairing rules between N and other countable sets, as total invertible
functions.

.. list-table::
    :header-rows: 1

    * - Forward
      - Inverse
      - Rule
    * - to_even
      - from_even
      - n -> 2n
    * - to_whole
      - from_whole
      - n -> n - 1
    * - to_integer
      - from_integer
      - 1, 2, 3, 4, 5, ... -> 0, 1, -1, 2, -2, ...
    * - to_odd
      - from_odd
      - n -> 2n - 1
    * - unpair
      - pair_index
      - serpentine walk of the N x N grid

"""
import math
from collections import namedtuple

from .error import NotInDomainError
from .numbers import Integer, Natural, Rational, Whole

__all__ = ['GridPosition',
           'diagonal_of',
           'from_even',
           'from_integer',
           'from_odd',
           'from_whole',
           'pair_index',
           'to_even',
           'to_integer',
           'to_odd',
           'to_whole',
           'unpair']


class GridPosition(namedtuple('GridPosition', ['row', 'col'])):
    """
    A cell of the infinite fraction grid. The cell (row, col) holds the
    fraction row/col.

    Args:
        row (int): 1-based row

        col (int): 1-based column

    Raises:
        NotInDomainError: if row or col is less than 1.

    """
    __slots__ = ()

    def __new__(cls, row, col):
        return super(GridPosition, cls).__new__(cls, Natural(row), Natural(col))

    @property
    def diagonal(self):
        return self.row + self.col - 1

    @property
    def fraction(self):
        """Rational: row/col, reduced."""
        return Rational(self.row, self.col)

    def __str__(self):
        return "({},{})".format(self.row, self.col)


def to_even(n):
    """Partner of n in E: its double."""
    return Natural(2 * Natural(n))


def from_even(e):
    """
    Partner of the even number e in N: its half.

    Raises:
        NotInDomainError: if e is odd.

    """
    e = Natural(e)
    if e % 2:
        raise NotInDomainError("{} is not even".format(e))
    return Natural(e // 2)


def to_whole(n):
    """Partner of n in N0: n - 1."""
    return Whole(Natural(n) - 1)


def from_whole(w):
    """Partner of w in N: w + 1."""
    return Natural(Whole(w) + 1)


def to_integer(n):
    """
    Partner of n in Z. Even n maps to n/2, odd n to -(n-1)/2, which lists Z
    as 0, 1, -1, 2, -2, ...
    """
    n = Natural(n)
    if n % 2 == 0:
        return Integer(n // 2)
    return Integer(-((n - 1) // 2))


def from_integer(z):
    """
    Partner of z in N: positive z doubles, negative z doubles its absolute
    value and adds 1, zero goes to 1.
    """
    z = Integer(z)
    if z > 0:
        return Natural(2 * z)
    return Natural(-2 * z + 1)


def to_odd(n):
    """Partner of n among the odd numbers: 2n - 1."""
    return Natural(2 * Natural(n) - 1)


def from_odd(m):
    """
    Raises:
        NotInDomainError: if m is even.
    """
    m = Natural(m)
    if m % 2 == 0:
        raise NotInDomainError("{} is not odd".format(m))
    return Natural((m + 1) // 2)


def _triangle(d):
    return d * (d - 1) // 2


def diagonal_of(n):
    """
    The diagonal d holding visit number n: d(d-1)/2 < n <= d(d+1)/2.
    """
    k = Natural(n) - 1
    return Natural((math.isqrt(8 * k + 1) - 1) // 2 + 1)


def pair_index(p):
    """
    1-based visit order of grid cell p under the serpentine walk.

    Diagonal d = row + col - 1 is walked after every shorter diagonal.
    Even diagonals run from (1, d) down to (d, 1), odd ones from (d, 1) up
    to (1, d).

    Args:
        p (GridPosition or tuple): the cell

    Returns:
        Natural: visit number

    """
    p = GridPosition(*p)
    d = p.diagonal
    offset = p.row if d % 2 == 0 else p.col
    return Natural(_triangle(d) + offset)


def unpair(n):
    """
    Inverse of :py:func:`pair_index`.

    Returns:
        GridPosition: the n-th visited cell

    """
    n = Natural(n)
    d = diagonal_of(n)
    offset = n - _triangle(d)
    if d % 2 == 0:
        return GridPosition(offset, d + 1 - offset)
    return GridPosition(d + 1 - offset, offset)
