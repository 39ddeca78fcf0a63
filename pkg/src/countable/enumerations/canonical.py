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
import numbers

from ..bijections import GridPosition, from_even, from_odd, to_even, to_odd
from ..error import NotInDomainError
from ..finite_compare import PairingWitness
from ..numbers import Integer, Natural, Rational, Whole, is_reduced
from .enumeration import (Enumeration,
                          filter_reindex,
                          interleave,
                          prepend_finite,
                          product,
                          relabel)


def naturals():
    """N in its natural order; the identity enumeration."""
    return Enumeration('N', Natural, Natural)


def evens():
    """E = {2, 4, 6, ...}: at(n) = 2n."""
    return Enumeration('E', to_even, from_even)


def odds():
    """The odd numbers: at(n) = 2n - 1."""
    return Enumeration('odd', to_odd, from_odd)


def wholes():
    """N0 = {0, 1, 2, ...}: zero in front of N."""
    return prepend_finite([Whole(0)], naturals(), label='N0')


def _negatives():
    return relabel(naturals(),
                   lambda n: Integer(-n),
                   lambda z: -Integer(z),
                   label='negative integers')


def integers():
    """Z listed as 0, 1, -1, 2, -2, ..."""
    return prepend_finite([Integer(0)],
                          interleave(naturals(), _negatives()),
                          label='Z')


def grid():
    """The cells of N x N in serpentine order."""
    return relabel(product(naturals(), naturals()),
                   lambda pair: GridPosition(*pair),
                   lambda cell: GridPosition(*cell),
                   label='grid')


def _fraction_cell(x):
    # A Rational is looked up at its reduced cell; a raw (p, q) pair at its
    # own cell, which the reduced filter then rejects if it was skipped.
    if isinstance(x, numbers.Rational):
        if x <= 0:
            raise NotInDomainError("{} is not a positive rational".format(Rational(x)))
        return GridPosition(x.numerator, x.denominator)
    if isinstance(x, tuple) and len(x) == 2:
        p, q = x
        if p < 1 or q < 1:
            raise NotInDomainError("{}/{} is not a positive fraction".format(p, q))
        return GridPosition(p, q)
    raise NotInDomainError("{!r} is not a rational".format(x))


def _is_reduced_cell(cell):
    return is_reduced(cell.row, cell.col)


def rationals_positive():
    """
    Q+ by the serpentine walk of the fraction grid, skipping every cell
    whose fraction is not reduced (it already appeared earlier).

    ``index_of`` accepts a positive rational, or a raw ``(p, q)`` pair;
    an unreduced pair such as ``(2, 4)`` names a skipped cell and is not
    in the domain.
    """
    reduced = filter_reindex(grid(), _is_reduced_cell, label='reduced grid cells')
    return relabel(reduced,
                   lambda cell: cell.fraction,
                   _fraction_cell,
                   label='Q+')


def _negate(x):
    if isinstance(x, tuple) and len(x) == 2:
        return -x[0], x[1]
    if isinstance(x, numbers.Rational):
        return -Rational(x)
    raise NotInDomainError("{!r} is not a rational".format(x))


def _zero_pair(x):
    # (0, 1) is the reduced pair for zero; other pairs go on to Q+ and Q-
    if isinstance(x, tuple) and len(x) == 2 and x[0] == 0:
        if not is_reduced(*x):
            raise NotInDomainError("0/{} is not a reduced fraction".format(x[1]))
        return Rational(0)
    return x


def rationals_all():
    """
    Q listed as 0, then Q+ and its negatives alternately:
    0/1, 1/1, -1/1, 1/2, -1/2, 2/1, -2/1, ...

    This is one valid order; any interleaving of Q+ with its mirror would do.
    """
    positive = rationals_positive()
    negative = relabel(positive, _negate, _negate, label='Q-')
    q = prepend_finite([Rational(0)], interleave(positive, negative), label='Q')
    return relabel(q, lambda x: x, _zero_pair)


def prefix_witness(e, k):
    """
    The first k index/value pairs of e as a pairing of {1..k} with the
    values, rendered as text labels. A faithful enumeration yields a
    witness without remainder.

    Returns:
        PairingWitness

    """
    return PairingWitness([(str(n), str(e.at(n))) for n in range(1, k + 1)])


ENUMERATIONS = {'n': naturals,
                'e': evens,
                'odd': odds,
                'n0': wholes,
                'z': integers,
                'grid': grid,
                'q+': rationals_positive,
                'q': rationals_all}
