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
The second diagonal construction: for any list of reals in [0, 1), given
as digit streams, build a stream that differs from the n-th listed real in
its n-th decimal place.

Reals are represented by the digits after the decimal point; position 1 is
the first place after the point.
"""
import logging
from fractions import Fraction

from ..enumerations import rationals_positive
from ..error import InvalidArgumentError, NotInDomainError, OutOfPrefixError
from ..numbers import Digit, Natural

log = logging.getLogger(__name__)

_DIGITS = frozenset("0123456789")

__all__ = ['DigitStream',
           'RealList',
           'anti_diagonal',
           'constant_stream',
           'find_coincidence',
           'prefix_stream',
           'rational_stream',
           'rationals_real_list',
           'render_prefix',
           'safe_anti_diagonal',
           'verify_escape']


class DigitStream(object):
    """
    A real in [0, 1) as a total map from position to decimal digit.

    Args:
        digit_at (callable(Natural) -> int): digit at a 1-based position

        source (str): description used in diagnostics

    """
    __slots__ = ['_digit_at', 'source']

    def __init__(self, digit_at, source):
        self._digit_at = digit_at
        self.source = source

    def digit_at(self, n):
        """
        The n-th decimal place.

        Raises:
            NotInDomainError: if n < 1 or the underlying map yields a
                non-digit.

            OutOfPrefixError: if the stream only knows a shorter prefix.

        """
        return Digit(self._digit_at(Natural(n)))

    def prefix(self, depth):
        """The first depth digits as a string."""
        return "".join(str(self.digit_at(n)) for n in range(1, depth + 1))

    def __repr__(self):
        return "DigitStream({})".format(self.source)


class RealList(object):
    """
    A claimed listing of reals: index n is paired with a digit stream.

    Args:
        stream_at (callable(Natural) -> DigitStream): the listing

        label (str): description used in diagnostics

        length (int, optional): number of listed reals if the list is
            finite, else None

    """
    __slots__ = ['_stream_at', 'label', 'length']

    def __init__(self, stream_at, label, length=None):
        self._stream_at = stream_at
        self.label = label
        self.length = length

    @classmethod
    def from_streams(cls, streams, label='list'):
        """
        A finite listing; indices past the end raise OutOfPrefixError.
        """
        streams = tuple(streams)

        def stream_at(n):
            if n > len(streams):
                raise OutOfPrefixError("{} lists {} reals, none at index {}"
                                       .format(label, len(streams), n))
            return streams[n - 1]

        return cls(stream_at, label, len(streams))

    @classmethod
    def from_enumeration(cls, e, to_stream, label=None):
        """List to_stream(e.at(n)) at index n."""
        return cls(lambda n: to_stream(e.at(n)), label if label is not None else e.label)

    def stream_at(self, n):
        return self._stream_at(Natural(n))

    def __repr__(self):
        return "RealList({})".format(self.label)


def constant_stream(d):
    """0.ddd..."""
    d = Digit(d)
    return DigitStream(lambda n: d, "0.{}...".format(d))


def prefix_stream(digits, source=None):
    """
    A stream that knows only the given digits.

    Raises:
        NotInDomainError: if digits contains a non-digit.

    """
    if any(c not in _DIGITS for c in digits):
        raise NotInDomainError("{!r} is not a string of decimal digits".format(digits))
    values = tuple(int(c) for c in digits)

    def digit_at(n):
        if n > len(values):
            raise OutOfPrefixError("{} has {} digits, none at position {}"
                                   .format(source or "0." + digits, len(values), n))
        return values[n - 1]

    return DigitStream(digit_at, source if source is not None else "0." + digits)


def rational_stream(q):
    """
    The decimal expansion of a rational in [0, 1), computed exactly by
    long division. Terminating expansions continue with zeros.

    Raises:
        NotInDomainError: if q is outside [0, 1).

    """
    q = Fraction(q)
    if not 0 <= q < 1:
        raise NotInDomainError("{} is not in [0, 1)".format(q))
    p, d = q.numerator, q.denominator
    return DigitStream(lambda n: p * 10 ** n // d % 10, "{}/{}".format(p, d))


def anti_diagonal(real_list):
    """
    The stream whose n-th digit is the n-th digit of the n-th listed real
    plus 1, with 9 turning into 0.

    Position n only ever queries stream n at position n.
    """
    return DigitStream(lambda n: (real_list.stream_at(n).digit_at(n) + 1) % 10,
                       "anti-diagonal of {}".format(real_list.label))


def safe_anti_diagonal(real_list):
    """
    Like :py:func:`anti_diagonal`, but emitting 5 unless the diagonal digit
    is 5, in which case 4.

    The result contains no 0 and no 9, so its decimal representation is
    unique and a differing digit means a differing number.
    """
    return DigitStream(lambda n: 4 if real_list.stream_at(n).digit_at(n) == 5 else 5,
                       "safe anti-diagonal of {}".format(real_list.label))


def _check_depth(depth):
    try:
        return Natural(depth)
    except NotInDomainError:
        raise InvalidArgumentError("depth must be at least 1, not {}".format(depth))


def find_coincidence(real_list, candidate, depth):
    """
    The first position n <= depth where candidate agrees with the n-th
    listed real at its n-th place, or None.
    """
    for n in range(1, _check_depth(depth) + 1):
        if candidate.digit_at(n) == real_list.stream_at(n).digit_at(n):
            log.debug("%s coincides with %s at position %d",
                      candidate.source, real_list.label, n)
            return n
    return None


def verify_escape(real_list, candidate, depth):
    """
    True if candidate differs from the n-th listed real in the n-th place
    for every n <= depth.

    Raises:
        InvalidArgumentError: if depth < 1.

    """
    return find_coincidence(real_list, candidate, depth) is None


def render_prefix(stream, depth):
    """``0.`` followed by the first depth digits, e.g. ``0.4581``."""
    return "0." + stream.prefix(depth)


def rationals_real_list():
    """
    The fractional parts of the positive rationals in enumeration order.
    Every rational in [0, 1) is listed, so the anti-diagonal of this list
    escapes all of them.
    """
    def fractional(q):
        return rational_stream(Fraction(q.numerator % q.denominator, q.denominator))

    return RealList.from_enumeration(rationals_positive(), fractional, label='fractional parts of Q+')
