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

__all__ = ['CountableError',
           'CountableException',
           'InvalidArgumentError',
           'InvalidRationalError',
           'NoSuchGuestError',
           'NotInDomainError',
           'OutOfPrefixError',
           'ParseError',
           'SizeLimitError']


class CountableError(object):
    """
    Describes a single failure: a numeric code plus a human readable reason.

    Instances are carried as ``args[0]`` of every
    :py:class:`CountableException`.

    Args:
        code (int): One of the class constants below.

        reason (str, optional): Description of the failure. Defaults to the
            code's name.

    Attributes:
        NOT_IN_DOMAIN (int): Value lies outside a map's domain or codomain.

        INVALID_RATIONAL (int): Rational with a zero denominator.

        NO_SUCH_GUEST (int): Hotel guest that does not exist in the state.

        OUT_OF_PREFIX (int): Stream or list queried past the supplied data.

        SIZE_LIMIT (int): Finite set larger than the configured cap.

        INVALID_ARG (int): Precondition violated by an argument.

        PARSE (int): Malformed text input.

    """
    NOT_IN_DOMAIN = 1
    INVALID_RATIONAL = 2
    NO_SUCH_GUEST = 3
    OUT_OF_PREFIX = 4
    SIZE_LIMIT = 5
    INVALID_ARG = 6
    PARSE = 7

    _NAMES = {NOT_IN_DOMAIN: 'NOT_IN_DOMAIN',
              INVALID_RATIONAL: 'INVALID_RATIONAL',
              NO_SUCH_GUEST: 'NO_SUCH_GUEST',
              OUT_OF_PREFIX: 'OUT_OF_PREFIX',
              SIZE_LIMIT: 'SIZE_LIMIT',
              INVALID_ARG: 'INVALID_ARG',
              PARSE: 'PARSE'}

    __slots__ = ['_code', '_reason']

    def __init__(self, code, reason=None):
        if code not in self._NAMES:
            raise ValueError("Unknown error code {}".format(code))
        self._code = code
        self._reason = reason if reason is not None else self._NAMES[code]

    def code(self):
        return self._code

    def name(self):
        return self._NAMES[self._code]

    def str(self):
        return self._reason

    def __eq__(self, other):
        if isinstance(other, CountableError):
            return self._code == other._code
        return self._code == other

    def __hash__(self):
        return hash(self._code)

    def __repr__(self):
        return "CountableError{{code={},val={},str=\"{}\"}}".format(
            self.name(), self._code, self._reason)

    def __str__(self):
        return self._reason


class CountableException(Exception):
    """
    Base class of every error raised by this package.

    Args:
        error (CountableError): The wrapped error.

    """

    def __init__(self, error):
        super(CountableException, self).__init__(error)

    @property
    def code(self):
        return self.args[0].code()

    @property
    def name(self):
        return self.args[0].name()

    def __str__(self):
        return self.args[0].str()


class NotInDomainError(CountableException, ValueError):
    """
    A value does not belong to the domain (or codomain) of the map it was
    handed to, e.g. an odd number passed to ``from_even``.

    Args:
        reason (str): Description naming the offending value.

    """

    def __init__(self, reason):
        super(NotInDomainError, self).__init__(
            CountableError(CountableError.NOT_IN_DOMAIN, reason))


class InvalidRationalError(CountableException, ZeroDivisionError):
    """
    A rational was requested with a zero denominator.

    Args:
        reason (str): Description naming the offending pair.

    """

    def __init__(self, reason):
        super(InvalidRationalError, self).__init__(
            CountableError(CountableError.INVALID_RATIONAL, reason))


class NoSuchGuestError(CountableException, LookupError):
    """
    The hotel state has no such guest.

    Args:
        reason (str): Description naming the guest.

    """

    def __init__(self, reason):
        super(NoSuchGuestError, self).__init__(
            CountableError(CountableError.NO_SUCH_GUEST, reason))


class OutOfPrefixError(CountableException, IndexError):
    """
    A file backed stream or list was queried beyond the data it was given.

    Args:
        reason (str): Description naming the position.

    """

    def __init__(self, reason):
        super(OutOfPrefixError, self).__init__(
            CountableError(CountableError.OUT_OF_PREFIX, reason))


class SizeLimitError(CountableException, ValueError):
    """
    Raised when a finite set exceeds ``max.set.size``.

    Args:
        reason (str): Description naming the size and the cap.

    """

    def __init__(self, reason):
        super(SizeLimitError, self).__init__(
            CountableError(CountableError.SIZE_LIMIT, reason))


class InvalidArgumentError(CountableException, ValueError):
    """
    An argument violates an operation's precondition.

    Args:
        reason (str): Description of the violated precondition.

    """

    def __init__(self, reason):
        super(InvalidArgumentError, self).__init__(
            CountableError(CountableError.INVALID_ARG, reason))


class ParseError(CountableException, ValueError):
    """
    Wraps all errors encountered while reading a text input.

    Args:
        reason (str): What is wrong with the line.

        source (str, optional): File name or other origin of the text.

        lineno (int, optional): 1-based line number.

    """

    def __init__(self, reason, source=None, lineno=None):
        where = source if source is not None else '<input>'
        if lineno is not None:
            where = "{}:{}".format(where, lineno)
        super(ParseError, self).__init__(
            CountableError(CountableError.PARSE, "{}: {}".format(where, reason)))
        self.source = source
        self.lineno = lineno
