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

from .error import (CountableError,
                    CountableException,
                    InvalidArgumentError,
                    InvalidRationalError,
                    NoSuchGuestError,
                    NotInDomainError,
                    OutOfPrefixError,
                    ParseError,
                    SizeLimitError)
from .numbers import (Digit,
                      Integer,
                      Natural,
                      Rational,
                      Whole,
                      gcd,
                      make_rational)

__all__ = ['CountableError', 'CountableException', 'Digit', 'gcd',
           'Integer', 'InvalidArgumentError', 'InvalidRationalError',
           'make_rational', 'Natural', 'NoSuchGuestError', 'NotInDomainError',
           'OutOfPrefixError', 'ParseError', 'Rational', 'SizeLimitError',
           'version', 'Whole']

_VERSION = (1, 0, 0)


def version():
    """
    The package version.

    Returns:
        tuple(str, int): version string and the version as an int
            (0xMMmmrr00)

    """
    major, minor, rev = _VERSION
    return "{}.{}.{}".format(major, minor, rev), (major << 24) | (minor << 16) | (rev << 8)


__version__ = version()[0]
