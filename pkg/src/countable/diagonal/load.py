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
from ..error import NotInDomainError, ParseError
from . import RealList, prefix_stream


def loads(text, source=None):
    """
    Parse a stream file: one real per line, written as the digits after the
    decimal point, optionally preceded by ``0.``. Blank lines are skipped.
    """
    streams = []
    for lineno, line in enumerate(text.splitlines(), 1):
        digits = line.strip()
        if not digits:
            continue
        if digits.startswith('0.'):
            digits = digits[2:]
        if not digits:
            raise ParseError("no digits after '0.'", source, lineno)
        try:
            streams.append(prefix_stream(digits, "{}:{}".format(source or '<input>', lineno)))
        except NotInDomainError:
            raise ParseError("{!r} is not a digit string".format(line.strip()), source, lineno)
    return RealList.from_streams(streams, label=source or '<input>')


def load(path):
    """Parse a stream file (UTF-8) from a path."""
    with open(path, encoding='utf-8') as f:
        return loads(f.read(), source=path)
