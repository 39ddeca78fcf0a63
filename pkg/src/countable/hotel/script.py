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
Hotel scripts: one command per line, ``#`` starts a comment.

+--------------------------------------+--------------------------------+
| Command                              | Effect                         |
+======================================+================================+
| ``one``                              | one new guest                  |
+--------------------------------------+--------------------------------+
| ``finite <k>``                       | k new guests                   |
+--------------------------------------+--------------------------------+
| ``bus``                              | countably many new guests      |
+--------------------------------------+--------------------------------+
| ``room-of original <n>``             | room of the guest first in n   |
+--------------------------------------+--------------------------------+
| ``room-of arrival <batch> <seat>``   | room of an arrival             |
+--------------------------------------+--------------------------------+
| ``occupant <room>``                  | guest in room                  |
+--------------------------------------+--------------------------------+

"""
import logging
from collections import namedtuple

from ..error import NotInDomainError, ParseError
from ..numbers import Natural
from . import EventKind, GuestId, HotelEvent, HotelState

log = logging.getLogger(__name__)

__all__ = ['Command', 'parse_script', 'run_script']


class Command(namedtuple('Command', ['lineno', 'text', 'event', 'guest', 'room'])):
    """
    One parsed script line: exactly one of event, guest (room-of query) and
    room (occupant query) is set.
    """
    __slots__ = ()

    @property
    def is_query(self):
        return self.event is None


def _natural(token, what, source, lineno):
    try:
        return Natural(int(token))
    except (ValueError, NotInDomainError):
        raise ParseError("{} must be a natural number, not {!r}".format(what, token), source, lineno)


def _parse_line(words, source, lineno):
    verb, args = words[0], words[1:]

    def arity(n):
        if len(args) != n:
            raise ParseError("{!r} takes {} argument(s), got {}".format(verb, n, len(args)),
                             source, lineno)

    if verb == 'one':
        arity(0)
        return HotelEvent(EventKind.ARRIVE_ONE), None, None
    if verb == 'bus':
        arity(0)
        return HotelEvent(EventKind.ARRIVE_BUS), None, None
    if verb == 'finite':
        arity(1)
        return HotelEvent(EventKind.ARRIVE_FINITE, _natural(args[0], 'k', source, lineno)), None, None
    if verb == 'occupant':
        arity(1)
        return None, None, _natural(args[0], 'room', source, lineno)
    if verb == 'room-of':
        if args[:1] == ['original']:
            arity(2)
            return None, GuestId.original(_natural(args[1], 'room', source, lineno)), None
        if args[:1] == ['arrival']:
            arity(3)
            return None, GuestId.arrival(_natural(args[1], 'batch', source, lineno),
                                         _natural(args[2], 'seat', source, lineno)), None
        raise ParseError("room-of expects 'original' or 'arrival'", source, lineno)

    raise ParseError("unknown command {!r}".format(verb), source, lineno)


def parse_script(lines, source=None):
    """
    Parse script lines.

    Args:
        lines (iterable of str): script text, one command per line

        source (str, optional): origin used in error messages

    Raises:
        ParseError: on the first malformed line.

    Returns:
        list(Command)

    """
    commands = []
    for lineno, line in enumerate(lines, 1):
        text = line.split('#', 1)[0].strip()
        if not text:
            continue
        event, guest, room = _parse_line(text.split(), source, lineno)
        commands.append(Command(lineno, " ".join(text.split()), event, guest, room))
    return commands


def run_script(lines, source=None, state=None):
    """
    Run a script against a hotel, yielding one answer per query.

    Arrivals update the state; queries are evaluated against the state
    reached so far.

    Args:
        lines (iterable of str): script text

        source (str, optional): origin used in error messages

        state (HotelState, optional): starting state. Defaults to a fresh hotel.

    Raises:
        ParseError: if the script is malformed (before anything runs).

        NoSuchGuestError: if a query names a guest who has not arrived.

    Yields:
        tuple(str, str): the normalized query text and its answer

    """
    commands = parse_script(lines, source)
    state = state if state is not None else HotelState()

    for command in commands:
        if not command.is_query:
            state = state.apply(command.event)
            continue

        if command.guest is not None:
            answer = state.room_of(command.guest)
        else:
            answer = state.occupant_of(command.room)
        log.debug("line %d: %s -> %s", command.lineno, command.text, answer)
        yield command.text, str(answer)
