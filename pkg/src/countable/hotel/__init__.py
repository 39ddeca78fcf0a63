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
Hilbert's hotel: one room per natural number, every room occupied, and yet
room for new guests after a relocation.

A :py:class:`HotelState` is nothing but its event log. Room maps are never
materialized; a query composes the per-event maps arithmetically.

.. list-table::
    :header-rows: 1

    * - Event
      - Occupant of room n moves to
      - Arrival with seat s gets room
    * - ArriveOne
      - n + 1
      - 1
    * - ArriveFinite(k)
      - n + k
      - s (1 <= s <= k)
    * - ArriveBus
      - 2n
      - 2s - 1

"""
import logging
from enum import Enum

from ..error import InvalidArgumentError, NoSuchGuestError
from ..numbers import Natural

log = logging.getLogger(__name__)

__all__ = ['EventKind',
           'GuestId',
           'GuestKind',
           'HotelEvent',
           'HotelState']


class GuestKind(Enum):
    """
    Enumerates the two kinds of guest.
    """
    ORIGINAL = 'original'  #: Present before any arrival, named by initial room.
    ARRIVAL = 'arrival'  #: Checked in by an event, named by (batch, seat).


class GuestId(object):
    """
    Identifies a guest for the lifetime of a hotel.

    Use :py:meth:`GuestId.original` and :py:meth:`GuestId.arrival` rather
    than the constructor.

    Args:
        kind (GuestKind): original or arrival

        number (int): initial room for originals, batch for arrivals

        seat (int, optional): seat within the batch, arrivals only

    """
    __slots__ = ['kind', 'number', 'seat']

    def __init__(self, kind, number, seat=None):
        self.kind = kind
        self.number = Natural(number)
        if kind is GuestKind.ARRIVAL:
            self.seat = Natural(seat if seat is not None else 1)
        else:
            self.seat = None

    @classmethod
    def original(cls, room):
        return cls(GuestKind.ORIGINAL, room)

    @classmethod
    def arrival(cls, batch, seat=1):
        return cls(GuestKind.ARRIVAL, batch, seat)

    @property
    def batch(self):
        """The 1-based index in the log of the event that brought this guest."""
        if self.kind is not GuestKind.ARRIVAL:
            raise AttributeError("original guests have no batch")
        return self.number

    def _key(self):
        return self.kind, self.number, self.seat

    def __eq__(self, other):
        return isinstance(other, GuestId) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind is GuestKind.ORIGINAL:
            return "Original({})".format(self.number)
        return "Arrival({}, {})".format(self.number, self.seat)

    def __str__(self):
        if self.kind is GuestKind.ORIGINAL:
            return "original {}".format(self.number)
        return "arrival {} {}".format(self.number, self.seat)


class EventKind(Enum):
    """
    Enumerates the arrival operations.
    """
    ARRIVE_ONE = 'one'  #: A single new guest.
    ARRIVE_FINITE = 'finite'  #: k new guests.
    ARRIVE_BUS = 'bus'  #: A bus with countably many new guests.


class HotelEvent(object):
    """
    One arrival.

    Args:
        kind (EventKind): the operation

        size (int, optional): number of guests for ARRIVE_FINITE

    Raises:
        InvalidArgumentError: if an ARRIVE_FINITE size is less than 1.

    """
    __slots__ = ['kind', 'size']

    def __init__(self, kind, size=None):
        self.kind = kind
        if kind is EventKind.ARRIVE_FINITE:
            if size is None or size < 1:
                raise InvalidArgumentError("a finite arrival needs k >= 1, not {}".format(size))
            self.size = Natural(size)
        elif kind is EventKind.ARRIVE_ONE:
            self.size = Natural(1)
        else:
            self.size = None

    def seats(self, seat):
        return self.size is None or seat <= self.size

    def move(self, room):
        if self.size is None:
            return 2 * room
        return room + self.size

    def seat_room(self, seat):
        if self.size is None:
            return 2 * seat - 1
        return seat

    def __eq__(self, other):
        return isinstance(other, HotelEvent) and (self.kind, self.size) == (other.kind, other.size)

    def __hash__(self):
        return hash((self.kind, self.size))

    def __repr__(self):
        if self.kind is EventKind.ARRIVE_FINITE:
            return "ArriveFinite({})".format(self.size)
        if self.kind is EventKind.ARRIVE_ONE:
            return "ArriveOne"
        return "ArriveBus"


class HotelState(object):
    """
    The hotel after a sequence of arrivals.

    States are immutable values; every arrival returns a new state. Guests
    and rooms are related by a bijection at every point, and every room is
    occupied.

    Args:
        events (iterable of HotelEvent, optional): the log, in arrival order

    """
    __slots__ = ['_log']

    def __init__(self, events=()):
        self._log = tuple(events)

    @classmethod
    def replay(cls, events):
        """Build the state reached from a fresh hotel by events."""
        state = cls()
        for event in events:
            state = state.apply(event)
        return state

    @property
    def log(self):
        return self._log

    def __len__(self):
        return len(self._log)

    def __eq__(self, other):
        return isinstance(other, HotelState) and self._log == other._log

    def __hash__(self):
        return hash(self._log)

    def __repr__(self):
        return "HotelState({})".format(list(self._log))

    def apply(self, event):
        log.debug("event %d: %r", len(self._log) + 1, event)
        return HotelState(self._log + (event,))

    def arrive_one(self):
        """Everybody moves one room up; the new guest takes room 1."""
        return self.apply(HotelEvent(EventKind.ARRIVE_ONE))

    def arrive_finite(self, k):
        """
        Everybody moves k rooms up; seats 1..k take rooms 1..k.

        Raises:
            InvalidArgumentError: if k < 1.

        """
        return self.apply(HotelEvent(EventKind.ARRIVE_FINITE, k))

    def arrive_bus(self):
        """Everybody doubles their room number; bus seat s takes room 2s - 1."""
        return self.apply(HotelEvent(EventKind.ARRIVE_BUS))

    def room_of(self, guest):
        """
        The room guest currently occupies.

        Raises:
            NoSuchGuestError: if guest never checked in.

        Returns:
            Natural: room number

        """
        if guest.kind is GuestKind.ORIGINAL:
            room = guest.number
            later = self._log
        else:
            if guest.batch > len(self._log):
                raise NoSuchGuestError("no arrival batch {} in a log of {} events"
                                       .format(guest.batch, len(self._log)))
            event = self._log[guest.batch - 1]
            if not event.seats(guest.seat):
                raise NoSuchGuestError("batch {} has {} seats, not {}"
                                       .format(guest.batch, event.size, guest.seat))
            room = event.seat_room(guest.seat)
            later = self._log[guest.batch:]

        for event in later:
            room = event.move(room)
        return Natural(room)

    def occupant_of(self, room):
        """
        The guest in room, found by undoing the events newest first.

        Returns:
            GuestId

        """
        room = Natural(room)
        for batch in range(len(self._log), 0, -1):
            event = self._log[batch - 1]
            if event.size is None:
                if room % 2:
                    return GuestId.arrival(batch, (room + 1) // 2)
                room //= 2
            else:
                if room <= event.size:
                    return GuestId.arrival(batch, room)
                room -= event.size
        return GuestId.original(room)
