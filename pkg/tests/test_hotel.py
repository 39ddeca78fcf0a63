#!/usr/bin/env python
# -*- coding: utf-8 -*-

import random

import pytest

from countable.error import InvalidArgumentError, NoSuchGuestError, ParseError
from countable.hotel import EventKind, GuestId, GuestKind, HotelEvent, HotelState
from countable.hotel.script import parse_script, run_script

Original = GuestId.original
Arrival = GuestId.arrival


def test_fresh_hotel():
    s = HotelState()

    assert len(s) == 0
    assert s.room_of(Original(17)) == 17
    assert s.occupant_of(17) == Original(17)


def test_arrive_one():
    s = HotelState().arrive_one()

    assert s.room_of(Original(3)) == 4
    assert s.room_of(Original(1)) == 2
    assert s.occupant_of(1) == Arrival(1, 1)
    assert s.occupant_of(2) == Original(1)
    for n in range(1, 1001):
        assert s.room_of(Original(n)) == n + 1


def test_arrive_finite():
    s = HotelState().arrive_finite(346)

    assert s.room_of(Original(1)) == 347
    assert HotelState().arrive_finite(3).occupant_of(2) == Arrival(1, 2)
    one, finite = HotelState().arrive_one(), HotelState().arrive_finite(1)
    for n in range(1, 101):
        assert one.occupant_of(n) == finite.occupant_of(n)
        assert one.room_of(Original(n)) == finite.room_of(Original(n))


def test_arrive_finite_rejects_zero():
    with pytest.raises(InvalidArgumentError, match="a finite arrival needs k >= 1, not 0"):
        HotelState().arrive_finite(0)


def test_arrive_bus():
    s = HotelState().arrive_bus()

    assert s.room_of(Original(5)) == 10
    assert s.occupant_of(7) == Arrival(1, 4)
    assert s.occupant_of(6) == Original(3)
    assert s.occupant_of(9) == Arrival(1, 5)
    assert s.room_of(Arrival(1, 1)) == 1
    for n in range(1, 1001):
        assert s.room_of(Original(n)) == 2 * n


def test_bus_parity():
    s = HotelState().arrive_bus()

    for room in range(1, 2001):
        kind = s.occupant_of(room).kind
        assert kind is (GuestKind.ORIGINAL if room % 2 == 0 else GuestKind.ARRIVAL)


def test_composed_events():
    s = HotelState().arrive_one().arrive_bus()

    assert s.room_of(Original(3)) == 8
    assert s.room_of(Arrival(1)) == 2
    assert s.room_of(Arrival(2, 3)) == 5
    assert s.occupant_of(8) == Original(3)


def test_no_such_guest():
    s = HotelState().arrive_finite(2)

    with pytest.raises(NoSuchGuestError, match="batch 1 has 2 seats, not 3"):
        s.room_of(Arrival(1, 3))
    with pytest.raises(NoSuchGuestError, match="no arrival batch 2 in a log of 1 events"):
        s.room_of(Arrival(2, 1))


def test_states_are_values():
    s = HotelState()
    t = s.arrive_bus()

    assert len(s) == 0 and len(t) == 1
    assert t == HotelState.replay([HotelEvent(EventKind.ARRIVE_BUS)])
    assert hash(t) == hash(HotelState([HotelEvent(EventKind.ARRIVE_BUS)]))
    assert t.log == (HotelEvent(EventKind.ARRIVE_BUS),)


def test_guest_rendering():
    assert repr(Original(4)) == "Original(4)"
    assert repr(Arrival(2, 7)) == "Arrival(2, 7)"
    assert str(Arrival(2, 7)) == "arrival 2 7"
    assert str(Original(4)) == "original 4"
    assert Arrival(3).batch == 3
    with pytest.raises(AttributeError):
        Original(1).batch


def test_event_rendering():
    assert repr(HotelEvent(EventKind.ARRIVE_ONE)) == "ArriveOne"
    assert repr(HotelEvent(EventKind.ARRIVE_FINITE, 5)) == "ArriveFinite(5)"
    assert repr(HotelEvent(EventKind.ARRIVE_BUS)) == "ArriveBus"


def _random_events(rng, count):
    events = []
    for _ in range(count):
        kind = rng.choice(list(EventKind))
        if kind is EventKind.ARRIVE_FINITE:
            events.append(HotelEvent(kind, rng.randint(1, 1000)))
        else:
            events.append(HotelEvent(kind))
    return events


def _check_bijection(s, rooms, originals, seats, guests=()):
    for room in rooms:
        assert s.room_of(s.occupant_of(room)) == room

    for n in originals:
        g = Original(n)
        assert s.occupant_of(s.room_of(g)) == g

    for batch, event in enumerate(s.log, 1):
        limit = seats if event.size is None else min(seats, event.size)
        for seat in range(1, limit + 1):
            g = Arrival(batch, seat)
            assert s.occupant_of(s.room_of(g)) == g

    for g in guests:
        assert s.occupant_of(s.room_of(g)) == g


def _sample_guests(rng, s, count):
    """count guests, half of them originals, the rest seated on random arrivals."""
    guests = [Original(n) for n in rng.sample(range(1, 10 ** 4 + 1), count // 2)]
    while len(guests) < count:
        batch = rng.randint(1, len(s.log))
        size = s.log[batch - 1].size
        guests.append(Arrival(batch, rng.randint(1, min(size or 10 ** 4, 10 ** 4))))
    return guests


def test_random_scripts_bijective():
    rng = random.Random(20)

    for _ in range(50):
        s = HotelState.replay(_random_events(rng, rng.randint(1, 100)))
        _check_bijection(s, rooms=range(1, 10 ** 4 + 1), originals=(), seats=0,
                         guests=_sample_guests(rng, s, 10 ** 4))


def test_full_window_bijective():
    rng = random.Random(7)
    s = HotelState.replay(_random_events(rng, 100))

    _check_bijection(s, rooms=range(1, 10 ** 4 + 1), originals=range(1, 10 ** 4 + 1), seats=20)


def test_fullness_after_every_event():
    rng = random.Random(3)
    s = HotelState()

    for event in _random_events(rng, 30):
        s = s.apply(event)
        occupants = set(s.occupant_of(room) for room in range(1, 2001))
        assert len(occupants) == 2000


SCRIPT = """\
# Hilbert's hotel walk-through
one
room-of original 1     # moved up one
occupant 1
bus
room-of original 3
room-of arrival 2 4
occupant 6
finite 346
room-of original 1
occupant 346
"""


def test_run_script():
    assert list(run_script(SCRIPT.splitlines())) == [
        ("room-of original 1", "2"),
        ("occupant 1", "arrival 1 1"),
        ("room-of original 3", "8"),
        ("room-of arrival 2 4", "7"),
        ("occupant 6", "original 2"),
        ("room-of original 1", "350"),
        ("occupant 346", "arrival 3 346"),
    ]


def test_parse_script():
    commands = parse_script(SCRIPT.splitlines())

    assert [c.lineno for c in commands] == [2, 3, 4, 5, 6, 7, 8, 9, 10, 11]
    assert commands[0].event == HotelEvent(EventKind.ARRIVE_ONE)
    assert not commands[0].is_query
    assert commands[1].guest == Original(1)
    assert commands[2].room == 1
    assert commands[7].event == HotelEvent(EventKind.ARRIVE_FINITE, 346)


@pytest.mark.parametrize("line,msg", [
    ("fly", "tour:1: unknown command 'fly'"),
    ("finite 0", "tour:1: k must be a natural number, not '0'"),
    ("finite", r"tour:1: 'finite' takes 1 argument\(s\), got 0"),
    ("bus 2", r"tour:1: 'bus' takes 0 argument\(s\), got 1"),
    ("room-of guest 1", "tour:1: room-of expects 'original' or 'arrival'"),
    ("room-of arrival 1", r"tour:1: 'room-of' takes 3 argument\(s\), got 2"),
    ("occupant x", "tour:1: room must be a natural number, not 'x'"),
])
def test_parse_script_errors(line, msg):
    with pytest.raises(ParseError, match=msg):
        parse_script([line], source='tour')


def test_run_script_checks_before_running():
    answers = run_script(["occupant 1", "fly"])

    with pytest.raises(ParseError, match="<input>:2: unknown command 'fly'"):
        next(answers)


def test_run_script_unknown_guest():
    with pytest.raises(NoSuchGuestError, match="no arrival batch 1 in a log of 0 events"):
        list(run_script(["room-of arrival 1 1"]))
