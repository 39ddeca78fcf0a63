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

import pytest

from countable.bijections import GridPosition, pair_index
from countable.enumerations import ENUMERATIONS, Enumeration, evens, filter_reindex, \
    grid, integers, interleave, naturals, odds, prefix_witness, prepend_finite, \
    product, rationals_all, rationals_positive, relabel, wholes
from countable.error import InvalidArgumentError, NotInDomainError
from countable.finite_compare import FiniteSet, check_witness
from countable.numbers import Integer, Rational, Whole, gcd, make_rational

ROUNDTRIP = 10 ** 4


def _rationals(*texts):
    return [make_rational(*(int(x) for x in t.split('/'))) for t in texts]


def test_evens():
    e = evens()

    assert e.take(3) == [2, 4, 6]
    assert e.index_of(18) == 9
    with pytest.raises(NotInDomainError, match="7 is not even"):
        e.index_of(7)


def test_wholes():
    e = wholes()

    assert e.take(4) == [0, 1, 2, 3]
    assert e.index_of(Whole(0)) == 1
    assert e.index_of(8) == 9


def test_integers():
    z = integers()

    assert z.take(7) == [0, 1, -1, 2, -2, 3, -3]
    assert z.at(4) == 2
    assert z.at(9) == -4
    assert z.index_of(Integer(-4)) == 9
    assert z.index_of(0) == 1


def test_odds():
    assert odds().take(4) == [1, 3, 5, 7]
    assert 8 not in odds()


def test_grid():
    g = grid()

    assert g.take(6) == [GridPosition(1, 1), GridPosition(1, 2), GridPosition(2, 1),
                         GridPosition(3, 1), GridPosition(2, 2), GridPosition(1, 3)]
    assert g.index_of(GridPosition(4, 1)) == 10


def test_rationals_positive_prefix():
    q = rationals_positive()

    assert q.take(9) == _rationals("1/1", "1/2", "2/1", "3/1", "1/3", "1/4", "2/3", "3/2", "4/1")
    assert [str(x) for x in q.take(9)] == \
        ["1/1", "1/2", "2/1", "3/1", "1/3", "1/4", "2/3", "3/2", "4/1"]


def test_rationals_positive_index_of():
    q = rationals_positive()

    assert q.index_of(Rational(2, 3)) == 7
    assert q.index_of((2, 3)) == 7
    # a Rational is always reduced, so 2/4 arrives as 1/2
    assert q.index_of(Rational(2, 4)) == 2


def test_rationals_positive_skipped_cell():
    q = rationals_positive()

    with pytest.raises(NotInDomainError, match="is not in reduced grid cells"):
        q.index_of((2, 4))
    with pytest.raises(NotInDomainError):
        q.index_of((2, 2))


def test_rationals_positive_rejects_non_positive():
    q = rationals_positive()

    with pytest.raises(NotInDomainError, match="is not a positive rational"):
        q.index_of(Rational(-1, 2))
    with pytest.raises(NotInDomainError, match="is not a positive rational"):
        q.index_of(Rational(0))
    assert Rational(0) not in q
    assert "half" not in q


def test_rationals_all():
    q = rationals_all()

    assert [str(x) for x in q.take(7)] == ["0/1", "1/1", "-1/1", "1/2", "-1/2", "2/1", "-2/1"]
    assert q.at(2) == 1 and q.at(3) == -1

    positive = rationals_positive()
    assert q.index_of(Rational(-1, 2)) == 2 * positive.index_of(Rational(1, 2)) + 1
    assert q.index_of(Rational(0)) == 1
    assert q.index_of((0, 1)) == 1
    assert q.index_of((-1, 2)) == q.index_of(Rational(-1, 2))
    with pytest.raises(NotInDomainError, match="0/2 is not a reduced fraction"):
        q.index_of((0, 2))


def test_rationals_all_negative_cross_check():
    q = rationals_all()
    positive = rationals_positive()

    for n in range(1, 2000):
        x = positive.at(n)
        assert q.index_of(-x) == 2 * n + 1
        assert q.index_of(x) == 2 * n


@pytest.mark.parametrize("name", sorted(ENUMERATIONS))
def test_roundtrip(name):
    e = ENUMERATIONS[name]()

    for n in range(1, ROUNDTRIP + 1):
        assert e.index_of(e.at(n)) == n


@pytest.mark.parametrize("name", sorted(ENUMERATIONS))
def test_prefix_distinct(name):
    values = ENUMERATIONS[name]().take(ROUNDTRIP)

    assert len(set(values)) == len(values)


def test_rationals_complete():
    q = rationals_positive()

    for p in range(1, 31):
        for d in range(1, 31):
            if gcd(p, d) != 1:
                continue
            raw = pair_index(GridPosition(p, d))
            index = q.index_of(Rational(p, d))
            assert index <= raw
            assert q.at(index) == Rational(p, d)


def test_at_rejects_non_naturals():
    with pytest.raises(NotInDomainError, match="0 is not a natural number"):
        naturals().at(0)


def test_interleave_fairness():
    e = interleave(evens(), odds())

    assert e.take(6) == [2, 1, 4, 3, 6, 5]
    assert e.index_of(2) == 1
    assert e.index_of(5) == 6
    for k in range(1, 500):
        assert e.at(2 * k - 1) == evens().at(k)
        assert e.at(2 * k) == odds().at(k)


def test_interleave_unknown_element():
    e = interleave(evens(), relabel(naturals(), lambda n: 10 * n + 1, lambda x: (x - 1) // 10))

    with pytest.raises(NotInDomainError, match="is in neither E nor N"):
        e.index_of(3)


def test_product_roundtrip():
    e = product(evens(), integers())

    assert e.at(1) == (2, 0)
    assert e.at(3) == (4, 0)
    for n in range(1, ROUNDTRIP + 1):
        assert e.index_of(e.at(n)) == n


def test_product_rejects_non_pairs():
    with pytest.raises(NotInDomainError, match="is not a pair"):
        product(naturals(), naturals()).index_of(7)


def test_prepend_finite():
    e = prepend_finite(['x', 'y'], naturals())

    assert e.take(4) == ['x', 'y', 1, 2]
    assert e.index_of('y') == 2
    assert e.index_of(1) == 3
    assert e.label == "x, y + N"


def test_prepend_finite_rejects_overlap():
    with pytest.raises(InvalidArgumentError, match="3 is already enumerated by N"):
        prepend_finite([3], naturals())
    with pytest.raises(InvalidArgumentError, match="occurs twice"):
        prepend_finite([0, 0], naturals())


def test_filter_reindex():
    squares = filter_reindex(naturals(), lambda n: int(n ** 0.5) ** 2 == n, label='squares')

    assert squares.take(5) == [1, 4, 9, 16, 25]
    assert squares.index_of(100) == 10
    with pytest.raises(NotInDomainError, match="50 is not in squares"):
        squares.index_of(50)


def test_filter_reindex_batch_size():
    multiples = filter_reindex(naturals(), lambda n: n % 7 == 0, conf={'scan.batch.size': 1})

    assert multiples.index_of(700) == 100
    assert multiples.at(3) == 21
    assert multiples.label == "filtered N"


def test_filter_reindex_config():
    with pytest.raises(ValueError, match="Unrecognized properties: scan.batch.ms"):
        filter_reindex(naturals(), bool, conf={'scan.batch.ms': 1})

    for bad in (0, -5, '64', True):
        with pytest.raises(ValueError, match="scan.batch.size must be a positive int"):
            filter_reindex(naturals(), bool, conf={'scan.batch.size': bad})


def test_enumeration_protocol():
    e = Enumeration('squares', lambda n: n * n, lambda x: int(x ** 0.5))

    assert str(e) == 'squares'
    assert repr(e) == 'Enumeration(squares)'
    it = iter(e)
    assert [next(it) for _ in range(3)] == [1, 4, 9]


def test_prefix_witness():
    w = prefix_witness(rationals_positive(), 9)
    indices = FiniteSet(str(n) for n in range(1, 10))
    values = FiniteSet(["1/1", "1/2", "2/1", "3/1", "1/3", "1/4", "2/3", "3/2", "4/1"])

    assert not w.has_remainder
    assert w.pairs[6] == ("7", "2/3")
    assert check_witness(indices, values, w)
