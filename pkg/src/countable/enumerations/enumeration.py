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
import logging
from bisect import bisect_left
from itertools import count
from threading import Lock

from ..bijections import GridPosition, pair_index, unpair
from ..error import InvalidArgumentError, NotInDomainError
from ..numbers import Natural

log = logging.getLogger(__name__)

DEFAULT_SCAN_BATCH_SIZE = 64


class Enumeration(object):
    """
    A bijection between the positive indices and a countable domain.

    ``at`` must be total on 1, 2, 3, ... and injective; ``index_of`` is its
    inverse and signals :py:class:`NotInDomainError` for values outside the
    range. Instances are immutable from the caller's point of view; any
    caching done by a combinator is internal and does not change answers.

    Args:
        label (str): Name of the domain, used in diagnostics.

        at (callable(Natural) -> object): Forward map.

        index_of (callable(object) -> int): Backward map.

    """
    __slots__ = ['label', '_at', '_index_of']

    def __init__(self, label, at, index_of):
        self.label = label
        self._at = at
        self._index_of = index_of

    def at(self, n):
        """
        The n-th element.

        Raises:
            NotInDomainError: if n is not a natural number.

        """
        return self._at(Natural(n))

    def index_of(self, x):
        """
        The index of x.

        Raises:
            NotInDomainError: if x is not in the range of this enumeration.

        """
        return Natural(self._index_of(x))

    def take(self, k):
        """The first k elements as a list."""
        return [self.at(n) for n in range(1, k + 1)]

    def __iter__(self):
        for n in count(1):
            yield self.at(n)

    def __contains__(self, x):
        try:
            self.index_of(x)
        except (NotInDomainError, TypeError):
            return False
        return True

    def __repr__(self):
        return "Enumeration({})".format(self.label)

    def __str__(self):
        return self.label


def relabel(e, forward, backward, label=None):
    """
    Transport e along a bijection.

    Args:
        e (Enumeration): source enumeration

        forward (callable): maps e's elements to the new domain

        backward (callable): inverse of forward; raises NotInDomainError
            outside the new domain

        label (str, optional): name of the new domain

    Returns:
        Enumeration: at(n) = forward(e.at(n))

    """
    return Enumeration(label if label is not None else e.label,
                       lambda n: forward(e.at(n)),
                       lambda x: e.index_of(backward(x)))


def prepend_finite(front, e, label=None):
    """
    Put finitely many new elements in front of e, shifting e's indices by
    ``len(front)``.

    Args:
        front (list): pairwise distinct elements not in e's range

        e (Enumeration): the enumeration to extend

        label (str, optional): name of the new domain

    Raises:
        InvalidArgumentError: if front repeats an element or overlaps e.

    Returns:
        Enumeration

    """
    front = tuple(front)
    for i, x in enumerate(front):
        if x in front[:i]:
            raise InvalidArgumentError("{} occurs twice in the prepended elements".format(x))
        if x in e:
            raise InvalidArgumentError("{} is already enumerated by {}".format(x, e.label))

    k = len(front)

    def at(n):
        if n <= k:
            return front[n - 1]
        return e.at(n - k)

    def index_of(x):
        if x in front:
            return front.index(x) + 1
        return e.index_of(x) + k

    if label is None:
        label = "{} + {}".format(", ".join(str(x) for x in front), e.label) if k else e.label
    return Enumeration(label, at, index_of)


def interleave(a, b, label=None):
    """
    Alternate two enumerations with disjoint ranges: odd indices come from
    a, even indices from b.

    Returns:
        Enumeration: at(2k-1) = a.at(k), at(2k) = b.at(k)

    """
    def at(n):
        if n % 2:
            return a.at((n + 1) // 2)
        return b.at(n // 2)

    def index_of(x):
        try:
            return 2 * a.index_of(x) - 1
        except NotInDomainError:
            pass
        try:
            return 2 * b.index_of(x)
        except NotInDomainError:
            raise NotInDomainError("{} is in neither {} nor {}".format(x, a.label, b.label))

    return Enumeration(label if label is not None else "{} | {}".format(a.label, b.label),
                       at, index_of)


def product(a, b, label=None):
    """
    Cartesian product walked in serpentine order along the diagonals.

    Returns:
        Enumeration: at(n) = (a.at(row), b.at(col)) where (row, col) = unpair(n)

    """
    def at(n):
        cell = unpair(n)
        return a.at(cell.row), b.at(cell.col)

    def index_of(pair):
        try:
            x, y = pair
        except (TypeError, ValueError):
            raise NotInDomainError("{} is not a pair".format(pair))
        return pair_index(GridPosition(a.index_of(x), b.index_of(y)))

    return Enumeration(label if label is not None else "{} x {}".format(a.label, b.label),
                       at, index_of)


class _FilterScan(object):
    """
    Thread-safe, incrementally extended record of which raw indices of an
    enumeration satisfy a predicate.

    ``_kept`` holds, in ascending order, every raw index <= ``_frontier``
    whose element is kept.

    """
    def __init__(self, e, keep, label, batch_size):
        self.e = e
        self.keep = keep
        self.label = label
        self.batch_size = batch_size
        self.lock = Lock()
        self._kept = []
        self._frontier = 0

    def _scan_batch(self):
        start = self._frontier + 1
        stop = start + self.batch_size
        for raw in range(start, stop):
            if self.keep(self.e.at(raw)):
                self._kept.append(raw)
        self._frontier = stop - 1
        log.debug("%s: scanned %s up to %d, %d kept",
                  self.label, self.e.label, self._frontier, len(self._kept))

    def at(self, n):
        with self.lock:
            while len(self._kept) < n:
                self._scan_batch()
            raw = self._kept[n - 1]
        return self.e.at(raw)

    def index_of(self, x):
        if not self.keep(x):
            raise NotInDomainError("{} is not in {}".format(x, self.label))
        raw = self.e.index_of(x)
        with self.lock:
            while self._frontier < raw:
                self._scan_batch()
            pos = bisect_left(self._kept, raw)
        return pos + 1


def filter_reindex(e, keep, label=None, conf=None):
    """
    The elements of e that satisfy keep, re-indexed 1, 2, 3, ... in e's
    order.

    keep must accept infinitely many elements of e; this cannot be checked.
    Lookups are answered from a scan of e that is memoized and shared by all
    callers, so repeated and concurrent queries are cheap and consistent.

    Notable filter configuration properties:

    +---------------------+------+------------------------------------------+
    | Property Name       | Type | Description                              |
    +=====================+======+==========================================+
    | ``scan.batch.size`` | int  | Raw indices examined per scan extension. |
    |                     |      | Defaults to 64.                          |
    +---------------------+------+------------------------------------------+

    Args:
        e (Enumeration): enumeration to filter

        keep (callable(object) -> bool): decidable predicate

        label (str, optional): name of the filtered domain

        conf (dict, optional): configuration properties

    Raises:
        ValueError: on unknown or invalid configuration properties.

    Returns:
        Enumeration

    """
    conf_copy = dict(conf) if conf is not None else {}

    batch_size = conf_copy.pop('scan.batch.size', DEFAULT_SCAN_BATCH_SIZE)
    if isinstance(batch_size, bool) or not isinstance(batch_size, int) or batch_size < 1:
        raise ValueError("scan.batch.size must be a positive int, not {!r}".format(batch_size))

    if len(conf_copy) > 0:
        raise ValueError("Unrecognized properties: {}"
                         .format(", ".join(conf_copy.keys())))

    label = label if label is not None else "filtered {}".format(e.label)
    scan = _FilterScan(e, keep, label, batch_size)
    return Enumeration(label, scan.at, scan.index_of)
