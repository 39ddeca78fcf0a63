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
Cardinality of finite sets decided the exhaustive way: look at every
maximal pairing between the two sets and see which side is left over.

Witness text format, one entry per line, ``#`` starts a comment::

    1<TAB>c
    2<TAB>d
    3<TAB>a
    left-remainder:
    right-remainder:
    b

"""
import logging
from enum import Enum
from itertools import permutations

from .error import InvalidArgumentError, ParseError, SizeLimitError

log = logging.getLogger(__name__)

__all__ = ['Comparison',
           'FiniteComparator',
           'FiniteSet',
           'PairingWitness',
           'Verdict',
           'all_maximal_pairings',
           'check_witness',
           'compare',
           'dumps_witness',
           'load_witness',
           'loads_witness',
           'witness_problems']

DEFAULT_MAX_SET_SIZE = 8

_LEFT_REMAINDER = 'left-remainder:'
_RIGHT_REMAINDER = 'right-remainder:'


def _check_label(label, separators='\t'):
    """Return label as str if the witness and set text forms can carry it unchanged."""
    label = str(label)
    if not label or label.strip() != label:
        raise InvalidArgumentError("label {!r} is empty or has surrounding whitespace".format(label))
    if label.splitlines() != [label] or any(c in label for c in separators):
        raise InvalidArgumentError("label {!r} contains a separator".format(label))
    if label.startswith('#') or label in (_LEFT_REMAINDER, _RIGHT_REMAINDER):
        raise InvalidArgumentError("label {!r} would read back as a comment or section header".format(label))
    return label


class FiniteSet(object):
    """
    A finite set of string labels, kept in the order given.

    Args:
        labels (iterable of str): pairwise distinct labels

    Raises:
        InvalidArgumentError: if a label repeats, or cannot be written in the
            comma separated or witness text forms.

    """
    __slots__ = ['labels']

    def __init__(self, labels):
        labels = tuple(_check_label(label, separators='\t,') for label in labels)
        seen = set()
        for label in labels:
            if label in seen:
                raise InvalidArgumentError("label {!r} occurs more than once".format(label))
            seen.add(label)
        self.labels = labels

    @classmethod
    def parse(cls, text):
        """Build a set from a comma separated list; empty text is the empty set."""
        text = text.strip()
        if not text:
            return cls([])
        return cls(label.strip() for label in text.split(','))

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.labels

    def __eq__(self, other):
        return isinstance(other, FiniteSet) and set(self.labels) == set(other.labels)

    def __hash__(self):
        return hash(frozenset(self.labels))

    def __repr__(self):
        return "FiniteSet({})".format(list(self.labels))

    def __str__(self):
        return "{" + ", ".join(self.labels) + "}"


class PairingWitness(object):
    """
    A pairing between two finite sets together with what it leaves over.

    Args:
        pairs (list of (str, str)): (left label, right label) pairs

        remainder_left (list of str, optional): unpaired left labels

        remainder_right (list of str, optional): unpaired right labels

    Raises:
        InvalidArgumentError: if a label cannot be written in the witness
            text form.

    """
    __slots__ = ['pairs', 'remainder_left', 'remainder_right']

    def __init__(self, pairs, remainder_left=(), remainder_right=()):
        self.pairs = tuple((_check_label(left), _check_label(right)) for left, right in pairs)
        self.remainder_left = tuple(_check_label(label) for label in remainder_left)
        self.remainder_right = tuple(_check_label(label) for label in remainder_right)

    @property
    def has_remainder(self):
        return bool(self.remainder_left or self.remainder_right)

    @property
    def remainder_size(self):
        return len(self.remainder_left) + len(self.remainder_right)

    def __eq__(self, other):
        return isinstance(other, PairingWitness) and \
            (self.pairs, self.remainder_left, self.remainder_right) == \
            (other.pairs, other.remainder_left, other.remainder_right)

    def __hash__(self):
        return hash((self.pairs, self.remainder_left, self.remainder_right))

    def __repr__(self):
        return "PairingWitness(pairs={}, remainder_left={}, remainder_right={})".format(
            list(self.pairs), list(self.remainder_left), list(self.remainder_right))


class Verdict(Enum):
    """
    Outcome of comparing two finite sets.
    """
    EQUAL_CARDINALITY = 'EqualCardinality'  #: Some pairing leaves no remainder.
    LEFT_LARGER = 'LeftLarger'  #: Every pairing leaves left labels over.
    RIGHT_LARGER = 'RightLarger'  #: Every pairing leaves right labels over.

    def __str__(self):
        return self.value


class Comparison(object):
    """
    Result of :py:meth:`FiniteComparator.compare`.

    Attributes:
        verdict (Verdict): the outcome

        witness (PairingWitness): a pairing exhibiting the verdict; for an
            unequal verdict it pairs the smaller set onto a subset of the
            larger one

        examined (int): number of maximal pairings looked at

    """
    __slots__ = ['verdict', 'witness', 'examined']

    def __init__(self, verdict, witness, examined):
        self.verdict = verdict
        self.witness = witness
        self.examined = examined

    def __repr__(self):
        return "Comparison({}, examined={})".format(self.verdict, self.examined)


class FiniteComparator(object):
    """
    Exhaustive pairing comparator.

    The number of maximal pairings grows factorially with the set sizes, so
    sets are capped.

    FiniteComparator configuration properties:

    +------------------+------+----------------------------------------------+
    | Property Name    | Type | Description                                  |
    +==================+======+==============================================+
    | ``max.set.size`` | int  | Largest set accepted on either side.         |
    |                  |      | 0 disables the limit. Defaults to 8.         |
    +------------------+------+----------------------------------------------+

    Args:
        conf (dict, optional): configuration properties

    Raises:
        ValueError: on unknown or invalid configuration properties.

    """
    def __init__(self, conf=None):
        conf_copy = dict(conf) if conf is not None else {}

        max_size = conf_copy.pop('max.set.size', DEFAULT_MAX_SET_SIZE)
        if isinstance(max_size, str) and max_size.strip().isdigit():
            max_size = int(max_size)
        if isinstance(max_size, bool) or not isinstance(max_size, int) or max_size < 0:
            raise ValueError("max.set.size must be a non-negative int, not {!r}".format(max_size))
        self._max_size = max_size

        if len(conf_copy) > 0:
            raise ValueError("Unrecognized properties: {}"
                             .format(", ".join(conf_copy.keys())))

    @property
    def max_size(self):
        return self._max_size

    def _check_size(self, s):
        if self._max_size and len(s) > self._max_size:
            raise SizeLimitError("set of size {} exceeds max.set.size={}"
                                 .format(len(s), self._max_size))

    def all_maximal_pairings(self, a, b):
        """
        Every maximal pairing between a and b.

        The smaller set is paired completely; the labels of the larger set
        are assigned in lexicographic order of their positions, so the output
        is deterministic. There are max * (max - 1) * ... pairings, min factors.

        Args:
            a (FiniteSet): left set

            b (FiniteSet): right set

        Raises:
            SizeLimitError: if either set exceeds ``max.set.size``.

        Returns:
            list(PairingWitness)

        """
        self._check_size(a)
        self._check_size(b)

        witnesses = []
        if len(a) <= len(b):
            for chosen in permutations(b.labels, len(a)):
                used = set(chosen)
                witnesses.append(PairingWitness(
                    zip(a.labels, chosen),
                    remainder_right=[label for label in b.labels if label not in used]))
        else:
            for chosen in permutations(a.labels, len(b)):
                used = set(chosen)
                witnesses.append(PairingWitness(
                    zip(chosen, b.labels),
                    remainder_left=[label for label in a.labels if label not in used]))

        log.debug("%d maximal pairings between %s and %s", len(witnesses), a, b)
        return witnesses

    def compare(self, a, b):
        """
        Decide whether a and b have equal cardinality, and if not which one
        is larger.

        a and b are equal if some maximal pairing leaves no remainder.
        Otherwise the larger set is the one left over in every pairing.

        Returns:
            Comparison

        """
        witnesses = self.all_maximal_pairings(a, b)

        for w in witnesses:
            if not w.has_remainder:
                return Comparison(Verdict.EQUAL_CARDINALITY, w, len(witnesses))

        if all(w.remainder_left for w in witnesses):
            verdict = Verdict.LEFT_LARGER
        elif all(w.remainder_right for w in witnesses):
            verdict = Verdict.RIGHT_LARGER
        else:
            # Maximal pairings of finite sets always leave the same side over.
            raise AssertionError("pairings of {} and {} disagree".format(a, b))

        return Comparison(verdict, witnesses[0], len(witnesses))


def witness_problems(a, b, w):
    """
    Everything wrong with w as a maximal pairing between a and b.

    Returns:
        list(str): diagnostics; empty if w is valid

    """
    problems = []

    lefts = [left for left, _ in w.pairs] + list(w.remainder_left)
    rights = [right for _, right in w.pairs] + list(w.remainder_right)

    for side, labels, s in (('left', lefts, a), ('right', rights, b)):
        seen = set()
        for label in labels:
            if label not in s:
                problems.append("{} label {!r} is not in {}".format(side, label, s))
            elif label in seen:
                problems.append("{} label {!r} is used more than once".format(side, label))
            seen.add(label)
        missing = [label for label in s if label not in seen]
        if missing:
            problems.append("{} labels {} are neither paired nor left over"
                            .format(side, ", ".join(missing)))

    if w.remainder_left and w.remainder_right:
        problems.append("not maximal: both sides have a remainder")

    return problems


def check_witness(a, b, w):
    """
    True if w is a maximal pairing that partitions both a and b.

    Diagnostics for an invalid witness are logged as warnings; use
    :py:func:`witness_problems` to get them as values.
    """
    problems = witness_problems(a, b, w)
    for problem in problems:
        log.warning("invalid witness: %s", problem)
    return not problems


_default_comparator = FiniteComparator()


def all_maximal_pairings(a, b):
    """:py:meth:`FiniteComparator.all_maximal_pairings` with the default cap."""
    return _default_comparator.all_maximal_pairings(a, b)


def compare(a, b):
    """:py:meth:`FiniteComparator.compare` with the default cap."""
    return _default_comparator.compare(a, b)


def dumps_witness(w):
    """Render w in the line-oriented witness format."""
    lines = ["{}\t{}".format(left, right) for left, right in w.pairs]
    lines.append(_LEFT_REMAINDER)
    lines.extend(w.remainder_left)
    lines.append(_RIGHT_REMAINDER)
    lines.extend(w.remainder_right)
    return "\n".join(lines) + "\n"


def loads_witness(text, source=None):
    """
    Parse the line-oriented witness format.

    Raises:
        ParseError: on a malformed line.

    Returns:
        PairingWitness

    """
    pairs = []
    remainders = {_LEFT_REMAINDER: [], _RIGHT_REMAINDER: []}
    section = None

    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip('\r\n')
        if not line.strip() or line.lstrip().startswith('#'):
            continue

        if line.strip() in remainders:
            section = line.strip()
            continue

        if section is None:
            fields = line.split('\t')
            if len(fields) != 2 or not all(f.strip() for f in fields):
                raise ParseError("expected 'left<TAB>right', got {!r}".format(line),
                                 source, lineno)
            pairs.append((fields[0].strip(), fields[1].strip()))
        else:
            if '\t' in line:
                raise ParseError("pair {!r} after the {} section".format(line, section),
                                 source, lineno)
            remainders[section].append(line.strip())

    return PairingWitness(pairs, remainders[_LEFT_REMAINDER], remainders[_RIGHT_REMAINDER])


def load_witness(path):
    """Parse a witness file (UTF-8)."""
    with open(path, encoding='utf-8') as f:
        return loads_witness(f.read(), source=path)
