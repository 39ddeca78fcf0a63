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
Command line entry point.

Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
1 on a domain error and 2 on a usage error.
"""
import argparse
import logging
import re
import sys

from . import bijections
from .diagonal import (anti_diagonal,
                       rationals_real_list,
                       render_prefix,
                       safe_anti_diagonal,
                       verify_escape)
from .diagonal import load as diagonal_load
from .enumerations import ENUMERATIONS
from .error import CountableException, NotInDomainError
from .finite_compare import (FiniteComparator,
                             FiniteSet,
                             dumps_witness,
                             load_witness,
                             witness_problems)
from .hotel.script import run_script
from .numbers import Rational, is_reduced, parse_fraction, parse_integer

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

DEFAULT_RATIONALS_DEPTH = 10

# options whose value may be a negative fraction such as -1/2
_NUMERIC_VALUE_OPTIONS = ('--index-of',)
_NEGATIVE_VALUE = re.compile(r'^-\d')

# name -> (forward, inverse, forward arity)
_BIJECTIONS = {
    'even': (bijections.to_even, bijections.from_even, 1),
    'whole': (bijections.to_whole, bijections.from_whole, 1),
    'int': (bijections.to_integer, bijections.from_integer, 1),
    'odd': (bijections.to_odd, bijections.from_odd, 1),
    'pair': (bijections.pair_index, bijections.unpair, 2),
}


class UsageError(Exception):
    """Bad invocation detected after argument parsing."""


def _out(s):
    sys.stdout.write(s + '\n')


def _err(s):
    sys.stderr.write('countable: error: {}\n'.format(s))


def read_config_file(path):
    """Read a ``key=value`` properties file and return a dict."""
    conf = {}

    with open(path, encoding='utf-8') as f:
        for line in f:
            line = line.strip()

            if line.startswith('#') or len(line) == 0:
                continue

            fi = line.find('=')
            if fi < 1:
                raise UsageError('%s: invalid line, no key=value pair: %s' % (path, line))

            conf[line[:fi].strip()] = line[fi + 1:].strip()

    return conf


def _read_text(path):
    if path == '-':
        return sys.stdin.read(), '<stdin>'
    with open(path, encoding='utf-8') as f:
        return f.read(), path


def _cmd_bij(args):
    forward, inverse, arity = _BIJECTIONS[args.rule]
    values = [parse_integer(v) for v in args.values]

    if args.rule == 'pair' and not args.inverse:
        if len(values) != arity:
            raise UsageError("bij pair takes a row and a column")
        _out(str(forward(bijections.GridPosition(*values))))
        return EXIT_OK

    fn = inverse if args.inverse else forward
    for v in values:
        _out(str(fn(v)))
    return EXIT_OK


def _parse_enum_value(name, text):
    if name in ('q+', 'q'):
        p, q = parse_fraction(text)
        if not is_reduced(p, q):
            raise NotInDomainError("{}/{} is not a reduced fraction; the walk skips it".format(p, q))
        return Rational(p, q)
    if name == 'grid':
        fields = text.strip().strip('()').split(',')
        if len(fields) != 2:
            raise NotInDomainError("{!r} is not a grid cell 'row,col'".format(text))
        return bijections.GridPosition(parse_integer(fields[0]), parse_integer(fields[1]))
    return parse_integer(text)


def _cmd_enum(args):
    e = ENUMERATIONS[args.name]()

    if args.take is not None:
        for n in range(1, args.take + 1):
            _out("{}\t{}".format(n, e.at(n)))
        return EXIT_OK

    _out(str(e.index_of(_parse_enum_value(args.name, args.index_of))))
    return EXIT_OK


def _compare_conf(args):
    conf = {}
    if args.config is not None:
        conf.update(read_config_file(args.config))
    for prop in args.extra_conf:
        key, sep, value = prop.partition('=')
        if not sep or not key:
            raise UsageError("-X expects key=value, not {!r}".format(prop))
        conf[key.strip()] = value.strip()
    if args.max_size is not None:
        conf['max.set.size'] = args.max_size
    return conf


def _cmd_compare(args):
    try:
        comparator = FiniteComparator(_compare_conf(args))
    except (TypeError, ValueError) as e:
        raise UsageError(str(e))

    left = FiniteSet.parse(args.left)
    right = FiniteSet.parse(args.right)

    if args.check is not None:
        problems = witness_problems(left, right, load_witness(args.check))
        for problem in problems:
            _err(problem)
        _out("invalid" if problems else "valid")
        return EXIT_DOMAIN if problems else EXIT_OK

    result = comparator.compare(left, right)
    _out(str(result.verdict))
    _out("pairings\t{}".format(result.examined))

    if args.witnesses:
        for k, w in enumerate(comparator.all_maximal_pairings(left, right), 1):
            _out("# witness {}".format(k))
            sys.stdout.write(dumps_witness(w))
    else:
        sys.stdout.write(dumps_witness(result.witness))
    return EXIT_OK


def _cmd_hotel(args):
    text, source = _read_text(args.script)
    for query, answer in run_script(text.splitlines(), source=source):
        _out("{} -> {}".format(query, answer))
    return EXIT_OK


def _cmd_diagonal(args):
    if args.rationals == (args.file is not None):
        raise UsageError("diagonal needs either a stream file or --rationals")

    if args.rationals:
        real_list = rationals_real_list()
        depth = args.depth if args.depth is not None else DEFAULT_RATIONALS_DEPTH
    else:
        text, source = _read_text(args.file)
        real_list = diagonal_load.loads(text, source=source)
        depth = args.depth if args.depth is not None else real_list.length
        if depth == 0:
            raise UsageError("{} lists no reals".format(source))

    candidate = safe_anti_diagonal(real_list) if args.safe else anti_diagonal(real_list)
    _out(render_prefix(candidate, depth))
    _out("escape\t{}".format('true' if verify_escape(real_list, candidate, depth) else 'false'))
    return EXIT_OK


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _non_negative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must not be negative")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog='countable',
        description='Constructive countability toolkit: bijections, enumerations, '
                    'finite pairings, Hilbert\'s hotel and diagonalization.')
    parser.add_argument('--debug', action='store_true', help='log debug output to stderr')
    verbs = parser.add_subparsers(dest='verb', metavar='VERB')
    verbs.required = True

    bij = verbs.add_parser('bij', help='evaluate a pairing rule',
                           description='Evaluate a pairing rule between N and another set.')
    bij.add_argument('rule', choices=sorted(_BIJECTIONS))
    bij.add_argument('values', nargs='+', metavar='VALUE')
    bij.add_argument('--inverse', action='store_true', help='evaluate the inverse rule')
    bij.set_defaults(func=_cmd_bij)

    enum = verbs.add_parser('enum', help='list or search an enumeration',
                            description='List a prefix of an enumeration or find an index.')
    enum.add_argument('name', choices=sorted(ENUMERATIONS))
    mode = enum.add_mutually_exclusive_group(required=True)
    mode.add_argument('--take', type=_non_negative_int, metavar='K', help='print the first K values')
    mode.add_argument('--index-of', metavar='VALUE', help='print the index of VALUE')
    enum.set_defaults(func=_cmd_enum)

    compare = verbs.add_parser('compare', help='compare two finite sets',
                               description='Compare two finite sets by examining every maximal pairing.')
    compare.add_argument('--left', required=True, metavar='LABELS', help='comma separated labels')
    compare.add_argument('--right', required=True, metavar='LABELS', help='comma separated labels')
    compare.add_argument('--witnesses', action='store_true', help='print every maximal pairing')
    compare.add_argument('--check', metavar='FILE', help='validate a witness file instead')
    compare.add_argument('--max-size', type=_non_negative_int, metavar='N',
                         help='largest set accepted, 0 for no limit (max.set.size)')
    compare.add_argument('--config', metavar='FILE', help='key=value properties file')
    compare.add_argument('-X', dest='extra_conf', action='append', default=[], metavar='KEY=VALUE',
                         help='configuration property')
    compare.set_defaults(func=_cmd_compare)

    hotel = verbs.add_parser('hotel', help='run a Hilbert\'s hotel script',
                             description='Run a Hilbert\'s hotel script.')
    hotel_verbs = hotel.add_subparsers(dest='hotel_verb', metavar='ACTION')
    hotel_verbs.required = True
    run = hotel_verbs.add_parser('run', help='replay a script and answer its queries')
    run.add_argument('script', metavar='SCRIPT', help="script file, '-' for stdin")
    run.set_defaults(func=_cmd_hotel)

    diagonal = verbs.add_parser('diagonal', help='diagonalize a list of reals',
                                description='Build the anti-diagonal of a list of reals and verify it escapes.')
    diagonal.add_argument('file', nargs='?', metavar='FILE', help="stream file, '-' for stdin")
    diagonal.add_argument('--depth', type=_positive_int, metavar='N', help='number of places to build')
    diagonal.add_argument('--safe', action='store_true', help='emit only digits 4 and 5')
    diagonal.add_argument('--rationals', action='store_true',
                          help='diagonalize the fractional parts of the enumerated positive rationals')
    diagonal.set_defaults(func=_cmd_diagonal)

    return parser


def _attach_negative_values(argv):
    """
    Rewrite ``--index-of -1/2`` as ``--index-of=-1/2``.

    argparse only takes ``-1`` and ``-1.5`` for negative numbers and reads
    anything else starting with a dash as an option.
    """
    args = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in _NUMERIC_VALUE_OPTIONS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            args.append("{}={}".format(arg, argv[i + 1]))
            i += 2
            continue
        args.append(arg)
        i += 1
    return args


def run(argv=None):
    """
    Run one command.

    Args:
        argv (list of str, optional): arguments without the program name.
            Defaults to ``sys.argv[1:]``.

    Returns:
        int: exit status

    """
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.debug:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG,
                            format='%% %(asctime)s %(levelname)s: %(message)s',
                            datefmt='%H:%M:%S')

    try:
        return args.func(args)
    except CountableException as e:
        _err(str(e))
        return EXIT_DOMAIN
    except UsageError as e:
        parser.print_usage(sys.stderr)
        _err(str(e))
        return EXIT_USAGE
    except OSError as e:
        _err(str(e))
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
