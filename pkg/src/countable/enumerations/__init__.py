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
Enumerations: bijections between the positive indices 1, 2, 3, ... and a
countable domain, evaluable in both directions, plus the combinators that
build new enumerations out of old ones.

The canonical enumerations are listed below together with the names the
command line uses for them.

.. list-table::
    :header-rows: 1

    * - Name
      - Factory
      - Prefix
    * - ``n``
      - naturals
      - 1, 2, 3, 4, ...
    * - ``e``
      - evens
      - 2, 4, 6, 8, ...
    * - ``odd``
      - odds
      - 1, 3, 5, 7, ...
    * - ``n0``
      - wholes
      - 0, 1, 2, 3, ...
    * - ``z``
      - integers
      - 0, 1, -1, 2, -2, ...
    * - ``grid``
      - grid
      - (1,1), (1,2), (2,1), (3,1), ...
    * - ``q+``
      - rationals_positive
      - 1/1, 1/2, 2/1, 3/1, 1/3, ...
    * - ``q``
      - rationals_all
      - 0/1, 1/1, -1/1, 1/2, -1/2, ...

"""
from .enumeration import (Enumeration,
                          filter_reindex,
                          interleave,
                          prepend_finite,
                          product,
                          relabel)
from .canonical import (ENUMERATIONS,
                        evens,
                        grid,
                        integers,
                        naturals,
                        odds,
                        prefix_witness,
                        rationals_all,
                        rationals_positive,
                        wholes)

__all__ = ['ENUMERATIONS',
           'Enumeration',
           'evens',
           'filter_reindex',
           'grid',
           'integers',
           'interleave',
           'naturals',
           'odds',
           'prefix_witness',
           'prepend_finite',
           'product',
           'rationals_all',
           'rationals_positive',
           'relabel',
           'wholes']
