# This file is part of preclones.
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The preclones developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.


import logging
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from ..core import Operation
from ..operations import superpose
from ..testing import simulate_operation
from . import truth


logging.disable(logging.CRITICAL)


def operations(k=2, max_arity=3):
    return st.integers(1, max_arity).flatmap(
        lambda n: st.lists(
            st.integers(0, k - 1), min_size=k ** n, max_size=k ** n,
        ).map(lambda table: Operation(k, n, table))
    )


def _associativity_holds(f, gs, hs):
    left = superpose(superpose(f, gs), hs)
    inner = []
    start = 0
    for g in gs:
        inner.append(superpose(g, hs[start:start + g.arity]))
        start += g.arity
    return left == superpose(f, inner)


class TestAxiomsProperties(unittest.TestCase):
    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_associativity(self, data):
        f = data.draw(operations(max_arity=3))
        gs = data.draw(st.lists(operations(max_arity=1), min_size=f.arity,
                                max_size=f.arity))
        if f.arity == 1:
            gs = [data.draw(operations(max_arity=3))]
        total = sum(g.arity for g in gs)
        hs = data.draw(st.lists(operations(max_arity=1), min_size=total,
                                max_size=total))
        self.assertTrue(_associativity_holds(f, gs, hs))

    @settings(max_examples=200, deadline=None)
    @given(operations(k=3, max_arity=2))
    def test_neutral_element(self, f):
        one = Operation(3, 1, [0, 1, 2])
        self.assertEqual(f, superpose(one, [f]))
        self.assertEqual(f, superpose(f, [one] * f.arity))

    def test_associativity_random_triples(self):
        """Ten thousand random triples with arities at most 3."""
        rng = np.random.default_rng(20170)
        for _ in range(10000):
            n = int(rng.integers(1, 4))
            # Inner arities with a total of at most 3.
            budget = 3
            arities = []
            for i in range(n):
                m = int(rng.integers(1, budget - (n - i - 1) + 1))
                arities.append(m)
                budget -= m
            gs = [simulate_operation(2, m, rng) for m in arities]
            f = simulate_operation(2, n, rng)
            hs = [simulate_operation(2, int(rng.integers(1, 3)), rng)
                  for _ in range(sum(arities))]
            self.assertTrue(_associativity_holds(f, gs, hs))

    def test_associativity_with_known_operations(self):
        gs = [truth.AND, truth.NOT]
        hs = [truth.XOR, truth.ID, truth.NOT]
        self.assertTrue(_associativity_holds(truth.IMPLIES, gs, hs))
