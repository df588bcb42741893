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
import itertools
import unittest

from ..core import Operation
from ..operations import (OperationSet, make_projection, identity, eval_op,
                          superpose, compose, block_embedding,
                          all_operations, preclone_closure,
                          is_closed_under_superposition, clone_closure,
                          clone_witness)
from ..exceptions import ArityMismatch, UniverseMismatch
from .generic_tests import ClosureOperatorTests
from ..testing import simulate_operation_set
from . import truth


logging.disable(logging.CRITICAL)


class TestProjections(unittest.TestCase):
    def test_unary_identity(self):
        self.assertEqual([0, 1], make_projection(2, 1, 1).table.tolist())
        self.assertEqual(truth.ID, identity(2))

    def test_last_argument_fastest(self):
        self.assertEqual([0, 1, 0, 1],
                         make_projection(2, 2, 2).table.tolist())

    def test_ternary_universe(self):
        self.assertEqual([0, 0, 0, 1, 1, 1, 2, 2, 2],
                         make_projection(3, 2, 1).table.tolist())

    def test_values(self):
        p = make_projection(3, 3, 2)
        for args in itertools.product(range(3), repeat=3):
            self.assertEqual(args[1], p(*args))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            make_projection(2, 2, 3)
        with self.assertRaises(ValueError):
            make_projection(2, 2, 0)


class TestEval(unittest.TestCase):
    def test_eval(self):
        self.assertEqual(1, eval_op(truth.AND, (1, 1)))
        self.assertEqual(0, eval_op(truth.ID, (0, )))
        self.assertEqual(1, eval_op(truth.NOT, (0, )))

    def test_wrong_length(self):
        with self.assertRaises(ArityMismatch):
            eval_op(truth.AND, (1, ))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            eval_op(truth.NOT, (2, ))


class TestSuperpose(unittest.TestCase):
    def test_neutral_outer(self):
        for f in [truth.AND, truth.NOT, truth.MAJORITY, truth.IMPLIES]:
            self.assertEqual(f, superpose(truth.ID, [f]))

    def test_neutral_inner(self):
        for f in [truth.AND, truth.NOT, truth.MAJORITY, truth.IMPLIES]:
            self.assertEqual(f, superpose(f, [truth.ID] * f.arity))

    def test_not_and(self):
        self.assertEqual(truth.NAND, superpose(truth.NOT, [truth.AND]))

    def test_ternary_and(self):
        self.assertEqual(truth.AND3,
                         superpose(truth.AND, [truth.AND, truth.ID]))
        self.assertEqual(truth.AND3,
                         superpose(truth.AND, [truth.ID, truth.AND]))

    def test_blocks(self):
        """Each inner operation reads its own block of arguments."""
        h = superpose(truth.IMPLIES, [truth.NOT, truth.XOR])
        self.assertEqual(3, h.arity)
        for a, b, c in itertools.product(range(2), repeat=3):
            self.assertEqual(truth.IMPLIES(truth.NOT(a), truth.XOR(b, c)),
                             h(a, b, c))

    def test_wrong_count(self):
        with self.assertRaises(ArityMismatch):
            superpose(truth.AND, [truth.ID])

    def test_universe_mismatch(self):
        with self.assertRaises(UniverseMismatch):
            superpose(truth.ID, [make_projection(3, 1, 1)])


class TestCompose(unittest.TestCase):
    def test_projections(self):
        self.assertEqual(truth.AND,
                         compose(truth.AND, [truth.X1_2, truth.X2_2]))

    def test_double_negation(self):
        self.assertEqual(truth.ID, compose(truth.NOT, [truth.NOT]))

    def test_nand(self):
        not_x1 = Operation(2, 2, [1, 1, 0, 0])
        not_x2 = Operation(2, 2, [1, 0, 1, 0])
        self.assertEqual(truth.NAND, compose(truth.OR, [not_x1, not_x2]))

    def test_arity_mismatch(self):
        with self.assertRaises(ArityMismatch):
            compose(truth.AND, [truth.ID, truth.X1_2])

    def test_block_embedding(self):
        g = block_embedding(truth.NOT, 1, 3)
        for a, b, c in itertools.product(range(2), repeat=3):
            self.assertEqual(1 - b, g(a, b, c))
        with self.assertRaises(ValueError):
            block_embedding(truth.AND, 2, 3)

    def test_superposition_is_composition_with_blocks(self):
        """f*(g1..gn) equals f composed with the block embeddings."""
        for n in (1, 2):
            for f in all_operations(2, n):
                for arities in itertools.product((1, 2), repeat=n):
                    if sum(arities) > 3:
                        continue
                    gs = [truth.XOR if m == 2 else truth.NOT for m in arities]
                    total = sum(arities)
                    offsets = [sum(arities[:i]) for i in range(n)]
                    embedded = [block_embedding(g, o, total)
                                for g, o in zip(gs, offsets)]
                    self.assertEqual(superpose(f, gs), compose(f, embedded))


class TestAxioms(unittest.TestCase):
    def test_neutral_element_exhaustive(self):
        """1*f = f and f*(1, ..., 1) = f for every table of arity <= 3."""
        for n in (1, 2, 3):
            for f in all_operations(2, n):
                self.assertEqual(f, superpose(truth.ID, [f]))
                self.assertEqual(f, superpose(f, [truth.ID] * n))

    def test_associativity_exhaustive(self):
        """(f*(g..))*(h..) = f*(g_i*(h block)) for every f, g and h of arity
        at most 2 on two elements.

        """
        unary = list(all_operations(2, 1))
        binary = list(all_operations(2, 2))
        hs_pool = unary + binary
        for f in unary + binary:
            for gs in itertools.product(unary + binary, repeat=f.arity):
                arities = [g.arity for g in gs]
                if sum(arities) > 2:
                    continue
                fg = superpose(f, gs)
                for hs in itertools.product(hs_pool, repeat=fg.arity):
                    expected = superpose(fg, hs)
                    inner = []
                    start = 0
                    for g in gs:
                        inner.append(superpose(g, hs[start:start + g.arity]))
                        start += g.arity
                    self.assertEqual(expected, superpose(f, inner))


class TestOperationSet(unittest.TestCase):
    def test_duplicates(self):
        ops = OperationSet(2, [truth.AND, Operation(2, 2, [0, 0, 0, 1])])
        self.assertEqual(1, len(ops))

    def test_of_arity_and_restrict(self):
        ops = truth.ops(truth.NOT, truth.AND, truth.AND3)
        self.assertEqual([truth.AND], ops.of_arity(2))
        self.assertEqual([1, 2, 3], ops.arities)
        self.assertEqual(truth.ops(truth.NOT, truth.AND), ops.restrict(2))

    def test_canonical_iteration(self):
        ops = truth.ops(truth.AND3, truth.NOT, truth.AND, truth.ID)
        self.assertEqual([truth.ID, truth.NOT, truth.AND, truth.AND3],
                         list(ops))

    def test_universe_mismatch(self):
        with self.assertRaises(UniverseMismatch):
            OperationSet(3, [truth.AND])


class TestPrecloneClosure(unittest.TestCase):
    def test_empty_set(self):
        self.assertEqual(truth.ops(truth.ID),
                         preclone_closure(truth.ops(), 3))

    def test_nand_has_no_unary_members(self):
        closure = preclone_closure(truth.ops(truth.NAND), 2)
        self.assertEqual([truth.ID], closure.of_arity(1))
        self.assertNotIn(truth.NOT, closure)

    def test_and(self):
        closure = preclone_closure(truth.ops(truth.AND), 3)
        self.assertIn(truth.AND3, closure)
        self.assertEqual(truth.ops(truth.ID, truth.AND, truth.AND3), closure)

    def test_not(self):
        closure = preclone_closure(truth.ops(truth.NOT), 2)
        self.assertEqual(truth.ops(truth.ID, truth.NOT), closure)

    def test_members_above_bound_are_dropped(self):
        closure = preclone_closure(truth.ops(truth.MAJORITY), 2)
        self.assertEqual(truth.ops(truth.ID), closure)

    def test_invalid_bound(self):
        with self.assertRaises(ValueError):
            preclone_closure(truth.ops(), 0)

    def test_truncation(self):
        """Closing at a high bound then truncating gives the low bound
        closure.

        """
        for seed in range(5):
            ops = simulate_operation_set(2, 2, 2, rng=seed)
            self.assertEqual(preclone_closure(ops, 2),
                             preclone_closure(ops, 3).restrict(2))


class TestPrecloneClosureLaws(ClosureOperatorTests, unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.samples = [
            truth.ops(),
            truth.ops(truth.NOT),
            truth.ops(truth.AND),
            truth.ops(truth.NOT, truth.XOR),
            truth.ops(truth.IMPLIES, truth.ZERO),
        ] + [simulate_operation_set(2, 2, 2, rng=seed) for seed in range(3)]

    def close(self, x):
        return preclone_closure(x, 2)

    def is_subset(self, x, y):
        return x <= y

    def join(self, x, y):
        return x.union(y)


class TestIsClosed(unittest.TestCase):
    def test_all_projections(self):
        projections = truth.ops(*[
            make_projection(2, n, i)
            for n in range(1, 4) for i in range(1, n + 1)
        ])
        self.assertTrue(is_closed_under_superposition(projections, 3))

    def test_negation(self):
        self.assertTrue(
            is_closed_under_superposition(truth.ops(truth.ID, truth.NOT), 1)
        )

    def test_missing_neutral_element(self):
        verdict = is_closed_under_superposition(truth.ops(truth.NAND), 2)
        self.assertFalse(verdict)
        self.assertEqual("missing neutral element",
                         verdict.witness["reason"])
        self.assertEqual(truth.ID, verdict.witness["operation"])

    def test_superposition_outside(self):
        verdict = is_closed_under_superposition(
            truth.ops(truth.ID, truth.AND), 3,
        )
        self.assertFalse(verdict)
        witness = verdict.witness
        self.assertEqual(witness["result"],
                         superpose(witness["outer"], witness["inner"]))
        self.assertEqual(truth.AND3, witness["result"])

    def test_closure_is_closed(self):
        for seed in range(5):
            ops = simulate_operation_set(2, 3, 2, rng=seed)
            self.assertTrue(
                is_closed_under_superposition(preclone_closure(ops, 2), 2)
            )


class TestClones(unittest.TestCase):
    def test_clone_of_nothing(self):
        clone = clone_closure(truth.ops(), 2)
        self.assertEqual(
            truth.ops(truth.ID, truth.X1_2, truth.X2_2), clone,
        )

    def test_clone_of_not(self):
        clone = clone_closure(truth.ops(truth.NOT), 2)
        self.assertEqual(2 + 4, len(clone))
        self.assertTrue(clone_witness(clone, 2))

    def test_clones_are_preclones(self):
        for generators in [truth.ops(truth.AND), truth.ops(truth.NOT),
                           truth.ops(truth.MAJORITY)]:
            clone = clone_closure(generators, 3)
            self.assertTrue(is_closed_under_superposition(clone, 3))

    def test_preclone_is_not_a_clone(self):
        closure = preclone_closure(truth.ops(truth.AND), 3)
        verdict = clone_witness(closure, 3)
        self.assertFalse(verdict)
        self.assertEqual("missing projection", verdict.witness["reason"])
        self.assertEqual(truth.X1_2, verdict.witness["operation"])

    def test_composition_witness(self):
        ops = truth.ops(truth.ID, truth.X1_2, truth.X2_2, truth.NAND)
        verdict = clone_witness(ops, 2)
        self.assertFalse(verdict)
        self.assertEqual("composition outside set", verdict.witness["reason"])
        self.assertNotIn(verdict.witness["result"], ops)


class TestAllOperations(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(4, len(list(all_operations(2, 1))))
        self.assertEqual(16, len(list(all_operations(2, 2))))
        self.assertEqual(27, len(list(all_operations(3, 1))))

    def test_lexicographic(self):
        tables = [f.table.tolist() for f in all_operations(2, 1)]
        self.assertEqual([[0, 0], [0, 1], [1, 0], [1, 1]], tables)
