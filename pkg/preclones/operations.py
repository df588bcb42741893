"""Operations, superposition and preclone closures."""

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


import itertools
import logging as _logging

import numpy as np

from . import config
from . import logging
from .core import Operation, Verdict, as_universe
from .exceptions import ArityMismatch, check_cap


__all__ = ["make_projection", "identity", "eval_op", "superpose", "compose",
           "block_embedding", "all_operations", "OperationSet",
           "preclone_closure", "is_closed_under_superposition",
           "clone_closure", "clone_witness"]


logger = _logging.getLogger(__name__)


def make_projection(universe, n, i):
    """The n-ary projection on the i-th argument (1 based)."""
    universe = as_universe(universe)
    if n < 1 or not 1 <= i <= n:
        raise ValueError("Invalid projection x{} of arity {}.".format(i, n))

    k = universe.size
    args = np.unravel_index(np.arange(k ** n), (k, ) * n)
    return Operation._make(universe, n, args[i - 1])


def identity(universe):
    """The neutral element x1 of arity 1."""
    return make_projection(universe, 1, 1)


def eval_op(f, args):
    return f(*args)


def _check_arguments(f, gs):
    if len(gs) != f.arity:
        raise ArityMismatch(
            "{} expects {} argument(s), got {}.".format(f, f.arity, len(gs))
        )
    for g in gs:
        f.universe.check_same(g.universe)


def superpose(f, gs):
    """The superposition f*(g1, ..., gn).

    Each g_i reads its own consecutive block of arguments: the result has
    arity m1 + ... + mn.

    """
    gs = list(gs)
    _check_arguments(f, gs)

    k = f.universe.size
    total = sum(g.arity for g in gs)
    check_cap("superposition table", k ** total, config.MAX_TABLE_ENTRIES)

    args = np.unravel_index(np.arange(k ** total), (k, ) * total)
    inner = []
    start = 0
    for g in gs:
        block = args[start:start + g.arity]
        inner.append(g.table[np.ravel_multi_index(block, g.shape)])
        start += g.arity

    table = f.table[np.ravel_multi_index(tuple(inner), f.shape)]
    return Operation._make(f.universe, total, table)


def compose(f, gs):
    """The composition f(g1, ..., gn), all g_i sharing the same arguments."""
    gs = list(gs)
    _check_arguments(f, gs)

    arities = {g.arity for g in gs}
    if len(arities) != 1:
        raise ArityMismatch("All inner operations of a composition must "
                            "share the same arity.")

    # The tables of the g_i are already indexed by the common arguments.
    table = f.table[
        np.ravel_multi_index(tuple(g.table for g in gs), f.shape)
    ]
    return Operation._make(f.universe, arities.pop(), table)


def block_embedding(g, offset, total):
    """Reads g on arguments offset+1..offset+m of a total-ary operation."""
    if offset < 0 or offset + g.arity > total:
        raise ValueError("Block {}..{} doesn't fit in arity {}.".format(
            offset + 1, offset + g.arity, total,
        ))

    return compose(g, [
        make_projection(g.universe, total, offset + j + 1)
        for j in range(g.arity)
    ])


def all_operations(universe, n):
    """Iterate over every n-ary operation in lexicographic table order."""
    universe = as_universe(universe)
    k = universe.size
    check_cap("{}-ary operations".format(n), k ** (k ** n), config.MAX_TABLES)

    for table in itertools.product(range(k), repeat=k ** n):
        yield Operation._make(universe, n, np.array(table, dtype=np.intp))


class OperationSet(object):
    """A finite set of operations over a single universe."""
    __slots__ = ("universe", "members", "_by_arity")

    def __init__(self, universe, members=()):
        self.universe = as_universe(universe)
        members = frozenset(members)
        for f in members:
            self.universe.check_same(f.universe)
        self.members = members

        by_arity = {}
        for f in sorted(members):
            by_arity.setdefault(f.arity, []).append(f)
        self._by_arity = by_arity

    @property
    def arities(self):
        return sorted(self._by_arity)

    @property
    def max_arity(self):
        return max(self._by_arity) if self._by_arity else 0

    def of_arity(self, n):
        return list(self._by_arity.get(n, []))

    def restrict(self, max_arity):
        return OperationSet(
            self.universe, (f for f in self.members if f.arity <= max_arity),
        )

    def union(self, other):
        self.universe.check_same(other.universe)
        return OperationSet(self.universe, self.members | other.members)

    def __contains__(self, f):
        return f in self.members

    def __iter__(self):
        for n in sorted(self._by_arity):
            yield from self._by_arity[n]

    def __len__(self):
        return len(self.members)

    def __le__(self, other):
        return self.members <= other.members

    def __eq__(self, other):
        if not isinstance(other, OperationSet):
            return NotImplemented
        return (self.universe == other.universe and
                self.members == other.members)

    def __hash__(self):
        return hash((self.universe, self.members))

    def __repr__(self):
        return "<OperationSet k={} |{}| arities {}>".format(
            self.universe.size, len(self), self.arities,
        )


def _arity_splits(n, available, max_total):
    """Tuples (m1, ..., mn) of available arities with sum at most max_total."""
    for split in itertools.product(available, repeat=n):
        if sum(split) <= max_total:
            yield split


def _superpositions(by_arity, max_arity, frontier=None):
    """Iterate over (f, gs) with f*(gs) of arity at most max_arity.

    When a frontier is given, only combinations involving one of its
    elements are produced.

    """
    available = sorted(by_arity)
    for n in available:
        if n > max_arity:
            continue
        for f in by_arity[n]:
            for split in _arity_splits(n, available, max_arity):
                for gs in itertools.product(*[by_arity[m] for m in split]):
                    if frontier is not None and f not in frontier and \
                       not any(g in frontier for g in gs):
                        continue
                    yield f, gs


def _group_by_arity(ops):
    by_arity = {}
    for f in sorted(ops):
        by_arity.setdefault(f.arity, []).append(f)
    return by_arity


def preclone_closure(ops, max_arity):
    """The members of arity at most max_arity of the preclone generated by
    ops.

    Superposition never lowers arities, so closing the truncated set gives
    exactly the truncation of the full preclone.

    """
    if max_arity < 1:
        raise ValueError("The arity bound must be at least 1.")
    check_cap("closure arity", max_arity, config.MAX_ARITY)

    universe = ops.universe
    known = {f for f in ops if f.arity <= max_arity}
    known.add(identity(universe))

    frontier = set(known)
    round_number = 0
    while frontier:
        round_number += 1
        found = set()
        by_arity = _group_by_arity(known)
        for f, gs in _superpositions(by_arity, max_arity, frontier):
            h = superpose(f, gs)
            if h not in known:
                found.add(h)

        known |= found
        frontier = found
        logging.closure_round("preclone closure", round_number, len(found),
                              len(known))

    return OperationSet(universe, known)


def is_closed_under_superposition(ops, max_arity):
    """Checks that ops, up to max_arity, holds x1 and its superpositions.

    The witness is a dict describing the first failure found.

    """
    universe = ops.universe
    one = identity(universe)
    if one not in ops:
        return Verdict(False, {"reason": "missing neutral element",
                               "operation": one})

    by_arity = _group_by_arity(f for f in ops if f.arity <= max_arity)
    for f, gs in _superpositions(by_arity, max_arity):
        h = superpose(f, gs)
        if h not in ops:
            return Verdict(False, {"reason": "superposition outside set",
                                   "outer": f, "inner": list(gs),
                                   "result": h})

    return Verdict(True)


def clone_closure(ops, max_arity):
    """The members of arity at most max_arity of the clone generated by
    ops.

    Every m-ary member is reached from the m-ary projections by composing
    basic operations, so each arity is closed on its own.

    """
    if max_arity < 1:
        raise ValueError("The arity bound must be at least 1.")
    check_cap("closure arity", max_arity, config.MAX_ARITY)

    universe = ops.universe
    generators = [f for f in ops if f.arity <= max_arity]
    ignored = len(ops) - len(generators)
    if ignored:
        logger.warning("Ignoring {} operation(s) of arity over {}".format(
            ignored, max_arity,
        ))

    members = set()
    for m in range(1, max_arity + 1):
        known = {make_projection(universe, m, i) for i in range(1, m + 1)}
        frontier = set(known)
        round_number = 0
        while frontier:
            round_number += 1
            current = sorted(known)
            found = set()
            for f in generators:
                for gs in itertools.product(current, repeat=f.arity):
                    if not any(g in frontier for g in gs):
                        continue
                    h = compose(f, gs)
                    if h not in known:
                        found.add(h)
            known |= found
            frontier = found
            logging.closure_round("clone closure (arity {})".format(m),
                                  round_number, len(found), len(known))
        members |= known

    return OperationSet(universe, members)


def clone_witness(ops, max_arity):
    """Checks that ops, up to max_arity, is closed as a clone.

    The first missing projection is reported before any composition.

    """
    universe = ops.universe
    for n in range(1, max_arity + 1):
        for i in range(1, n + 1):
            p = make_projection(universe, n, i)
            if p not in ops:
                return Verdict(False, {"reason": "missing projection",
                                       "operation": p})

    by_arity = _group_by_arity(f for f in ops if f.arity <= max_arity)
    for n in sorted(by_arity):
        for f in by_arity[n]:
            for m in sorted(by_arity):
                for gs in itertools.product(by_arity[m], repeat=n):
                    h = compose(f, gs)
                    if h not in ops:
                        return Verdict(False, {
                            "reason": "composition outside set",
                            "outer": f, "inner": list(gs), "result": h,
                        })

    return Verdict(True)
