"""The preservation relation and the two sides of the Galois connection."""

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
import multiprocessing
from functools import partial

import numpy as np

from . import config
from . import logging
from .core import Matrix, Verdict, as_universe
from .matrices import MatrixCollection, all_matrices, trivial_size
from .operations import OperationSet, all_operations, preclone_closure
from .exceptions import UniverseMismatch, check_cap
from .formats import to_jsonable


__all__ = ["WindowViolation", "apply_to_window", "preserves", "pol",
           "invariants", "inv_closure", "invariant_family",
           "separating_matrix", "separating_collection",
           "separating_family", "CharacterizationReport",
           "characterize_check"]


logger = _logging.getLogger(__name__)


class WindowViolation(object):
    """A member whose window image falls outside the collection."""
    __slots__ = ("matrix", "window_start", "image")

    def __init__(self, matrix, window_start, image):
        self.matrix = matrix
        self.window_start = window_start
        self.image = image

    def __eq__(self, other):
        if not isinstance(other, WindowViolation):
            return NotImplemented
        return (self.matrix == other.matrix and
                self.window_start == other.window_start)

    def to_dict(self):
        return {"matrix": to_jsonable(self.matrix),
                "window_start": self.window_start,
                "image": to_jsonable(self.image)}

    def __repr__(self):
        return "<WindowViolation {!r} at {} gives {!r}>".format(
            self.matrix, self.window_start, self.image,
        )


def apply_to_window(f, matrix, start):
    """Replaces columns start..start+n-1 of the matrix by f applied to their
    rows.

    """
    n = f.arity
    if start < 0 or start + n > matrix.cols:
        raise ValueError(
            "Window {}..{} is out of range for {} column(s).".format(
                start, start + n - 1, matrix.cols,
            )
        )
    f.universe.check_same(matrix.universe)

    window = matrix.columns[start:start + n]
    image = tuple(f._lookup(row) for row in zip(*window))
    return Matrix._make(
        matrix.universe, matrix.rows,
        matrix.columns[:start] + (image, ) + matrix.columns[start + n:],
    )


def _first_violation(f, collection):
    n = f.arity
    members = collection.matrices
    for matrix in collection:
        for start in range(matrix.cols - n + 1):
            image = apply_to_window(f, matrix, start)
            if image not in members:
                return WindowViolation(matrix, start, image)
    return None


def preserves(f, collection):
    if f.universe != collection.universe:
        raise UniverseMismatch("{} and {} have different universes.".format(
            f, collection,
        ))

    violation = _first_violation(f, collection)
    if violation is None:
        return Verdict(True)
    return Verdict(False, violation)


def _preserves_all(f, collections):
    return all(_first_violation(f, c) is None for c in collections)


def pol(collections, max_arity, universe=None, jobs=1):
    """Every operation of arity at most max_arity preserving all the
    collections.

    """
    collections = list(collections)
    if universe is None:
        if len(collections) == 0:
            raise ValueError("A universe is needed when there is no "
                             "collection.")
        universe = collections[0].universe
    universe = as_universe(universe)
    for collection in collections:
        if collection.universe != universe:
            raise UniverseMismatch("{} is not over {}.".format(collection,
                                                              universe))

    k = universe.size
    check_cap("operations to test",
              sum(k ** (k ** n) for n in range(1, max_arity + 1)),
              config.MAX_TABLES)

    # Small collections first, they are the cheapest to refute.
    collections.sort(key=len)

    candidates = itertools.chain.from_iterable(
        all_operations(universe, n) for n in range(1, max_arity + 1)
    )
    if jobs > 1:
        candidates = list(candidates)
        with multiprocessing.Pool(processes=jobs) as pool:
            flags = pool.map(
                partial(_preserves_all, collections=collections),
                candidates,
                chunksize=max(1, len(candidates) // (4 * jobs)),
            )
        members = [f for f, keep in zip(candidates, flags) if keep]
    else:
        members = [f for f in candidates if _preserves_all(f, collections)]

    return OperationSet(universe, members)


def invariants(ops, pool):
    """The collections of the pool preserved by every operation of ops."""
    return [
        collection for collection in pool
        if all(_first_violation(f, collection) is None for f in ops)
    ]


def _close_matrices(firing, seed):
    known = set(seed)
    stack = sorted(known, key=Matrix.sort_key)
    while stack:
        matrix = stack.pop()
        for f in firing:
            for start in range(matrix.cols - f.arity + 1):
                image = apply_to_window(f, matrix, start)
                if image not in known:
                    known.add(image)
                    stack.append(image)
    return known


def inv_closure(ops, collection):
    """The smallest superset of the collection preserved by ops."""
    ops.universe.check_same(collection.universe)
    firing = [f for f in ops if f.arity <= collection.breadth_bound]
    return MatrixCollection(
        collection.universe, collection.arity, collection.breadth_bound,
        _close_matrices(firing, collection.matrices),
    )


def _closed_sets(ground, close):
    """The closed sets of a closure operator on ground, in lectic order."""
    n = len(ground)
    position = {g: i for i, g in enumerate(ground)}

    current = close(frozenset())
    yield current
    while len(current) < n:
        for i in reversed(range(n)):
            g = ground[i]
            if g in current:
                continue
            head = frozenset(x for x in current if position[x] < i)
            candidate = close(head | {g})
            if all(position[x] >= i for x in candidate - head):
                current = candidate
                break
        yield current


def invariant_family(ops, universe, max_arity, breadth):
    """Every collection of arity at most max_arity and breadth at most
    breadth preserved by ops.

    """
    universe = as_universe(universe)
    ops.universe.check_same(universe)
    firing = [f for f in ops if f.arity <= breadth]
    check_cap("breadth", breadth, config.MAX_BREADTH)

    family = []
    for m in range(1, max_arity + 1):
        check_cap("trivial collection",
                  trivial_size(universe.size, m, breadth),
                  config.MAX_COLLECTION_SIZE)
        ground = list(all_matrices(universe, m, breadth))

        def close(matrices):
            return frozenset(_close_matrices(firing, matrices))

        for closed in _closed_sets(ground, close):
            family.append(MatrixCollection(universe, m, breadth, closed))
            check_cap("invariant family", len(family), config.MAX_FAMILY)

    return family


def separating_matrix(universe, m):
    """The k^m x m matrix whose rows are all m-tuples in lexicographic
    order.

    """
    universe = as_universe(universe)
    return Matrix.from_rows(universe, universe.tuples(m))


def _compositions(m):
    """Ordered partitions of m into positive parts."""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in _compositions(m - first):
            yield (first, ) + rest


def _separating_collection(closure, g):
    universe = closure.universe
    k = universe.size
    m = g.arity
    args = np.unravel_index(np.arange(k ** m), (k, ) * m)

    # Column produced by each candidate block operation on each block.
    block_columns = {}
    for start in range(m):
        for h in closure:
            if start + h.arity > m:
                continue
            values = h.table[np.ravel_multi_index(
                args[start:start + h.arity], h.shape,
            )]
            block_columns.setdefault((start, h.arity), []).append(
                tuple(values.tolist())
            )

    matrices = set()
    for blocks in _compositions(m):
        starts = np.cumsum((0, ) + blocks[:-1]).tolist()
        choices = [block_columns.get((s, b), [])
                   for s, b in zip(starts, blocks)]
        for columns in itertools.product(*choices):
            matrices.add(Matrix._make(universe, k ** m, tuple(columns)))

    collection = MatrixCollection(universe, k ** m, m, matrices)
    image = Matrix._make(universe, k ** m, (tuple(g.table.tolist()), ))
    if image in collection.matrices:
        logging.not_separable(g)
        return None
    return collection


def separating_collection(ops, g):
    """A collection preserved by the preclone generated by ops but not by g.

    Returns None when g belongs to the preclone closure of ops.

    """
    ops.universe.check_same(g.universe)
    return _separating_collection(preclone_closure(ops, g.arity), g)


def separating_family(ops, max_arity):
    """Separating collections for every operation of arity at most
    max_arity outside the preclone closure of ops.

    """
    closure = preclone_closure(ops, max_arity)
    family = []
    for n in range(1, max_arity + 1):
        restricted = closure.restrict(n)
        for g in all_operations(ops.universe, n):
            if g in closure:
                continue
            family.append(_separating_collection(restricted, g))
    return family


class CharacterizationReport(object):
    __slots__ = ("only_in_pol", "only_in_closure")

    def __init__(self, only_in_pol, only_in_closure):
        self.only_in_pol = sorted(only_in_pol)
        self.only_in_closure = sorted(only_in_closure)

    @property
    def equal(self):
        return not self.only_in_pol and not self.only_in_closure

    def to_dict(self):
        return {
            "equal": self.equal,
            "only_in_pol": to_jsonable(self.only_in_pol),
            "only_in_closure": to_jsonable(self.only_in_closure),
        }


def characterize_check(ops, collections, max_arity, jobs=1):
    """Compares pol(collections) with the preclone closure of ops."""
    left = pol(collections, max_arity, universe=ops.universe, jobs=jobs)
    right = preclone_closure(ops, max_arity)
    return CharacterizationReport(left.members - right.members,
                                  right.members - left.members)
