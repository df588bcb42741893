"""Matrix collections and their basic constructions."""

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

from . import config
from .core import Matrix, as_universe
from .exceptions import (ArityMismatch, InvalidMatrix, UniverseMismatch,
                         check_cap)


__all__ = ["MatrixCollection", "trivial_size", "all_matrices",
           "make_trivial", "make_empty", "make_equality", "breadth_restrict",
           "union", "intersect", "right_quotient", "left_quotient",
           "membership"]


class MatrixCollection(object):
    """A set of matrices with the same number of rows (the arity).

    The breadth bound is the largest number of columns the collection was
    built for. Equality and hashing only look at the matrices: two
    collections computed at different bounds are equal when they hold the
    same matrices.

    """
    __slots__ = ("universe", "arity", "breadth_bound", "matrices", "_hash")

    def __init__(self, universe, arity, breadth_bound, matrices=()):
        self.universe = as_universe(universe)
        if arity < 1:
            raise InvalidMatrix("A collection needs an arity of at least 1.")
        if breadth_bound < 0:
            raise InvalidMatrix("The breadth bound can't be negative.")
        self.arity = arity
        self.breadth_bound = breadth_bound

        matrices = frozenset(matrices)
        for matrix in matrices:
            if not isinstance(matrix, Matrix):
                raise InvalidMatrix("{!r}: not a matrix".format(matrix))
            self.universe.check_same(matrix.universe)
            if matrix.rows != arity:
                raise InvalidMatrix(
                    "{!r} has {} rows, expected {}.".format(
                        matrix, matrix.rows, arity,
                    )
                )
            if matrix.cols > breadth_bound:
                raise InvalidMatrix(
                    "{!r} is wider than the breadth bound {}.".format(
                        matrix, breadth_bound,
                    )
                )
        self.matrices = matrices
        self._hash = hash((self.universe, arity, matrices))

    @property
    def breadth(self):
        """The largest number of columns of a member (0 when empty)."""
        return max((m.cols for m in self.matrices), default=0)

    def with_bound(self, breadth_bound):
        return MatrixCollection(self.universe, self.arity, breadth_bound,
                                self.matrices)

    def sort_key(self):
        return (self.arity, len(self.matrices),
                tuple(m.sort_key() for m in self))

    def __contains__(self, matrix):
        return matrix in self.matrices

    def __iter__(self):
        return iter(sorted(self.matrices, key=Matrix.sort_key))

    def __len__(self):
        return len(self.matrices)

    def __le__(self, other):
        return self.matrices <= other.matrices

    def __eq__(self, other):
        if not isinstance(other, MatrixCollection):
            return NotImplemented
        return (self.universe == other.universe and
                self.arity == other.arity and
                self.matrices == other.matrices)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "<MatrixCollection k={} m={} B={} |{}|>".format(
            self.universe.size, self.arity, self.breadth_bound, len(self),
        )


def trivial_size(k, m, p):
    """Number of m-row matrices over k elements with at most p columns."""
    return sum(k ** (m * q) for q in range(p + 1))


def all_matrices(universe, m, p):
    """Iterate over every m-row matrix with at most p columns, by width."""
    universe = as_universe(universe)
    check_cap("breadth", p, config.MAX_BREADTH)
    columns = list(universe.tuples(m))
    for q in range(p + 1):
        for chosen in itertools.product(columns, repeat=q):
            yield Matrix._make(universe, m, chosen)


def make_trivial(universe, m, p):
    """Every m-row matrix with at most p columns."""
    universe = as_universe(universe)
    check_cap("breadth", p, config.MAX_BREADTH)
    check_cap("trivial collection", trivial_size(universe.size, m, p),
              config.MAX_COLLECTION_SIZE)
    return MatrixCollection(universe, m, p, all_matrices(universe, m, p))


def make_empty(universe, m):
    return MatrixCollection(universe, m, 0)


def make_equality(universe, breadth_bound):
    """Two-row matrices whose rows are equal (the 0-column matrix included)."""
    universe = as_universe(universe)
    columns = [(a, a) for a in universe.elements]
    check_cap("breadth", breadth_bound, config.MAX_BREADTH)
    check_cap("equality collection",
              sum(universe.size ** q for q in range(breadth_bound + 1)),
              config.MAX_COLLECTION_SIZE)

    matrices = []
    for q in range(breadth_bound + 1):
        for chosen in itertools.product(columns, repeat=q):
            matrices.append(Matrix._make(universe, 2, chosen))
    return MatrixCollection(universe, 2, breadth_bound, matrices)


def breadth_restrict(collection, p):
    if p < 0:
        raise ValueError("The breadth can't be negative.")
    return MatrixCollection(
        collection.universe, collection.arity,
        min(p, collection.breadth_bound),
        (m for m in collection.matrices if m.cols <= p),
    )


def _check_compatible(collections):
    if len(collections) == 0:
        raise ValueError("Expected at least one collection.")
    first = collections[0]
    for other in collections[1:]:
        if other.universe != first.universe:
            raise UniverseMismatch("Collections over different universes.")
        if other.arity != first.arity:
            raise ArityMismatch(
                "Collections of different arities ({} and {}).".format(
                    first.arity, other.arity,
                )
            )
    return first


def union(collections):
    collections = list(collections)
    first = _check_compatible(collections)
    return MatrixCollection(
        first.universe, first.arity,
        max(c.breadth_bound for c in collections),
        frozenset().union(*(c.matrices for c in collections)),
    )


def intersect(collections):
    collections = list(collections)
    first = _check_compatible(collections)
    return MatrixCollection(
        first.universe, first.arity,
        min(c.breadth_bound for c in collections),
        frozenset.intersection(*(c.matrices for c in collections)),
    )


def _check_quotient(collection, matrix):
    collection.universe.check_same(matrix.universe)
    if matrix.rows != collection.arity:
        raise InvalidMatrix(
            "{!r} has {} rows, the collection has arity {}.".format(
                matrix, matrix.rows, collection.arity,
            )
        )


def right_quotient(collection, matrix):
    """The matrices M such that [M|N] belongs to the collection."""
    _check_quotient(collection, matrix)
    c = matrix.cols
    suffix = matrix.columns
    quotient = []
    for x in collection.matrices:
        if x.cols >= c and x.columns[x.cols - c:] == suffix:
            quotient.append(
                Matrix._make(x.universe, x.rows, x.columns[:x.cols - c])
            )
    return MatrixCollection(collection.universe, collection.arity,
                            max(0, collection.breadth_bound - c), quotient)


def left_quotient(matrix, collection):
    """The matrices M such that [N|M] belongs to the collection."""
    _check_quotient(collection, matrix)
    c = matrix.cols
    prefix = matrix.columns
    quotient = []
    for x in collection.matrices:
        if x.cols >= c and x.columns[:c] == prefix:
            quotient.append(Matrix._make(x.universe, x.rows, x.columns[c:]))
    return MatrixCollection(collection.universe, collection.arity,
                            max(0, collection.breadth_bound - c), quotient)


def membership(collection, matrix):
    collection.universe.check_same(matrix.universe)
    if matrix.rows != collection.arity:
        raise InvalidMatrix(
            "{!r} has {} rows, the collection has arity {}.".format(
                matrix, matrix.rows, collection.arity,
            )
        )
    return matrix in collection.matrices
