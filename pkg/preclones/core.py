"""Core values: universes, operations, matrices and verdicts."""

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

import numpy as np

from . import config
from .exceptions import (UniverseMismatch, ArityMismatch, InvalidTable,
                         InvalidMatrix, check_cap)


__all__ = ["Universe", "Operation", "Matrix", "Verdict"]


def _is_int(value):
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


class Universe(object):
    __slots__ = ("size", )

    def __init__(self, size):
        if not _is_int(size):
            raise TypeError("The universe size must be an integer.")

        if size < 1:
            raise ValueError(
                "A universe needs at least one element ({} given)."
                "".format(size)
            )

        check_cap("universe", int(size), config.MAX_UNIVERSE)
        self.size = int(size)

    @property
    def elements(self):
        return range(self.size)

    def tuples(self, n):
        """Iterate over A^n in lexicographic order (last position fastest)."""
        return itertools.product(range(self.size), repeat=n)

    def check_same(self, other):
        if self != other:
            raise UniverseMismatch(
                "Universes differ: {} and {}.".format(self, other)
            )

    def __eq__(self, other):
        return isinstance(other, Universe) and self.size == other.size

    def __hash__(self):
        return hash(self.size)

    def __repr__(self):
        return "<Universe k={}>".format(self.size)


def as_universe(universe):
    if isinstance(universe, Universe):
        return universe
    return Universe(universe)


class Operation(object):
    """A finitary operation on a finite universe.

    The table lists the values of the operation for every argument tuple in
    lexicographic order, the last argument varying fastest.

    """
    __slots__ = ("universe", "arity", "table", "_hash")

    def __init__(self, universe, arity, table):
        self.universe = as_universe(universe)

        if not _is_int(arity):
            raise InvalidTable("The arity must be an integer.")
        if arity < 1:
            raise InvalidTable("Only operations of arity 1 or more are "
                               "supported ({} given).".format(arity))
        self.arity = int(arity)

        k = self.universe.size
        expected = k ** self.arity
        check_cap("operation table", expected, config.MAX_TABLE_ENTRIES)

        if isinstance(table, np.ndarray):
            if table.dtype.kind not in "iu":
                raise InvalidTable("Table entries must be integers.")
            table = table.ravel()
        else:
            table = list(table)
            if not all(_is_int(v) for v in table):
                raise InvalidTable("Table entries must be integers.")

        if len(table) != expected:
            raise InvalidTable(
                "A table of arity {} over {} elements has {:,d} entries "
                "({:,d} given).".format(self.arity, k, expected, len(table))
            )

        table = np.array(table, dtype=np.intp)
        if table.size and (table.min() < 0 or table.max() >= k):
            raise InvalidTable("Table entries must be in 0..{}.".format(k - 1))

        table.flags.writeable = False
        self.table = table
        self._hash = self._compute_hash()

    @classmethod
    def _make(cls, universe, arity, table):
        """Builds an operation from a checked numpy table."""
        op = cls.__new__(cls)
        op.universe = universe
        op.arity = arity
        table = np.ascontiguousarray(table, dtype=np.intp)
        table.flags.writeable = False
        op.table = table
        op._hash = op._compute_hash()
        return op

    def _compute_hash(self):
        return hash((self.universe.size, self.arity, self.table.tobytes()))

    def __getstate__(self):
        return {
            "universe": self.universe.size,
            "arity": self.arity,
            "table": self.table.tolist(),
        }

    def __setstate__(self, state):
        self.universe = Universe(state["universe"])
        self.arity = state["arity"]
        table = np.array(state["table"], dtype=np.intp)
        table.flags.writeable = False
        self.table = table
        self._hash = self._compute_hash()

    @property
    def shape(self):
        return (self.universe.size, ) * self.arity

    def _lookup(self, args):
        k = self.universe.size
        index = 0
        for a in args:
            index = index * k + a
        return int(self.table[index])

    def __call__(self, *args):
        if len(args) != self.arity:
            raise ArityMismatch(
                "Expected {} argument(s), got {}.".format(self.arity,
                                                          len(args))
            )

        k = self.universe.size
        for a in args:
            if not _is_int(a) or not 0 <= a < k:
                raise ValueError("{}: not an element of {}.".format(
                    a, self.universe,
                ))

        return self._lookup(args)

    def sort_key(self):
        return (self.arity, tuple(self.table.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Operation):
            return NotImplemented
        return (self.universe == other.universe and
                self.arity == other.arity and
                np.array_equal(self.table, other.table))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "<Operation k={} n={} [{}]>".format(
            self.universe.size, self.arity,
            "".join(str(v) for v in self.table.tolist()) if
            self.universe.size <= 10 else
            ",".join(str(v) for v in self.table.tolist())
        )


class Matrix(object):
    """A matrix over the universe, stored as a tuple of columns.

    Matrices with no column are valid; the number of rows is always at least
    one.

    """
    __slots__ = ("universe", "rows", "columns", "_hash")

    def __init__(self, universe, rows, columns):
        self.universe = as_universe(universe)
        if not _is_int(rows) or rows < 1:
            raise InvalidMatrix("A matrix needs at least one row.")
        self.rows = int(rows)

        k = self.universe.size
        checked = []
        for column in columns:
            column = tuple(column)
            if len(column) != self.rows:
                raise InvalidMatrix(
                    "Expected columns of height {} (got {}).".format(
                        self.rows, len(column),
                    )
                )
            for a in column:
                if not _is_int(a) or not 0 <= a < k:
                    raise InvalidMatrix(
                        "{}: not an element of {}.".format(a, self.universe)
                    )
            checked.append(tuple(int(a) for a in column))

        self.columns = tuple(checked)
        self._hash = hash((k, self.rows, self.columns))

    @classmethod
    def _make(cls, universe, rows, columns):
        """Builds a matrix from already checked columns (tuples of ints)."""
        m = cls.__new__(cls)
        m.universe = universe
        m.rows = rows
        m.columns = columns
        m._hash = hash((universe.size, rows, columns))
        return m

    @classmethod
    def from_rows(cls, universe, rows):
        rows = [tuple(row) for row in rows]
        if len(rows) == 0:
            raise InvalidMatrix("A matrix needs at least one row.")

        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise InvalidMatrix("Rows have different lengths.")

        return cls(universe, len(rows), zip(*rows))

    @classmethod
    def from_entries(cls, universe, rows, cols, entries):
        """Builds a matrix from its entries listed row by row."""
        entries = list(entries)
        if not _is_int(cols) or cols < 0:
            raise InvalidMatrix("Invalid number of columns: {}".format(cols))
        if not _is_int(rows) or rows < 1:
            raise InvalidMatrix("A matrix needs at least one row.")
        if len(entries) != rows * cols:
            raise InvalidMatrix(
                "Expected {} entries for a {}x{} matrix (got {}).".format(
                    rows * cols, rows, cols, len(entries),
                )
            )
        return cls(
            universe, rows,
            (tuple(entries[r * cols + c] for r in range(rows))
             for c in range(cols)),
        )

    @classmethod
    def empty(cls, universe, rows):
        return cls(universe, rows, ())

    @property
    def cols(self):
        return len(self.columns)

    @property
    def entries(self):
        """Entries listed row by row."""
        return tuple(
            column[r] for r in range(self.rows) for column in self.columns
        )

    def iter_rows(self):
        if self.cols == 0:
            return iter([()] * self.rows)
        return zip(*self.columns)

    def concat(self, *others):
        """Horizontal concatenation [self|other|...]."""
        columns = self.columns
        for other in others:
            self.universe.check_same(other.universe)
            if other.rows != self.rows:
                raise InvalidMatrix(
                    "Can't concatenate matrices with {} and {} rows.".format(
                        self.rows, other.rows,
                    )
                )
            columns = columns + other.columns
        return Matrix._make(self.universe, self.rows, columns)

    def to_array(self):
        return np.array(
            [list(row) for row in self.iter_rows()], dtype=int,
        ).reshape(self.rows, self.cols)

    def sort_key(self):
        return (self.cols, self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.universe == other.universe and
                self.rows == other.rows and
                self.columns == other.columns)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.cols == 0:
            return "<Matrix {}x0>".format(self.rows)
        return "<Matrix [{}]>".format("; ".join(
            " ".join(str(a) for a in row) for row in self.iter_rows()
        ))


class Verdict(object):
    """The outcome of a check, with a witness when it fails."""
    __slots__ = ("holds", "witness")

    def __init__(self, holds, witness=None):
        self.holds = bool(holds)
        self.witness = witness

    def __bool__(self):
        return self.holds

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented
        return self.holds == other.holds and self.witness == other.witness

    def __repr__(self):
        if self.holds:
            return "<Verdict holds>"
        return "<Verdict fails: {}>".format(self.witness)
