"""Linear terms over a finite algebra and the operations they induce."""

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


import re
import itertools

import numpy as np

from . import config
from .core import Operation, as_universe
from .operations import OperationSet
from .exceptions import ArityMismatch, check_cap


__all__ = ["LINEAR", "INCREASING", "Signature", "FiniteAlgebra", "Term",
           "parse_term", "enumerate_terms", "induce_op", "induced_set"]


LINEAR = "linear"
INCREASING = "increasing"


class Signature(object):
    __slots__ = ("symbols", )

    def __init__(self, symbols):
        symbols = tuple((str(name), int(arity)) for name, arity in symbols)
        names = [name for name, _ in symbols]
        if len(set(names)) != len(names):
            raise ValueError("Symbol names must be unique.")
        for name, arity in symbols:
            if arity < 1:
                raise ValueError("{}: symbols need an arity of at least 1"
                                 "".format(name))
            if not re.match(r"^[^\s()]+$", name) or \
               re.match(r"^x\d+$", name):
                raise ValueError("{}: invalid symbol name".format(name))
        self.symbols = symbols

    @property
    def names(self):
        return [name for name, _ in self.symbols]

    def arity(self, name):
        for symbol, arity in self.symbols:
            if symbol == name:
                return arity
        raise KeyError(name)

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, Signature) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return "<Signature {}>".format(
            " ".join("{}/{}".format(*s) for s in self.symbols)
        )


class FiniteAlgebra(object):
    """A universe with an operation for every symbol of its signature."""
    __slots__ = ("universe", "signature", "interpretation")

    def __init__(self, universe, interpretation):
        self.universe = as_universe(universe)
        for name, op in interpretation.items():
            self.universe.check_same(op.universe)
        self.interpretation = dict(interpretation)
        self.signature = Signature(
            (name, self.interpretation[name].arity)
            for name in sorted(self.interpretation)
        )

    def operations(self):
        return OperationSet(self.universe, self.interpretation.values())

    def __repr__(self):
        return "<FiniteAlgebra k={} {}>".format(self.universe.size,
                                                self.signature)


class Term(object):
    """A variable x_i (i >= 1) or a symbol applied to subterms."""
    __slots__ = ("symbol", "index", "children")

    def __init__(self, symbol=None, index=None, children=()):
        if (symbol is None) == (index is None):
            raise ValueError("A term is either a variable or an application.")
        if index is not None and index < 1:
            raise ValueError("Variables are numbered from 1.")
        if symbol is not None and len(children) == 0:
            raise ValueError("{}: applications need arguments".format(symbol))
        self.symbol = symbol
        self.index = index
        self.children = tuple(children)

    @classmethod
    def variable(cls, index):
        return cls(index=index)

    @classmethod
    def apply(cls, symbol, *children):
        return cls(symbol=symbol, children=children)

    @property
    def is_variable(self):
        return self.index is not None

    def variables(self):
        """Variable indices in order of occurrence."""
        if self.is_variable:
            return [self.index]
        return [i for child in self.children for i in child.variables()]

    def depth(self):
        if self.is_variable:
            return 0
        return 1 + max(child.depth() for child in self.children)

    def is_linear(self):
        indices = self.variables()
        return len(set(indices)) == len(indices)

    def is_increasing(self):
        indices = self.variables()
        return all(a < b for a, b in zip(indices, indices[1:]))

    def canonical(self):
        """Renumbers the used variables as x1..xn, keeping their order."""
        renumber = {
            old: new for new, old in enumerate(sorted(set(self.variables())),
                                               start=1)
        }
        return self._renamed(renumber)

    def _renamed(self, renumber):
        if self.is_variable:
            return Term.variable(renumber[self.index])
        return Term(symbol=self.symbol, children=[
            child._renamed(renumber) for child in self.children
        ])

    def _key(self):
        return (self.symbol, self.index, self.children)

    def __eq__(self, other):
        return isinstance(other, Term) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if self.is_variable:
            return "x{}".format(self.index)
        return "({} {})".format(
            self.symbol, " ".join(str(child) for child in self.children),
        )

    def __repr__(self):
        return "<Term {}>".format(self)


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_term(text):
    """Parses an S-expression such as "(and x1 (and x2 x3))"."""
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ValueError("Empty term.")

    def parse(position):
        token = tokens[position]
        if token == "(":
            if position + 1 >= len(tokens) or tokens[position + 1] in "()":
                raise ValueError("Expected a symbol after '('.")
            symbol = tokens[position + 1]
            position += 2
            children = []
            while position < len(tokens) and tokens[position] != ")":
                child, position = parse(position)
                children.append(child)
            if position >= len(tokens):
                raise ValueError("Unbalanced parentheses in '{}'.".format(
                    text,
                ))
            return Term(symbol=symbol, children=children), position + 1

        if token == ")":
            raise ValueError("Unexpected ')' in '{}'.".format(text))

        match = re.match(r"^x(\d+)$", token)
        if match is None:
            raise ValueError("{}: not a variable".format(token))
        return Term.variable(int(match.group(1))), position + 1

    term, position = parse(0)
    if position != len(tokens):
        raise ValueError("Trailing input in '{}'.".format(text))
    return term


_LEAF = Term.variable(1)


def _shapes(signature, max_depth, max_leaves):
    """Term shapes (every leaf is x1) with at most max_leaves leaves."""
    shapes = [(_LEAF, 1)]
    for _ in range(max_depth):
        grown = [(_LEAF, 1)]
        for name, arity in signature:
            for children in itertools.product(shapes, repeat=arity):
                leaves = sum(n for _, n in children)
                if leaves <= max_leaves:
                    grown.append((
                        Term(symbol=name,
                             children=[shape for shape, _ in children]),
                        leaves,
                    ))
        shapes = grown
    return shapes


def _fill(shape, indices):
    """Replaces the leaves of a shape by the given variable indices."""
    indices = iter(indices)

    def fill(term):
        if term.is_variable:
            return Term.variable(next(indices))
        return Term(symbol=term.symbol,
                    children=[fill(child) for child in term.children])

    return fill(shape)


def enumerate_terms(signature, mode, max_vars, max_depth):
    """Linear terms (no repeated variable) within the bounds.

    Terms use the variables x1..xn exactly. In the increasing mode the
    variables occur in the order x1, x2, ..., xn.

    """
    if mode not in (LINEAR, INCREASING):
        raise ValueError("{}: invalid mode".format(mode))
    if max_vars < 1 or max_depth < 0:
        raise ValueError("Invalid bounds.")

    terms = []
    for shape, leaves in _shapes(signature, max_depth, max_vars):
        if mode == INCREASING:
            orders = [range(1, leaves + 1)]
        else:
            orders = itertools.permutations(range(1, leaves + 1))
        for order in orders:
            terms.append(_fill(shape, order))
            check_cap("terms", len(terms), config.MAX_TERMS)

    return sorted(terms, key=lambda t: (len(t.variables()), t.depth(),
                                        str(t)))


def induce_op(algebra, term):
    """The term operation of a linear term, arguments bound by sorted
    variable index.

    """
    term = term.canonical()
    k = algebra.universe.size
    n = len(term.variables())
    if not term.is_linear():
        raise ValueError("{}: not a linear term".format(term))

    args = np.unravel_index(np.arange(k ** n), (k, ) * n)

    def evaluate(t):
        if t.is_variable:
            return args[t.index - 1]
        if t.symbol not in algebra.interpretation:
            raise KeyError("{}: unknown symbol".format(t.symbol))
        op = algebra.interpretation[t.symbol]
        if op.arity != len(t.children):
            raise ArityMismatch("{} expects {} argument(s).".format(
                t.symbol, op.arity,
            ))
        values = tuple(evaluate(child) for child in t.children)
        return op.table[np.ravel_multi_index(values, op.shape)]

    return Operation._make(algebra.universe, n, evaluate(term))


def induced_set(algebra, mode, max_vars, max_depth):
    terms = enumerate_terms(algebra.signature, mode, max_vars, max_depth)
    return OperationSet(algebra.universe,
                        (induce_op(algebra, t) for t in terms))
