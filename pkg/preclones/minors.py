"""Minor formation schemes, conjunctive minors and simple minors."""

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
from .core import Matrix, _is_int
from .matrices import MatrixCollection, trivial_size
from .exceptions import (ArityMismatch, InvalidScheme, UniverseMismatch,
                         check_cap)


__all__ = ["MinorFormationScheme", "SkolemAssignment", "conjunctive_minor",
           "canonical_scheme", "simple_minor_kind", "SIMPLE_MINOR_KINDS"]


SIMPLE_MINOR_KINDS = ("permute_rows", "identify_rows", "add_dummy_rows",
                      "project_rows")


class MinorFormationScheme(object):
    """A target arity, a set of indeterminates and a family of index maps.

    Each map is a tuple: position i holds either a target row index (int) or
    the name of an indeterminate (str).

    """
    __slots__ = ("target", "indeterminates", "maps")

    def __init__(self, target, maps, indeterminates=()):
        if not _is_int(target) or target < 1:
            raise InvalidScheme("The target must be a positive integer.")
        self.target = int(target)

        indeterminates = tuple(indeterminates)
        for v in indeterminates:
            if not isinstance(v, str):
                raise InvalidScheme("{!r}: indeterminates are names".format(v))
        if len(set(indeterminates)) != len(indeterminates):
            raise InvalidScheme("Duplicated indeterminates.")
        self.indeterminates = indeterminates

        maps = [tuple(h) for h in maps]
        if len(maps) == 0:
            raise InvalidScheme("A scheme needs at least one map.")

        names = set(indeterminates)
        for j, h in enumerate(maps):
            if len(h) == 0:
                raise InvalidScheme("Map {} has an empty source.".format(j))
            for image in h:
                if isinstance(image, str):
                    if image not in names:
                        raise InvalidScheme(
                            "Map {}: unknown indeterminate '{}'.".format(
                                j, image,
                            )
                        )
                elif not _is_int(image) or not 0 <= image < self.target:
                    raise InvalidScheme(
                        "Map {}: {!r} is not a row of the target.".format(
                            j, image,
                        )
                    )
        self.maps = tuple(
            tuple(image if isinstance(image, str) else int(image)
                  for image in h)
            for h in maps
        )

    @property
    def sources(self):
        return tuple(len(h) for h in self.maps)

    def __eq__(self, other):
        if not isinstance(other, MinorFormationScheme):
            return NotImplemented
        return (self.target == other.target and
                self.indeterminates == other.indeterminates and
                self.maps == other.maps)

    def __hash__(self):
        return hash((self.target, self.indeterminates, self.maps))

    def __repr__(self):
        return "<MinorFormationScheme m={} V={} maps={}>".format(
            self.target, list(self.indeterminates),
            [list(h) for h in self.maps],
        )


class SkolemAssignment(object):
    """Values given to the indeterminates of a scheme."""
    __slots__ = ("values", )

    def __init__(self, indeterminates, values):
        indeterminates = tuple(indeterminates)
        values = tuple(values)
        if len(values) != len(indeterminates):
            raise InvalidScheme("A Skolem map needs a value for every "
                                "indeterminate.")
        self.values = dict(zip(indeterminates, values))

    def transform(self, column, h):
        """The column (a_{h(0)}, ..., a_{h(n-1)}) read through h."""
        return tuple(
            self.values[image] if isinstance(image, str) else column[image]
            for image in h
        )


def _column_options(scheme, assignments, column):
    """Distinct per-map transformed columns for every Skolem assignment."""
    options = []
    seen = set()
    for sigma in assignments:
        choice = tuple(sigma.transform(column, h) for h in scheme.maps)
        if choice not in seen:
            seen.add(choice)
            options.append(choice)
    return options


def conjunctive_minor(scheme, collections, max_breadth=None):
    """The conjunctive minor of the collections via the scheme.

    An m-row matrix with columns a_1..a_n is kept when one Skolem map per
    column makes every transformed matrix a member of its collection.

    """
    collections = list(collections)
    if len(collections) != len(scheme.maps):
        raise InvalidScheme(
            "The scheme has {} map(s) for {} collection(s).".format(
                len(scheme.maps), len(collections),
            )
        )
    if len(collections) == 0:
        raise InvalidScheme("Expected at least one collection.")

    universe = collections[0].universe
    for j, (collection, n_j) in enumerate(zip(collections, scheme.sources)):
        if collection.universe != universe:
            raise UniverseMismatch("Collections over different universes.")
        if collection.arity != n_j:
            raise ArityMismatch(
                "Map {} has source {}, the collection has arity {}.".format(
                    j, n_j, collection.arity,
                )
            )

    if max_breadth is None:
        max_breadth = min(c.breadth_bound for c in collections)

    k = universe.size
    m = scheme.target
    check_cap("conjunctive minor candidates", trivial_size(k, m, max_breadth),
              config.MAX_COLLECTION_SIZE)
    check_cap("Skolem assignments",
              k ** (len(scheme.indeterminates) * max_breadth),
              config.MAX_SKOLEM_ASSIGNMENTS)

    assignments = [
        SkolemAssignment(scheme.indeterminates, values)
        for values in universe.tuples(len(scheme.indeterminates))
    ]
    columns = list(universe.tuples(m))
    options = {c: _column_options(scheme, assignments, c) for c in columns}
    members = [c.matrices for c in collections]
    sources = scheme.sources

    result = []
    for q in range(max_breadth + 1):
        for chosen in itertools.product(columns, repeat=q):
            for choice in itertools.product(*[options[c] for c in chosen]):
                if all(Matrix._make(universe, n_j,
                                    tuple(per_map[j] for per_map in choice))
                       in members[j] for j, n_j in enumerate(sources)):
                    result.append(Matrix._make(universe, m, chosen))
                    break

    return MatrixCollection(universe, m, max_breadth, result)


def canonical_scheme(kind, params, arity):
    """The singleton scheme of a simple minor applied to an arity-ary
    collection.

    permute_rows
        params is a permutation p of 0..arity-1; row i of the source reads
        row p[i] of the target.

    identify_rows
        params maps each source row onto the target rows 0..t-1 (surjective).

    add_dummy_rows
        params is the target arity (at least arity); extra rows are free.

    project_rows
        params lists the kept source rows; the others become indeterminates.

    """
    if kind == "permute_rows":
        perm = list(params)
        if sorted(perm) != list(range(arity)):
            raise InvalidScheme("{}: not a permutation of 0..{}".format(
                perm, arity - 1,
            ))
        return MinorFormationScheme(arity, [perm])

    if kind == "identify_rows":
        mapping = list(params)
        if len(mapping) != arity:
            raise InvalidScheme("Expected an image for each of the {} rows."
                                "".format(arity))
        if any(not _is_int(i) or i < 0 for i in mapping):
            raise InvalidScheme("Row indices are non negative integers.")
        target = max(mapping) + 1
        if set(mapping) != set(range(target)):
            raise InvalidScheme("{}: not onto 0..{}".format(mapping,
                                                           target - 1))
        return MinorFormationScheme(target, [mapping])

    if kind == "add_dummy_rows":
        if not _is_int(params) or params < arity:
            raise InvalidScheme("The new arity must be at least {}."
                                "".format(arity))
        return MinorFormationScheme(params, [range(arity)])

    if kind == "project_rows":
        kept = list(params)
        if len(kept) == 0:
            raise InvalidScheme("At least one row must be kept.")
        if len(set(kept)) != len(kept) or \
           any(not _is_int(i) or not 0 <= i < arity for i in kept):
            raise InvalidScheme("{}: not distinct rows of 0..{}".format(
                kept, arity - 1,
            ))
        position = {row: i for i, row in enumerate(kept)}
        h = [
            position[row] if row in position else "v{}".format(row)
            for row in range(arity)
        ]
        indeterminates = [x for x in h if isinstance(x, str)]
        return MinorFormationScheme(len(kept), [h], indeterminates)

    raise InvalidScheme("{}: unknown simple minor (expected one of {})"
                        "".format(kind, ", ".join(SIMPLE_MINOR_KINDS)))


def simple_minor_kind(kind, params, collection, max_breadth=None):
    scheme = canonical_scheme(kind, params, collection.arity)
    return conjunctive_minor(scheme, [collection], max_breadth)
