"""Closure audits for finite families of matrix collections."""

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

from . import config
from . import logging
from .core import Matrix, Verdict, as_universe
from .matrices import (MatrixCollection, all_matrices, trivial_size,
                       make_trivial, make_empty, make_equality,
                       breadth_restrict, union, right_quotient,
                       left_quotient)
from .minors import MinorFormationScheme, conjunctive_minor
from .formats import to_jsonable
from .exceptions import InvalidMatrix, check_cap


__all__ = ["CollectionFamily", "AuditBounds", "AuditReport", "CONDITIONS",
           "audit_required_members", "audit_unions", "audit_quotients",
           "candidate_pool", "default_pool", "audit_dividends",
           "audit_conjunctive_minors", "audit_locally_closed", "audit_all",
           "mutation_check"]


logger = _logging.getLogger(__name__)


CONDITIONS = ("required", "unions", "quotients", "dividends",
              "conjunctive_minors", "locally_closed")


class CollectionFamily(object):
    """A finite family of collections sharing a universe and a breadth
    bound.

    Members are stored in canonical order and compared by their matrices.

    """
    __slots__ = ("universe", "breadth_bound", "members", "_index")

    def __init__(self, universe, breadth_bound, members=()):
        check_cap("breadth", breadth_bound, config.MAX_BREADTH)
        self.universe = as_universe(universe)
        self.breadth_bound = breadth_bound

        normalized = set()
        for member in members:
            self.universe.check_same(member.universe)
            if member.breadth > breadth_bound:
                raise InvalidMatrix(
                    "{} is wider than the family bound {}.".format(
                        member, breadth_bound,
                    )
                )
            normalized.add(member.with_bound(breadth_bound))

        self.members = tuple(sorted(normalized))
        self._index = {(c.arity, c.matrices) for c in self.members}

    @property
    def max_arity(self):
        return max((c.arity for c in self.members), default=0)

    @property
    def arities(self):
        return sorted({c.arity for c in self.members})

    def of_arity(self, m):
        return [c for c in self.members if c.arity == m]

    def without(self, member):
        return CollectionFamily(
            self.universe, self.breadth_bound,
            (c for c in self.members if c != member),
        )

    def __contains__(self, collection):
        return (collection.arity, collection.matrices) in self._index

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return "<CollectionFamily k={} B={} |{}|>".format(
            self.universe.size, self.breadth_bound, len(self),
        )


class AuditBounds(object):
    """Bounds on the schemes and candidate pools explored by the audits.

    Args:
        max_target (int): largest scheme target (defaults to the largest
                          arity of the family).
        max_indeterminates (int): largest number of indeterminates.
        max_maps (int): largest number of maps (collections) of a scheme.
        p_max (int): largest trivial breadth considered for dividends
                     (defaults to the breadth bound).
        pool_cap (int): largest candidate pool (defaults to MAX_POOL).

    """
    __slots__ = ("max_target", "max_indeterminates", "max_maps", "p_max",
                 "pool_cap")

    def __init__(self, max_target=None, max_indeterminates=1, max_maps=2,
                 p_max=None, pool_cap=None):
        self.max_target = max_target
        self.max_indeterminates = max_indeterminates
        self.max_maps = max_maps
        self.p_max = p_max
        self.pool_cap = pool_cap

    @classmethod
    def from_kwargs(cls, kwargs):
        unknown = set(kwargs) - set(cls.__slots__)
        if unknown:
            raise ValueError("Unknown audit bound(s): {}".format(
                ", ".join(sorted(unknown)),
            ))
        return cls(**kwargs)

    def __repr__(self):
        return "<AuditBounds {}>".format(", ".join(
            "{}={}".format(name, getattr(self, name))
            for name in self.__slots__
        ))


class AuditReport(object):
    __slots__ = ("verdicts", )

    def __init__(self, verdicts):
        missing = set(CONDITIONS) - set(verdicts)
        if missing:
            raise ValueError("Missing verdicts: {}".format(sorted(missing)))
        self.verdicts = dict(verdicts)

    @property
    def passed(self):
        return all(self.verdicts[name].holds for name in CONDITIONS)

    def failed(self):
        return [name for name in CONDITIONS if not self.verdicts[name].holds]

    def to_dict(self):
        report = {
            name: "pass" if self.verdicts[name].holds else "fail"
            for name in CONDITIONS
        }
        report["counterexamples"] = {
            name: to_jsonable(self.verdicts[name].witness)
            for name in self.failed()
        }
        return report

    def __repr__(self):
        return "<AuditReport {}>".format(", ".join(
            "{}={}".format(name, "pass" if self.verdicts[name].holds else
                           "fail")
            for name in CONDITIONS
        ))


def _fail(condition, witness):
    logging.audit_failed(condition, witness)
    return Verdict(False, witness)


def audit_required_members(family):
    """The equality, unary empty and unary trivial collections, and the
    empty collections of every arity up to the largest one.

    """
    universe = family.universe
    bound = family.breadth_bound

    required = [("equality", make_equality(universe, bound)),
                ("empty", make_empty(universe, 1))]
    required.extend(
        ("trivial({})".format(p), make_trivial(universe, 1, p))
        for p in range(bound + 1)
    )
    required.extend(
        ("empty({})".format(m), make_empty(universe, m))
        for m in range(2, family.max_arity + 1)
    )

    for name, collection in required:
        if collection not in family:
            return _fail("required", {"missing": name,
                                      "collection": collection})
    return Verdict(True)


def audit_unions(family):
    """Pairwise unions of members with the same arity."""
    for m in family.arities:
        members = family.of_arity(m)
        for left, right in itertools.combinations(members, 2):
            joined = union([left, right])
            if joined not in family:
                return _fail("unions", {"left": left, "right": right,
                                        "union": joined})
    return Verdict(True)


def audit_quotients(family):
    """Left and right quotients of every member by every matrix with 1 to B
    columns.

    Wider quotients are empty: the empty collection of each arity is then
    required as well.

    """
    universe = family.universe
    bound = family.breadth_bound

    for m in family.arities:
        matrices = [matrix for matrix in all_matrices(universe, m, bound)
                    if matrix.cols > 0]
        for collection in family.of_arity(m):
            for matrix in matrices:
                right = right_quotient(collection, matrix)
                if right not in family:
                    return _fail("quotients", {
                        "collection": collection, "matrix": matrix,
                        "side": "right", "quotient": right,
                    })
                left = left_quotient(matrix, collection)
                if left not in family:
                    return _fail("quotients", {
                        "collection": collection, "matrix": matrix,
                        "side": "left", "quotient": left,
                    })

        empty = make_empty(universe, m)
        if empty not in family:
            return _fail("quotients", {"side": "wide", "quotient": empty})
    return Verdict(True)


def candidate_pool(universe, arity, breadth, p, cap=None):
    """Every collection of breadth at most breadth containing the trivial
    collection of breadth p.

    Candidates are listed by the binary order of their extra matrices.

    """
    universe = as_universe(universe)
    if cap is None:
        cap = config.MAX_POOL
    if p > breadth:
        raise ValueError("The trivial breadth can't exceed the bound.")

    base = list(all_matrices(universe, arity, p))
    extras = [matrix for matrix in all_matrices(universe, arity, breadth)
              if matrix.cols > p]
    check_cap("candidate pool (arity {}, p={})".format(arity, p),
              2 ** len(extras), cap)

    pool = []
    for mask in range(2 ** len(extras)):
        chosen = [extras[i] for i in range(len(extras)) if mask >> i & 1]
        pool.append(MatrixCollection(universe, arity, breadth,
                                     base + chosen))
    return pool


def _pool_floor(k, m, breadth, cap):
    total = trivial_size(k, m, breadth)
    for p in range(breadth + 1):
        if 2 ** (total - trivial_size(k, m, p)) <= cap:
            return p
    return breadth


def default_pool(family, cap=None):
    """The candidate pool used when none is given.

    For each arity of the family, the supersets of the smallest trivial
    collection whose pool fits the cap.

    """
    if cap is None:
        cap = config.MAX_POOL
    k = family.universe.size
    bound = family.breadth_bound

    pool = []
    for m in family.arities:
        p = _pool_floor(k, m, bound, cap)
        candidates = candidate_pool(family.universe, m, bound, p, cap)
        if p > 0:
            logging.pool_restricted(m, p, len(candidates))
        pool.extend(candidates)
    return pool


def _check_pool(pool, cap):
    pool = list(pool)
    check_cap("candidate pool", len(pool),
              config.MAX_POOL if cap is None else cap)
    return pool


def _largest_trivial(collection):
    """The largest p with the trivial collection of breadth p inside the
    collection (-1 when the empty matrix is missing).

    """
    k = collection.universe.size
    counts = {}
    for matrix in collection.matrices:
        counts[matrix.cols] = counts.get(matrix.cols, 0) + 1

    p = -1
    while counts.get(p + 1, 0) == k ** (collection.arity * (p + 1)):
        p += 1
        if p >= collection.breadth_bound:
            break
    return p


def _double_quotients(collection, width):
    """The quotients N1\\G/N2 with cols(N1) + cols(N2) = width.

    Only the nonempty ones are returned, keyed by (N1, N2) columns.

    """
    quotients = {}
    for matrix in collection.matrices:
        if matrix.cols < width:
            continue
        for left in range(width + 1):
            right = width - left
            key = (matrix.columns[:left],
                   matrix.columns[matrix.cols - right:])
            middle = matrix.columns[left:matrix.cols - right]
            quotients.setdefault(key, set()).add(
                Matrix._make(matrix.universe, matrix.rows, middle)
            )
    return quotients


def _dividend_forced(collection, p, family):
    """True when every quotient N1\\G/N2 with at least p columns removed
    belongs to the family.

    """
    if p <= 0:
        # The collection itself is one of its quotients.
        return False

    empty = make_empty(collection.universe, collection.arity)
    if empty not in family:
        return False

    bound = family.breadth_bound
    for width in range(p, bound + 1):
        for middles in _double_quotients(collection, width).values():
            quotient = MatrixCollection(collection.universe,
                                        collection.arity,
                                        max(0, bound - width), middles)
            if quotient not in family:
                return False
    return True


def audit_dividends(family, p_max=None, pool=None, pool_cap=None):
    """Candidates containing a trivial collection whose wide enough double
    quotients are all members must be members.

    """
    if pool is None:
        pool = default_pool(family, pool_cap)
    else:
        pool = _check_pool(pool, pool_cap)

    for candidate in sorted(pool):
        if candidate in family:
            continue
        p = _largest_trivial(candidate)
        if p_max is not None:
            p = min(p, p_max)
        if _dividend_forced(candidate, p, family):
            return _fail("dividends", {"collection": candidate, "p": p})
    return Verdict(True)


def _scheme_count(family, bounds):
    max_target = bounds.max_target or family.max_arity
    arities = [c.arity for c in family]
    total = 0
    for j in range(1, bounds.max_maps + 1):
        for chosen in itertools.combinations_with_replacement(arities, j):
            for target in range(1, max_target + 1):
                for v in range(bounds.max_indeterminates + 1):
                    product = 1
                    for n in chosen:
                        product *= (target + v) ** n
                    total += product
    return total


def _schemes(target, n_indeterminates, sources):
    """Schemes with the given sources using every indeterminate."""
    names = tuple("v{}".format(i) for i in range(n_indeterminates))
    images = list(range(target)) + list(names)
    for maps in itertools.product(
        *[itertools.product(images, repeat=n) for n in sources]
    ):
        used = {image for h in maps for image in h if isinstance(image, str)}
        if len(used) == len(names):
            yield MinorFormationScheme(target, maps, names)


def audit_conjunctive_minors(family, bounds=None):
    """Conjunctive minors of members via every scheme within the bounds."""
    if bounds is None:
        bounds = AuditBounds()
    check_cap("minor formation schemes", _scheme_count(family, bounds),
              config.MAX_SCHEMES)

    max_target = bounds.max_target or family.max_arity
    bound = family.breadth_bound
    for j in range(1, bounds.max_maps + 1):
        for members in itertools.combinations_with_replacement(family, j):
            sources = [c.arity for c in members]
            for target in range(1, max_target + 1):
                for v in range(bounds.max_indeterminates + 1):
                    for scheme in _schemes(target, v, sources):
                        minor = conjunctive_minor(scheme, members, bound)
                        if minor not in family:
                            return _fail("conjunctive_minors", {
                                "scheme": scheme, "members": list(members),
                                "minor": minor,
                            })
    return Verdict(True)


def audit_locally_closed(family, pool=None, pool_cap=None):
    """Members are closed under breadth restriction, and candidates whose
    restrictions are all members are members.

    """
    for collection in family:
        for p in range(collection.breadth):
            restricted = breadth_restrict(collection, p)
            if restricted not in family:
                return _fail("locally_closed", {
                    "collection": collection, "p": p,
                    "restriction": restricted,
                })

    if pool is None:
        pool = default_pool(family, pool_cap)
    else:
        pool = _check_pool(pool, pool_cap)

    bound = family.breadth_bound
    for candidate in sorted(pool):
        if candidate in family:
            continue
        if all(breadth_restrict(candidate, p) in family
               for p in range(bound + 1)):
            return _fail("locally_closed", {"collection": candidate})
    return Verdict(True)


def _run(condition, family, bounds, pool):
    if condition == "required":
        return audit_required_members(family)
    if condition == "unions":
        return audit_unions(family)
    if condition == "quotients":
        return audit_quotients(family)
    if condition == "dividends":
        return audit_dividends(family, bounds.p_max, pool, bounds.pool_cap)
    if condition == "conjunctive_minors":
        return audit_conjunctive_minors(family, bounds)
    if condition == "locally_closed":
        return audit_locally_closed(family, pool, bounds.pool_cap)
    raise ValueError("{}: unknown condition".format(condition))


def _run_star(args):
    return _run(*args)


def audit_all(family, bounds=None, pool=None, jobs=1):
    """Runs every audit and gathers the verdicts in a report."""
    if bounds is None:
        bounds = AuditBounds()
    if pool is None:
        pool = default_pool(family, bounds.pool_cap)

    tasks = [(condition, family, bounds, pool) for condition in CONDITIONS]
    if jobs > 1:
        with multiprocessing.Pool(processes=min(jobs, len(tasks))) as p:
            verdicts = p.map(_run_star, tasks)
    else:
        verdicts = [_run(*task) for task in tasks]

    return AuditReport(dict(zip(CONDITIONS, verdicts)))


def mutation_check(family, member, bounds=None, pool=None):
    """Audits the family without one of its members."""
    report = audit_all(family.without(member), bounds, pool)
    if report.passed:
        logging.mutation_survived(member)
    return report
