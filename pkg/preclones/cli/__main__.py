"""Command line interface to the preclones engine."""

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


import sys
import logging
import argparse

from .. import __version__
from .. import formats
from ..core import Universe
from ..operations import OperationSet, superpose, preclone_closure
from ..matrices import make_trivial, make_empty, make_equality
from ..galois import (preserves, pol, inv_closure, separating_collection,
                      separating_family, characterize_check)
from ..audit import CollectionFamily, AuditBounds, audit_all
from ..terms import LINEAR, INCREASING, enumerate_terms, induce_op
from ..exceptions import CapExceeded
from ..utils import (add_caps_arguments_to_parser, parse_kwargs, apply_caps,
                     operation_to_df, operations_to_df, collection_to_df,
                     report_to_df)


# Logging configuration
logging.basicConfig(
    level=logging.INFO,
    format="[%(asctime)s %(levelname)s] %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
logger = logging.getLogger("preclones-cli")


# Exit codes
EXIT_SUCCESS = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3


class _Result(object):
    """The JSON data, dataframe view and exit code of a subcommand."""
    __slots__ = ("data", "summary", "code")

    def __init__(self, data, summary=None, code=EXIT_SUCCESS):
        self.data = data
        self.summary = summary
        self.code = code


def main(argv=None):
    # Getting and checking the arguments and options
    args = parse_args(argv)
    check_args(args)

    previous_caps = {}
    try:
        previous_caps = apply_caps(parse_kwargs(args.caps))
        result = _commands[args.command](args)

    except CapExceeded as e:
        logger.error(str(e))
        return EXIT_CAP_EXCEEDED

    except (ValueError, KeyError, OSError) as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR

    finally:
        apply_caps(previous_caps)

    if args.format == "summary" and result.summary is not None:
        print(result.summary.to_string(index=False))
    else:
        print(formats.dumps(result.data))

    return result.code


def _preserves(args):
    f = formats.load(args.op, "operation")
    collection = formats.load(args.collection, "collection")
    verdict = preserves(f, collection)
    data = {"preserves": verdict.holds}
    if not verdict.holds:
        data["witness"] = verdict.witness.to_dict()
    return _Result(data, code=EXIT_SUCCESS if verdict else EXIT_FALSE)


def _superpose(args):
    f = formats.load(args.outer, "operation")
    gs = [formats.load(name, "operation") for name in args.inner.split(",")]
    h = superpose(f, gs)
    return _Result(formats.operation_to_dict(h), operation_to_df(h))


def _close_ops(args):
    ops = formats.load(args.ops, "ops")
    closure = preclone_closure(ops, args.max_arity)
    return _Result(formats.operation_set_to_dict(closure),
                   operations_to_df(closure))


def _load_collections(path, universe):
    collections = formats.load_directory(path, "collection")
    if universe is None and len(collections) == 0:
        raise ValueError("{}: no collection, use --universe".format(path))
    if universe is None:
        universe = collections[0].universe
    return collections, universe


def _pol(args):
    universe = None if args.universe is None else Universe(args.universe)
    collections, universe = _load_collections(args.collections, universe)
    ops = pol(collections, args.max_arity, universe=universe, jobs=args.jobs)
    return _Result(formats.operation_set_to_dict(ops), operations_to_df(ops))


def _close_collection(args):
    ops = formats.load(args.ops, "ops")
    collection = formats.load(args.collection, "collection")
    closed = inv_closure(ops, collection)
    return _Result(formats.collection_to_dict(closed),
                   collection_to_df(closed))


def _separate(args):
    ops = formats.load(args.ops, "ops")
    g = formats.load(args.target, "operation")
    collection = separating_collection(ops, g)
    if collection is None:
        return _Result({"separable": False}, code=EXIT_FALSE)
    return _Result(formats.collection_to_dict(collection),
                   collection_to_df(collection))


def _characterize(args):
    ops = formats.load(args.ops, "ops")
    if args.collections is None:
        collections = separating_family(ops, args.max_arity)
    else:
        collections, _ = _load_collections(args.collections, ops.universe)
    report = characterize_check(ops, collections, args.max_arity,
                                jobs=args.jobs)
    return _Result(report.to_dict(),
                   code=EXIT_SUCCESS if report.equal else EXIT_FALSE)


def _audit(args):
    collections = formats.load_directory(args.family, "collection")
    if len(collections) == 0:
        raise ValueError("{}: empty family".format(args.family))
    family = CollectionFamily(collections[0].universe, args.max_breadth,
                              collections)
    bounds = AuditBounds.from_kwargs(parse_kwargs(args.pool_caps))
    report = audit_all(family, bounds, jobs=args.jobs)
    data = report.to_dict()
    return _Result(data, report_to_df(data),
                   code=EXIT_SUCCESS if report.passed else EXIT_FALSE)


def _termops(args):
    algebra = formats.load(args.algebra, "algebra")
    terms = enumerate_terms(algebra.signature, args.mode, args.max_vars,
                            args.max_depth)
    ops = OperationSet(algebra.universe,
                       (induce_op(algebra, t) for t in terms))
    data = {"terms": [str(t) for t in terms],
            "ops": formats.operation_set_to_dict(ops)}
    return _Result(data, operations_to_df(ops))


def _gen(args):
    universe = Universe(args.universe)
    if args.kind == "trivial":
        collection = make_trivial(universe, args.arity, args.breadth)
    elif args.kind == "empty":
        collection = make_empty(universe, args.arity)
    else:
        collection = make_equality(universe, args.breadth)
    return _Result(formats.collection_to_dict(collection),
                   collection_to_df(collection))


_commands = {
    "preserves": _preserves,
    "superpose": _superpose,
    "close-ops": _close_ops,
    "pol": _pol,
    "close-collection": _close_collection,
    "separate": _separate,
    "characterize": _characterize,
    "audit": _audit,
    "termops": _termops,
    "gen": _gen,
}


def check_args(args):
    """Checks the arguments and options."""
    if args.jobs < 1:
        logger.error("--jobs: expected a positive number of workers")
        sys.exit(EXIT_INPUT_ERROR)

    if args.command == "gen" and args.kind == "equality" and \
       args.arity not in (None, 2):
        logger.error("--arity: the equality collection is binary")
        sys.exit(EXIT_INPUT_ERROR)


def parse_args(argv=None):
    """Parses the arguments and options."""
    parser = argparse.ArgumentParser(
        prog="preclones",
        description="Preclones of operations and matrix collections on "
                    "finite sets (v{}).".format(__version__),
    )

    group = parser.add_argument_group("Global Options")
    group.add_argument(
        "--format", choices=("json", "summary"), default="json",
        help="The output format. [%(default)s]",
    )
    add_caps_arguments_to_parser(group)

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    sub = subparsers.add_parser(
        "preserves", help="Checks that an operation preserves a collection.",
    )
    sub.add_argument("--op", required=True, metavar="FILE",
                     help="The operation (JSON).")
    sub.add_argument("--collection", required=True, metavar="FILE",
                     help="The matrix collection (JSON).")

    sub = subparsers.add_parser("superpose", help="Superposes operations.")
    sub.add_argument("--outer", required=True, metavar="FILE",
                     help="The outer operation (JSON).")
    sub.add_argument("--inner", required=True, metavar="FILE,...",
                     help="The inner operations (comma separated files).")

    sub = subparsers.add_parser(
        "close-ops", help="Computes a bounded preclone closure.",
    )
    sub.add_argument("--ops", required=True, metavar="FILE",
                     help="The operation set (JSON).")
    sub.add_argument("--max-arity", required=True, type=int, metavar="N",
                     help="The arity bound.")

    sub = subparsers.add_parser(
        "pol", help="Operations preserving every collection of a directory.",
    )
    sub.add_argument("--collections", required=True, metavar="DIR",
                     help="Directory of collections (JSON files).")
    sub.add_argument("--max-arity", required=True, type=int, metavar="N",
                     help="The arity bound.")
    sub.add_argument("--universe", type=int, metavar="K",
                     help="The universe size (needed if DIR is empty).")

    sub = subparsers.add_parser(
        "close-collection",
        help="Smallest superset of a collection preserved by operations.",
    )
    sub.add_argument("--ops", required=True, metavar="FILE",
                     help="The operation set (JSON).")
    sub.add_argument("--collection", required=True, metavar="FILE",
                     help="The matrix collection (JSON).")

    sub = subparsers.add_parser(
        "separate",
        help="A collection separating an operation from a preclone.",
    )
    sub.add_argument("--ops", required=True, metavar="FILE",
                     help="The generators of the preclone (JSON).")
    sub.add_argument("--target", required=True, metavar="FILE",
                     help="The operation to separate (JSON).")

    sub = subparsers.add_parser(
        "characterize",
        help="Compares a preclone closure with the operations preserving "
             "collections.",
    )
    sub.add_argument("--ops", required=True, metavar="FILE",
                     help="The operation set (JSON).")
    sub.add_argument("--max-arity", required=True, type=int, metavar="N",
                     help="The arity bound.")
    sub.add_argument("--collections", metavar="DIR",
                     help="Directory of collections (defaults to the "
                          "separating collections).")

    sub = subparsers.add_parser(
        "audit", help="Audits the closure conditions of a family.",
    )
    sub.add_argument("--family", required=True, metavar="DIR",
                     help="Directory of collections (JSON files).")
    sub.add_argument("--max-breadth", required=True, type=int, metavar="B",
                     help="The breadth bound of the family.")
    sub.add_argument(
        "--pool-caps", metavar="KWARGS",
        help="Audit bounds: 'max_target=int:2,max_indeterminates=int:1,"
             "max_maps=int:2,p_max=int:2,pool_cap=int:4096'.",
    )

    sub = subparsers.add_parser(
        "termops", help="Operations induced by linear terms.",
    )
    sub.add_argument("--algebra", required=True, metavar="FILE",
                     help="The finite algebra (JSON).")
    sub.add_argument("--mode", required=True, choices=(LINEAR, INCREASING),
                     help="The kind of linear terms.")
    sub.add_argument("--max-vars", required=True, type=int, metavar="V",
                     help="The largest number of variables.")
    sub.add_argument("--max-depth", required=True, type=int, metavar="D",
                     help="The largest term depth.")

    sub = subparsers.add_parser(
        "gen", help="Generates a distinguished collection.",
    )
    sub.add_argument("--kind", required=True,
                     choices=("trivial", "empty", "equality"),
                     help="The kind of collection.")
    sub.add_argument("--arity", type=int, metavar="M",
                     help="The number of rows (not for 'equality').")
    sub.add_argument("--breadth", type=int, default=0, metavar="P",
                     help="The largest number of columns. [%(default)d]")
    sub.add_argument("--universe", type=int, default=2, metavar="K",
                     help="The universe size. [%(default)d]")

    args = parser.parse_args(argv)
    if args.command == "gen" and args.kind != "equality" and \
       args.arity is None:
        parser.error("--arity is required for this kind")
    return args


if __name__ == "__main__":
    sys.exit(main())
