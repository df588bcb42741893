"""JSON file formats."""

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


import os
import json

import numpy as np

from .core import Universe, Operation, Matrix, Verdict, _is_int
from .operations import OperationSet
from .matrices import MatrixCollection
from .minors import MinorFormationScheme
from .terms import FiniteAlgebra, Term
from .exceptions import FormatError


__all__ = ["dumps", "to_jsonable", "operation_to_dict", "operation_from_dict",
           "operation_set_to_dict", "operation_set_from_dict",
           "matrix_to_dict", "collection_to_dict", "collection_from_dict",
           "scheme_to_dict", "scheme_from_dict", "algebra_to_dict",
           "algebra_from_dict", "load", "load_directory", "parsers"]


def dumps(data):
    """Canonical serialization (sorted keys)."""
    return json.dumps(data, sort_keys=True)


def _field(data, name, where):
    if not isinstance(data, dict):
        raise FormatError(where, "expected an object")
    if name not in data:
        raise FormatError(name, "missing field in {}".format(where))
    return data[name]


def _int_field(data, name, where, minimum):
    value = _field(data, name, where)
    if not _is_int(value) or value < minimum:
        raise FormatError(name, "expected an integer >= {}".format(minimum))
    return value


def _int_list(value, name):
    if not isinstance(value, list) or not all(_is_int(v) for v in value):
        raise FormatError(name, "expected a list of integers")
    return value


def _universe(data, where):
    try:
        return Universe(_int_field(data, "universe", where, 1))
    except (TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError("universe", str(e))


def operation_to_dict(op):
    return {"universe": op.universe.size, "arity": op.arity,
            "table": op.table.tolist()}


def operation_from_dict(data, where="operation"):
    universe = _universe(data, where)
    arity = _int_field(data, "arity", where, 1)
    table = _int_list(_field(data, "table", where), "table")
    try:
        return Operation(universe, arity, table)
    except ValueError as e:
        raise FormatError("table", str(e))


def operation_set_to_dict(ops):
    return {"universe": ops.universe.size,
            "ops": [operation_to_dict(f) for f in ops]}


def operation_set_from_dict(data, where="ops"):
    universe = _universe(data, where)
    members = _field(data, "ops", where)
    if not isinstance(members, list):
        raise FormatError("ops", "expected a list of operations")
    ops = [operation_from_dict(f, "ops[{}]".format(i))
           for i, f in enumerate(members)]
    for f in ops:
        if f.universe != universe:
            raise FormatError("ops", "operation over another universe")
    return OperationSet(universe, ops)


def matrix_to_dict(matrix):
    return {"cols": matrix.cols, "entries": list(matrix.entries)}


def collection_to_dict(collection):
    return {
        "universe": collection.universe.size,
        "arity": collection.arity,
        "breadth": collection.breadth_bound,
        "matrices": [matrix_to_dict(m) for m in collection],
    }


def collection_from_dict(data, where="collection"):
    universe = _universe(data, where)
    arity = _int_field(data, "arity", where, 1)
    breadth = _int_field(data, "breadth", where, 0)
    members = _field(data, "matrices", where)
    if not isinstance(members, list):
        raise FormatError("matrices", "expected a list of matrices")

    matrices = []
    for i, item in enumerate(members):
        name = "matrices[{}]".format(i)
        cols = _int_field(item, "cols", name, 0)
        entries = _int_list(_field(item, "entries", name),
                            name + ".entries")
        try:
            matrices.append(Matrix.from_entries(universe, arity, cols,
                                                entries))
        except ValueError as e:
            raise FormatError(name, str(e))

    try:
        return MatrixCollection(universe, arity, breadth, matrices)
    except ValueError as e:
        raise FormatError("matrices", str(e))


def scheme_to_dict(scheme):
    return {"target": scheme.target,
            "indeterminates": list(scheme.indeterminates),
            "maps": [list(h) for h in scheme.maps]}


def scheme_from_dict(data, where="scheme"):
    target = _int_field(data, "target", where, 1)
    indeterminates = data.get("indeterminates", []) \
        if isinstance(data, dict) else []
    if not isinstance(indeterminates, list):
        raise FormatError("indeterminates", "expected a list of names")
    maps = _field(data, "maps", where)
    if not isinstance(maps, list) or \
       not all(isinstance(h, list) for h in maps):
        raise FormatError("maps", "expected a list of lists")
    try:
        return MinorFormationScheme(target, maps, indeterminates)
    except ValueError as e:
        raise FormatError("maps", str(e))


def algebra_to_dict(algebra):
    return {
        "universe": algebra.universe.size,
        "ops": {
            name: {"arity": op.arity, "table": op.table.tolist()}
            for name, op in algebra.interpretation.items()
        },
    }


def algebra_from_dict(data, where="algebra"):
    universe = _universe(data, where)
    ops = _field(data, "ops", where)
    if not isinstance(ops, dict):
        raise FormatError("ops", "expected an object (name to operation)")

    interpretation = {}
    for name, item in ops.items():
        if not isinstance(item, dict):
            raise FormatError("ops." + name, "expected an object")
        interpretation[name] = operation_from_dict(
            dict(item, universe=universe.size), "ops." + name,
        )
    try:
        return FiniteAlgebra(universe, interpretation)
    except ValueError as e:
        raise FormatError("ops", str(e))


def to_jsonable(obj):
    """Converts values of the package (and containers of them) to JSON
    compatible data.

    """
    if isinstance(obj, Operation):
        return operation_to_dict(obj)
    if isinstance(obj, OperationSet):
        return operation_set_to_dict(obj)
    if isinstance(obj, Matrix):
        return dict(matrix_to_dict(obj), rows=obj.rows)
    if isinstance(obj, MatrixCollection):
        return collection_to_dict(obj)
    if isinstance(obj, MinorFormationScheme):
        return scheme_to_dict(obj)
    if isinstance(obj, FiniteAlgebra):
        return algebra_to_dict(obj)
    if isinstance(obj, Term):
        return str(obj)
    if isinstance(obj, Universe):
        return obj.size
    if isinstance(obj, Verdict):
        return {"holds": obj.holds, "witness": to_jsonable(obj.witness)}
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(value) for value in sorted(obj)]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return obj


parsers = {
    "operation": operation_from_dict,
    "ops": operation_set_from_dict,
    "collection": collection_from_dict,
    "scheme": scheme_from_dict,
    "algebra": algebra_from_dict,
}


def load(path, kind):
    """Reads a JSON file holding a value of the given kind."""
    if kind not in parsers:
        raise ValueError("{}: unknown kind".format(kind))
    with open(path, "r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError(path, "invalid JSON ({})".format(e))
    return parsers[kind](data)


def load_directory(path, kind):
    """Reads every '.json' file of a directory, by file name."""
    if not os.path.isdir(path):
        raise FormatError(path, "not a directory")
    return [
        load(os.path.join(path, name), kind)
        for name in sorted(os.listdir(path)) if name.endswith(".json")
    ]
