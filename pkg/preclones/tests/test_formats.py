"""Tests for the JSON formats."""

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
import shutil
import logging
import unittest
from tempfile import mkdtemp

import numpy as np

from .. import formats
from ..core import Verdict
from ..matrices import make_equality
from ..minors import MinorFormationScheme
from ..terms import FiniteAlgebra, parse_term
from ..exceptions import FormatError
from . import truth


logging.disable(logging.CRITICAL)


class TestOperations(unittest.TestCase):
    def test_to_dict(self):
        self.assertEqual(formats.operation_to_dict(truth.AND),
                         {"universe": 2, "arity": 2, "table": [0, 0, 0, 1]})

    def test_from_dict(self):
        f = formats.operation_from_dict(
            {"universe": 2, "arity": 2, "table": [0, 1, 1, 0]}
        )
        self.assertEqual(f, truth.XOR)

    def test_errors(self):
        cases = [
            ([], "operation"),
            ({"arity": 1, "table": [0, 1]}, "universe"),
            ({"universe": 0, "arity": 1, "table": [0]}, "universe"),
            ({"universe": 2, "table": [0, 1]}, "arity"),
            ({"universe": 2, "arity": 0, "table": [0]}, "arity"),
            ({"universe": 2, "arity": 1}, "table"),
            ({"universe": 2, "arity": 1, "table": [0, "1"]}, "table"),
            ({"universe": 2, "arity": 1, "table": [0, 2]}, "table"),
            ({"universe": 2, "arity": 2, "table": [0, 1]}, "table"),
        ]
        for data, field in cases:
            with self.subTest(data=data):
                with self.assertRaises(FormatError) as cm:
                    formats.operation_from_dict(data)
                self.assertEqual(cm.exception.field, field)

    def test_operation_set(self):
        ops = truth.ops(truth.NOT, truth.AND)
        data = formats.operation_set_to_dict(ops)
        self.assertEqual(data["universe"], 2)
        self.assertEqual([f["arity"] for f in data["ops"]], [1, 2])
        self.assertEqual(formats.operation_set_from_dict(data), ops)

    def test_operation_set_errors(self):
        with self.assertRaises(FormatError) as cm:
            formats.operation_set_from_dict({"universe": 2, "ops": {}})
        self.assertEqual(cm.exception.field, "ops")

        with self.assertRaises(FormatError) as cm:
            formats.operation_set_from_dict({"universe": 3, "ops": [
                {"universe": 2, "arity": 1, "table": [0, 1]},
            ]})
        self.assertEqual(cm.exception.field, "ops")


class TestCollections(unittest.TestCase):
    def test_to_dict(self):
        data = formats.collection_to_dict(truth.ALL_ZERO)
        self.assertEqual(data, {
            "universe": 2, "arity": 1, "breadth": 2,
            "matrices": [{"cols": 0, "entries": []},
                         {"cols": 1, "entries": [0]},
                         {"cols": 2, "entries": [0, 0]}],
        })

    def test_row_major_entries(self):
        gamma = truth.collection(2, 2, truth.matrix([0, 1], [1, 1]))
        data = formats.collection_to_dict(gamma)
        self.assertEqual(data["matrices"], [{"cols": 2,
                                             "entries": [0, 1, 1, 1]}])
        self.assertEqual(formats.collection_from_dict(data), gamma)

    def test_from_dict(self):
        gamma = make_equality(2, 2)
        decoded = formats.collection_from_dict(
            formats.collection_to_dict(gamma)
        )
        self.assertEqual(decoded, gamma)
        self.assertEqual(decoded.breadth_bound, 2)

    def test_errors(self):
        base = {"universe": 2, "arity": 1, "breadth": 1}
        cases = [
            (dict(base), "matrices"),
            (dict(base, matrices={}), "matrices"),
            (dict(base, breadth=-1, matrices=[]), "breadth"),
            (dict(base, matrices=[{"entries": [0]}]), "cols"),
            (dict(base, matrices=[{"cols": 1}]), "entries"),
            (dict(base, matrices=[{"cols": 1, "entries": "0"}]),
             "matrices[0].entries"),
            (dict(base, matrices=[{"cols": 2, "entries": [0]}]),
             "matrices[0]"),
            (dict(base, matrices=[{"cols": 1, "entries": [3]}]),
             "matrices[0]"),
            (dict(base, matrices=[{"cols": 2, "entries": [0, 0]}]),
             "matrices"),
        ]
        for data, field in cases:
            with self.subTest(data=data):
                with self.assertRaises(FormatError) as cm:
                    formats.collection_from_dict(data)
                self.assertEqual(cm.exception.field, field)


class TestSchemes(unittest.TestCase):
    def test_round_trip(self):
        scheme = MinorFormationScheme(2, [(0, "v0"), (1, 1, 0)], ["v0"])
        data = formats.scheme_to_dict(scheme)
        self.assertEqual(data, {"target": 2, "indeterminates": ["v0"],
                                "maps": [[0, "v0"], [1, 1, 0]]})
        self.assertEqual(formats.scheme_from_dict(data), scheme)

    def test_no_indeterminates(self):
        scheme = formats.scheme_from_dict({"target": 1, "maps": [[0, 0]]})
        self.assertEqual(scheme.indeterminates, ())

    def test_errors(self):
        cases = [
            ({"maps": [[0]]}, "target"),
            ({"target": 1}, "maps"),
            ({"target": 1, "maps": [0]}, "maps"),
            ({"target": 1, "maps": [[1]]}, "maps"),
            ({"target": 1, "maps": [["v0"]]}, "maps"),
            ({"target": 1, "maps": [[0]], "indeterminates": "v0"},
             "indeterminates"),
        ]
        for data, field in cases:
            with self.subTest(data=data):
                with self.assertRaises(FormatError) as cm:
                    formats.scheme_from_dict(data)
                self.assertEqual(cm.exception.field, field)


class TestAlgebras(unittest.TestCase):
    def test_round_trip(self):
        algebra = FiniteAlgebra(2, {"and": truth.AND, "not": truth.NOT})
        data = formats.algebra_to_dict(algebra)
        self.assertEqual(data["ops"]["not"], {"arity": 1, "table": [1, 0]})
        decoded = formats.algebra_from_dict(data)
        self.assertEqual(decoded.signature, algebra.signature)
        self.assertEqual(decoded.operations(), algebra.operations())

    def test_errors(self):
        cases = [
            ({"universe": 2, "ops": []}, "ops"),
            ({"universe": 2, "ops": {"and": [0, 0, 0, 1]}}, "ops.and"),
            ({"universe": 2, "ops": {"x1": {"arity": 1, "table": [0, 1]}}},
             "ops"),
        ]
        for data, field in cases:
            with self.subTest(data=data):
                with self.assertRaises(FormatError) as cm:
                    formats.algebra_from_dict(data)
                self.assertEqual(cm.exception.field, field)


class TestToJsonable(unittest.TestCase):
    def test_package_values(self):
        self.assertEqual(formats.to_jsonable(truth.matrix([0, 1])),
                         {"rows": 1, "cols": 2, "entries": [0, 1]})
        self.assertEqual(formats.to_jsonable(truth.BOOL), 2)
        self.assertEqual(formats.to_jsonable(parse_term("(f x1 x2)")),
                         "(f x1 x2)")
        self.assertEqual(
            formats.to_jsonable(Verdict(False, {"operation": truth.NOT})),
            {"holds": False,
             "witness": {"operation": {"universe": 2, "arity": 1,
                                       "table": [1, 0]}}},
        )

    def test_containers(self):
        data = formats.to_jsonable({
            "ints": (np.int64(1), np.intp(2)),
            "array": np.array([[0, 1]]),
            "set": {3, 1, 2},
        })
        self.assertEqual(data, {"ints": [1, 2], "array": [[0, 1]],
                                "set": [1, 2, 3]})
        json.dumps(data)

    def test_dumps_is_canonical(self):
        self.assertEqual(formats.dumps({"b": 1, "a": [2]}),
                         '{"a": [2], "b": 1}')


class TestLoad(unittest.TestCase):
    def setUp(self):
        self.output_dir = mkdtemp(prefix="preclones_test_")

    def tearDown(self):
        shutil.rmtree(self.output_dir)

    def _write(self, name, content):
        path = os.path.join(self.output_dir, name)
        with open(path, "w") as f:
            f.write(content)
        return path

    def test_load(self):
        path = self._write(
            "and.json", formats.dumps(formats.operation_to_dict(truth.AND)),
        )
        self.assertEqual(formats.load(path, "operation"), truth.AND)

    def test_invalid_json(self):
        path = self._write("broken.json", "{")
        with self.assertRaises(FormatError) as cm:
            formats.load(path, "operation")
        self.assertEqual(cm.exception.field, path)

    def test_unknown_kind(self):
        path = self._write("and.json", "{}")
        with self.assertRaises(ValueError):
            formats.load(path, "matrix")

    def test_load_directory(self):
        gammas = [make_equality(2, 1), truth.ALL_ZERO]
        for name, gamma in zip(("b.json", "a.json"), gammas):
            self._write(name, formats.dumps(formats.collection_to_dict(gamma)))
        self._write("notes.txt", "not a collection")

        loaded = formats.load_directory(self.output_dir, "collection")
        self.assertEqual(loaded, [truth.ALL_ZERO, make_equality(2, 1)])

    def test_not_a_directory(self):
        path = self._write("and.json", "{}")
        with self.assertRaises(FormatError):
            formats.load_directory(path, "collection")
