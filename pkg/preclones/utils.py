"""Utilities: dataframe views and command line helpers."""

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


import pandas as pd

from . import config


__all__ = ["operation_to_df", "operations_to_df", "collection_to_df",
           "report_to_df", "add_caps_arguments_to_parser", "parse_kwargs",
           "apply_caps"]


def operation_to_df(op):
    """The table of an operation, one row per argument tuple."""
    rows = [
        tuple(args) + (op._lookup(args), )
        for args in op.universe.tuples(op.arity)
    ]
    return pd.DataFrame.from_records(
        rows,
        columns=["x{}".format(i + 1) for i in range(op.arity)] + ["value"],
    )


def operations_to_df(ops):
    """One row per operation (arity and table as a string)."""
    return pd.DataFrame.from_records(
        [(f.arity, "".join(str(v) for v in f.table.tolist())) for f in ops],
        columns=["arity", "table"],
    )


def collection_to_df(collection):
    df = pd.DataFrame.from_records(
        [(m.cols, " ".join(str(a) for a in m.entries)) for m in collection],
        columns=["cols", "entries"],
    )
    df["rows"] = collection.arity
    return df[["rows", "cols", "entries"]]


def report_to_df(report):
    """Verdicts of an audit report (as produced by AuditReport.to_dict)."""
    counterexamples = report.get("counterexamples", {})
    return pd.DataFrame.from_records(
        [(name, verdict, name in counterexamples)
         for name, verdict in report.items() if name != "counterexamples"],
        columns=["condition", "verdict", "has_counterexample"],
    )


def add_caps_arguments_to_parser(parser):
    """Add the options controlling caps and parallelism to a parser.

    The caps are then applied using:

        apply_caps(parse_kwargs(args.caps))

    """
    parser.add_argument(
        "--caps",
        help="Overrides the enumeration caps. A string of the following "
             "format is expected: 'key1=int:value1,key2=int:value2'. "
             "Known caps: {}.".format(
                 ", ".join(name.lower() for name in sorted(config.caps()))
             ),
    )

    parser.add_argument(
        "--jobs", type=int, default=1, metavar="N",
        help="The number of worker processes. [%(default)d]",
    )


def parse_kwargs(s):
    """Parse command line arguments into Python keyword arguments.

    Converts an arguments string of the form: key1=value1,key2=value2 into
    a dict. Values prefixed with 'int:' or 'float:' are cast. For example
    max_pool=int:64 will be converted to {"max_pool": 64}.

    """
    if s is None:
        return {}

    kwargs = {}
    for argument in s.split(","):
        if "=" not in argument:
            raise ValueError("{}: expected key=value".format(argument))
        key, value = argument.strip().split("=", 1)

        if value.startswith("int:"):
            value = int(value[4:])

        elif value.startswith("float:"):
            value = float(value[6:])

        kwargs[key] = value

    return kwargs


def apply_caps(kwargs):
    """Overrides the caps in the config module, returning the old values."""
    return config.set_caps(**kwargs)
