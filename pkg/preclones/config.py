"""Global limits and switches."""

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


# Universes are tiny: every enumeration is exponential in their size.
MAX_UNIVERSE = 4

# Largest arity for which operation tables are enumerated.
MAX_ARITY = 3

# Largest matrix breadth (number of columns) for collections.
MAX_BREADTH = 4

# Number of matrices a single collection may hold when enumerated.
MAX_COLLECTION_SIZE = 200000

# Number of operation tables a single enumeration (pol, separating family)
# may go through.
MAX_TABLES = 70000

# Number of entries of a single operation table.
MAX_TABLE_ENTRIES = 1 << 20

# Number of Skolem assignments tried for a single candidate matrix.
MAX_SKOLEM_ASSIGNMENTS = 4096

# Number of candidate collections tried by the dividend and local closure
# audits.
MAX_POOL = 4096

# Number of terms enumerated for an induced operation set.
MAX_TERMS = 20000

# Number of closed collections in an invariant family.
MAX_FAMILY = 5000

# Number of minor formation schemes tried by the conjunctive minor audit.
MAX_SCHEMES = 200000

LOG_CLOSURE_ROUNDS = True


def caps():
    """Returns the current caps as a dict (name to value)."""
    return {
        name: value for name, value in globals().items()
        if name.startswith("MAX_")
    }


def set_caps(**kwargs):
    """Overrides some caps, returning the previous values.

    Keys are case insensitive cap names, with or without the "max_" prefix.

    """
    previous = {}
    current = globals()
    for key, value in kwargs.items():
        name = key.upper()
        if not name.startswith("MAX_"):
            name = "MAX_" + name

        if name not in current:
            raise ValueError("{}: unknown cap".format(key))

        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError("{}: caps are non negative integers".format(key))

        previous[name] = current[name]
        current[name] = value

    return previous
