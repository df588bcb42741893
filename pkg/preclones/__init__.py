"""Preclones of operations and matrix collections on finite sets."""

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


from .core import Universe, Operation, Matrix, Verdict
from .operations import (OperationSet, make_projection, identity, eval_op,
                         superpose, compose, block_embedding, all_operations,
                         preclone_closure, is_closed_under_superposition,
                         clone_closure, clone_witness)
from .matrices import (MatrixCollection, make_trivial, make_empty,
                       make_equality, breadth_restrict, union, intersect,
                       right_quotient, left_quotient, membership)
from .minors import (MinorFormationScheme, SkolemAssignment,
                     conjunctive_minor, canonical_scheme, simple_minor_kind)
from .galois import (apply_to_window, preserves, pol, invariants,
                     inv_closure, invariant_family, separating_matrix,
                     separating_collection, separating_family,
                     characterize_check)
from .audit import (CollectionFamily, AuditBounds, AuditReport,
                    audit_required_members, audit_unions, audit_quotients,
                    audit_dividends, audit_conjunctive_minors,
                    audit_locally_closed, audit_all, candidate_pool,
                    mutation_check)
from .terms import (Signature, FiniteAlgebra, Term, parse_term,
                    enumerate_terms, induce_op, induced_set)

try:
    from .version import preclones_version as __version__
except ImportError:
    __version__ = None


__license__ = "MIT"
__status__ = "Development"
