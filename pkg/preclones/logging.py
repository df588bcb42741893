"""Logging utilities."""

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


import logging

from . import config

_logger = logging.getLogger("preclones")


# Standardized messages.
def closure_round(what, round_number, n_new, n_total):
    """Log the progress of a closure computation.

    :param what: The closure being computed.
    :param round_number: The round (starting at 1).
    :param n_new: Number of new elements found in this round.
    :param n_total: Number of elements known after this round.

    """
    if not config.LOG_CLOSURE_ROUNDS:
        return

    _logger.info("{}: round {} found {:,d} new element(s) ({:,d} total)"
                 "".format(what, round_number, n_new, n_total))


def cap_exceeded(what, size, cap):
    _logger.warning("{} needs {:,d} items, over the cap of {:,d}."
                    "".format(what, size, cap))


def not_separable(g):
    _logger.warning("{} belongs to the preclone closure, no separating "
                    "collection exists.".format(g))


def pool_restricted(arity, p_floor, size):
    """Log that a candidate pool only covers supersets of a trivial
    collection.

    """
    _logger.warning(
        "Candidate pool for arity {} restricted to supersets of the trivial "
        "collection of breadth {} ({:,d} candidates).".format(
            arity, p_floor, size,
        )
    )


def audit_failed(condition, witness):
    _logger.warning("Audit '{}' failed: {}".format(condition, witness))


def mutation_survived(member):
    _logger.warning("Removing {} was not detected by any audit."
                    "".format(member))
