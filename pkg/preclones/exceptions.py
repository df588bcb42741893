"""Module containing exceptions."""

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


from . import logging


class UniverseMismatch(ValueError):
    pass


class ArityMismatch(ValueError):
    pass


class InvalidTable(ValueError):
    pass


class InvalidMatrix(ValueError):
    pass


class InvalidScheme(ValueError):
    pass


class FormatError(ValueError):
    """Raised when a serialized value can't be parsed.

    The offending field is kept so that the command line can report it.

    """
    def __init__(self, field, message):
        self.field = field
        self.message = message
        super().__init__("{}: {}".format(field, message))


class CapExceeded(Exception):
    """Raised when an enumeration would go over one of the configured caps.

    This is not a ValueError: the input is valid, only too large for the
    current limits.

    """
    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(
            "{} would need {:,d} items (cap is {:,d}).".format(what, size, cap)
        )


def check_cap(what, size, cap):
    """Raise CapExceeded if size goes over cap."""
    if size > cap:
        logging.cap_exceeded(what, size, cap)
        raise CapExceeded(what, size, cap)
