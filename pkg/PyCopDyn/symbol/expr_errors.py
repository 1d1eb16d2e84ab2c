#!/usr/bin/env python
# coding=utf-8

# -------------------------------------------------------------------------------
#    ____        ____            ____
#   |  _ \ _   _/ ___|___  _ __ |  _ \ _   _ _ __
#   | |_) | | | | |   / _ \| '_ \| | | | | | | '_ \
#   |  __/| |_| | |__| (_) | |_) | |_| | |_| | | | |
#   |_|    \__, |\____\___/| .__/|____/ \__, |_| |_|
#          |___/           |_|          |___/
#
# Name:        expr_errors.py
# Purpose:     Exceptions raised by the PyCopDyn library
#
# Author:      PyCopDyn developers
#
# Created:     02-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
All exceptions raised by the library derive from :class:`CopDynError`, so a caller only interested in knowing that an
analysis failed can catch that single class. ::

    try:
        phi = parse("x^^2")
    except ExpressionSyntaxError as err:
        print(err.offset)   # 3

The command line tool maps these exceptions into exit codes. The library itself never exits.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

__all__ = ['CopDynError', 'ExpressionSyntaxError', 'UnknownIdentifier', 'DomainError', 'NumericOverflow',
           'OrderMismatch', 'UnsupportedOrder', 'InsufficientSamples', 'PreconditionViolated', 'OVERFLOW_GUARD',
           'MAX_ORDER']

#: Any magnitude above this value is considered an overflow.
OVERFLOW_GUARD = 1e150

#: Highest derivative order the jet engine handles.
MAX_ORDER = 8


class CopDynError(Exception):
    """Base class of every error raised by PyCopDyn."""


class ExpressionSyntaxError(CopDynError):
    """
    The expression text could not be parsed.

    :param offset: 1-based byte offset of the offending character. An offset one past the end of the text means the
        expression ended prematurely.
    :type offset: int
    :param message: human-readable explanation
    :type message: str
    :param text: the text being parsed, used for pretty printing
    :type text: str, optional
    """

    def __init__(self, offset: int, message: str, text: str = None):
        self.offset = offset
        self.message = message
        self.text = text
        super().__init__("%s at offset %d" % (message, offset))

    def caret_line(self) -> str:
        """Returns the parsed text with a caret under the offending position, used by the command line tool."""
        if self.text is None:
            return ""
        prefix = self.text.encode("utf-8")[:self.offset - 1].decode("utf-8", errors="ignore")
        return "%s\n%s^" % (self.text, " " * len(prefix))


class UnknownIdentifier(ExpressionSyntaxError):
    """A name other than ``x`` or a supported function name was found."""

    def __init__(self, name: str, offset: int, text: str = None):
        self.name = name
        super().__init__(offset, "unknown identifier '%s'" % name, text)


class DomainError(CopDynError):
    """
    An expression was evaluated outside the domain of one of its nodes, for instance ``log`` of a non-positive value or
    a division by zero.
    """

    def __init__(self, node: str, x: float):
        self.node = node
        self.x = x
        super().__init__("%s is not defined at x=%r" % (node, x))


class NumericOverflow(CopDynError):
    """A value or a derivative exceeded :data:`OVERFLOW_GUARD`."""

    def __init__(self, where: str, value: float = float("inf")):
        self.where = where
        self.value = value
        super().__init__("numeric overflow in %s (|value| > %g)" % (where, OVERFLOW_GUARD))


class OrderMismatch(CopDynError):
    """Two jets of different order were combined."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__("jet orders differ: %d != %d" % (left, right))


class UnsupportedOrder(CopDynError):
    """The requested derivative order is above what the engine (or a given function) supports."""

    def __init__(self, order: int, maximum: int = MAX_ORDER):
        self.order = order
        self.maximum = maximum
        super().__init__("derivative order %d is not supported (maximum is %d)" % (order, maximum))


class InsufficientSamples(CopDynError):
    """A growth fit was requested over too few samples or over a too narrow range of abscissas."""

    def __init__(self, count: int, span: float):
        self.count = count
        self.span = span
        super().__init__("growth fit needs at least 8 samples spanning two decades, got %d samples spanning %.3g "
                         "decades" % (count, span))


class PreconditionViolated(CopDynError):
    """A decision rule was invoked on a symbol that does not meet its hypotheses."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)
