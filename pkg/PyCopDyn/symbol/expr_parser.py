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
# Name:        expr_parser.py
# Purpose:     Parse one-variable expressions and evaluate them with derivatives
#
# Author:      PyCopDyn developers
#
# Created:     02-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Symbols φ and test functions f are written as arithmetic expressions in the single variable ``x``.

Grammar
=======

.. code-block:: text

    expression := term (('+' | '-') term)*
    term       := unary (('*' | '/') unary)*
    unary      := ('-' | '+') unary | power
    power      := atom ('^' exponent)*
    exponent   := INTEGER | '-' INTEGER | '(' ['-'] INTEGER ')'
    atom       := NUMBER | 'x' | FUNCTION '(' expression ')' | '(' expression ')'
    FUNCTION   := 'exp' | 'log' | 'sin' | 'cos' | 'tanh'

Numbers accept the decimal and scientific notations (``2``, ``0.5``, ``.5``, ``1e-3``). Only integer exponents are
accepted after ``^``. The unary minus binds looser than ``^``, so ``-x^2`` is ``-(x^2)``.

Parse errors report a 1-based byte offset::

    >>> parse("x^^2")
    ExpressionSyntaxError: expected an integer exponent at offset 3

Evaluation
==========

A parsed :class:`SymbolExpr` can be evaluated at a single point (:meth:`SymbolExpr.evaluate`), have its jet taken at
a point (:meth:`SymbolExpr.jet`) or have its jets computed over a whole numpy grid at once (:meth:`SymbolExpr.jets`).
The vectorized form never raises on domain errors or overflows, it masks the offending points instead.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
import re
from dataclasses import dataclass
from typing import List, NamedTuple, Union

import numpy as np

from .expr_errors import OVERFLOW_GUARD, DomainError, ExpressionSyntaxError, NumericOverflow, UnknownIdentifier
from .jet import (Jet, JetArray, JetContext, check_order, constant_jet, faa_di_bruno, identity_jet, leibniz,
                  outer_derivatives, power_derivatives, quotient)

_logger = logging.getLogger("PyCopDyn.ExprParser")

__all__ = ['parse', 'compose', 'shifted', 'SymbolExpr', 'Node', 'Const', 'Var', 'Neg', 'Sum', 'Product', 'Quotient',
           'Power', 'Func', 'Compose', 'FUNCTION_NAMES']

FUNCTION_NAMES = ('exp', 'log', 'sin', 'cos', 'tanh')

_MATH_FUNCTIONS = {
    'exp': math.exp,
    'log': math.log,
    'sin': math.sin,
    'cos': math.cos,
    'tanh': math.tanh,
}


def _guarded(value: float, node: "Node") -> float:
    if not math.isfinite(value) or abs(value) > OVERFLOW_GUARD:
        raise NumericOverflow(str(node), value)
    return value


# ------------------------------------------------------------------------------------------------------------------
# Expression nodes
# ------------------------------------------------------------------------------------------------------------------

class Node:
    """Base class of the expression tree nodes. Nodes are immutable."""

    def evaluate(self, x: float) -> float:
        raise NotImplementedError

    def _jets(self, var: np.ndarray, ctx: JetContext) -> np.ndarray:
        raise NotImplementedError

    def jets(self, var: np.ndarray, ctx: JetContext) -> np.ndarray:
        """Jets of this node given the jet bound to the variable x."""
        with np.errstate(all='ignore'):
            return ctx.check(self._jets(var, ctx), self)

    def render(self, var: str = "x") -> str:
        """Parseable text, with ``var`` substituted for the variable."""
        raise NotImplementedError

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Const(Node):
    value: float

    def evaluate(self, x):
        return self.value

    def _jets(self, var, ctx):
        return constant_jet(self.value, var.shape[0] - 1, var.shape[1:])

    def render(self, var="x"):
        text = repr(float(self.value))
        return "(%s)" % text if self.value < 0 else text


@dataclass(frozen=True)
class Var(Node):

    def evaluate(self, x):
        return x

    def _jets(self, var, ctx):
        return var

    def render(self, var="x"):
        return var


@dataclass(frozen=True)
class Neg(Node):
    arg: Node

    def evaluate(self, x):
        return -self.arg.evaluate(x)

    def _jets(self, var, ctx):
        return -self.arg.jets(var, ctx)

    def render(self, var="x"):
        return "(-%s)" % self.arg.render(var)


@dataclass(frozen=True)
class Sum(Node):
    left: Node
    right: Node

    def evaluate(self, x):
        return _guarded(self.left.evaluate(x) + self.right.evaluate(x), self)

    def _jets(self, var, ctx):
        return self.left.jets(var, ctx) + self.right.jets(var, ctx)

    def render(self, var="x"):
        if isinstance(self.right, Neg):
            return "(%s - %s)" % (self.left.render(var), self.right.arg.render(var))
        return "(%s + %s)" % (self.left.render(var), self.right.render(var))


@dataclass(frozen=True)
class Product(Node):
    left: Node
    right: Node

    def evaluate(self, x):
        return _guarded(self.left.evaluate(x) * self.right.evaluate(x), self)

    def _jets(self, var, ctx):
        return leibniz(self.left.jets(var, ctx), self.right.jets(var, ctx))

    def render(self, var="x"):
        return "(%s * %s)" % (self.left.render(var), self.right.render(var))


@dataclass(frozen=True)
class Quotient(Node):
    num: Node
    den: Node

    def evaluate(self, x):
        den = self.den.evaluate(x)
        if den == 0.0:
            raise DomainError(str(self), x)
        return _guarded(self.num.evaluate(x) / den, self)

    def _jets(self, var, ctx):
        num = self.num.jets(var, ctx)
        den = self.den.jets(var, ctx)
        bad = den[0] == 0.0
        ctx.flag_domain(bad, self)
        den = den.copy()
        den[0] = np.where(bad, 1.0, den[0])
        return quotient(num, den)

    def render(self, var="x"):
        return "(%s / %s)" % (self.num.render(var), self.den.render(var))


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int

    def evaluate(self, x):
        base = self.base.evaluate(x)
        if base == 0.0 and self.exponent < 0:
            raise DomainError(str(self), x)
        try:
            return _guarded(base ** self.exponent, self)
        except OverflowError:
            raise NumericOverflow(str(self))

    def _jets(self, var, ctx):
        inner = self.base.jets(var, ctx)
        derivs, bad = power_derivatives(inner[0], self.exponent, inner.shape[0] - 1)
        ctx.flag_domain(bad, self)
        return faa_di_bruno(derivs, inner)

    def render(self, var="x"):
        exponent = str(self.exponent) if self.exponent >= 0 else "(%d)" % self.exponent
        return "(%s^%s)" % (self.base.render(var), exponent)


@dataclass(frozen=True)
class Func(Node):
    name: str
    arg: Node

    def evaluate(self, x):
        u = self.arg.evaluate(x)
        if self.name == 'log' and not u > 0.0:
            raise DomainError(str(self), x)
        try:
            return _guarded(_MATH_FUNCTIONS[self.name](u), self)
        except OverflowError:
            raise NumericOverflow(str(self))

    def _jets(self, var, ctx):
        inner = self.arg.jets(var, ctx)
        derivs, bad = outer_derivatives(self.name, inner[0], inner.shape[0] - 1)
        ctx.flag_domain(bad, self)
        return faa_di_bruno(derivs, inner)

    def render(self, var="x"):
        return "%s(%s)" % (self.name, self.arg.render(var))


@dataclass(frozen=True)
class Compose(Node):
    """outer(inner(x)). The variable of the outer tree is bound to the jet of the inner tree."""
    outer: Node
    inner: Node

    def evaluate(self, x):
        return self.outer.evaluate(self.inner.evaluate(x))

    def _jets(self, var, ctx):
        return self.outer.jets(self.inner.jets(var, ctx), ctx)

    def render(self, var="x"):
        return self.outer.render("(%s)" % self.inner.render(var))


# ------------------------------------------------------------------------------------------------------------------
# Public wrapper
# ------------------------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class SymbolExpr:
    """
    A parsed expression. Instances are immutable and can be shared freely between threads and processes.

    :param root: the expression tree
    :param text: the source text, when it was parsed
    """
    root: Node
    text: str = None

    def __str__(self):
        return self.text if self.text is not None else self.root.render()

    def evaluate(self, x: float) -> float:
        """
        Value at a single point.

        :raises DomainError: when a sub-expression is undefined at x
        :raises NumericOverflow: when any intermediate magnitude exceeds the overflow guard
        """
        return float(self.root.evaluate(float(x)))

    def jets(self, xs, m: int) -> JetArray:
        """
        Jets of order m over an array of points. Failing points are masked, see :class:`JetArray`.
        """
        xs = np.asarray(xs, dtype=float)
        ctx = JetContext(xs, m)
        coeffs = self.root.jets(identity_jet(xs, m), ctx)
        coeffs = np.broadcast_to(coeffs, (m + 1,) + xs.shape).copy()
        return JetArray(xs, coeffs, ctx.domain_ok, ctx.overflow, ctx.domain_node, ctx.overflow_node)

    def jet(self, x: float, m: int) -> Jet:
        """
        Jet of order m at x.

        :raises DomainError: when the expression is undefined at x
        :raises NumericOverflow: when a coefficient exceeds the overflow guard
        """
        check_order(m)
        return self.jets(np.array([float(x)]), m).raise_on_failure().jet_at(0)

    def values(self, xs) -> np.ndarray:
        """Values over an array of points, NaN where undefined or overflowing."""
        ja = self.jets(xs, 0)
        return np.where(ja.valid, ja.coeffs[0], np.nan)


def compose(outer: SymbolExpr, inner: SymbolExpr) -> SymbolExpr:
    """Returns the expression outer o inner."""
    return SymbolExpr(Compose(outer.root, inner.root))


def shifted(expr: SymbolExpr, c: float) -> SymbolExpr:
    """Returns the expression expr + c."""
    return SymbolExpr(Sum(expr.root, Const(float(c))))


# ------------------------------------------------------------------------------------------------------------------
# Tokenizer
# ------------------------------------------------------------------------------------------------------------------

class Token(NamedTuple):
    type: str          # 'num', 'var', 'func', 'op', 'end'
    value: Union[str, float]
    text: str
    offset: int        # 1-based byte offset


_NUMBER = re.compile(r'(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?')
_NAME = re.compile(r'[A-Za-z_][A-Za-z_0-9]*')
_INTEGER = re.compile(r'\d+')
_OPERATORS = '+-*/^()'


def tokenize(text: str) -> List[Token]:
    tokens = []
    byte_offset = [0]
    for ch in text:
        byte_offset.append(byte_offset[-1] + len(ch.encode("utf-8")))
    pos = 0
    while pos < len(text):
        ch = text[pos]
        where = byte_offset[pos] + 1
        if ch.isspace():
            pos += 1
            continue
        match = _NUMBER.match(text, pos)
        if match:
            tokens.append(Token('num', float(match.group()), match.group(), where))
            pos = match.end()
            continue
        match = _NAME.match(text, pos)
        if match:
            name = match.group()
            if name == 'x':
                tokens.append(Token('var', name, name, where))
            elif name in FUNCTION_NAMES:
                tokens.append(Token('func', name, name, where))
            else:
                raise UnknownIdentifier(name, where, text)
            pos = match.end()
            continue
        if ch in _OPERATORS:
            tokens.append(Token('op', ch, ch, where))
            pos += 1
            continue
        raise ExpressionSyntaxError(where, "unexpected character '%s'" % ch, text)
    tokens.append(Token('end', '', '', byte_offset[-1] + 1))
    return tokens


# ------------------------------------------------------------------------------------------------------------------
# Pratt parser
# ------------------------------------------------------------------------------------------------------------------

_LEFT_BINDING = {'+': 10, '-': 10, '*': 20, '/': 20, '^': 40}
_PREFIX_BINDING = 30


class _Parser:

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def error(self, token: Token, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(token.offset, message, self.text)

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.type != 'end':
            self.pos += 1
        return token

    def expect(self, op: str) -> Token:
        token = self.advance()
        if token.type != 'op' or token.value != op:
            found = "end of expression" if token.type == 'end' else "'%s'" % token.text
            raise self.error(token, "expected '%s' but found %s" % (op, found))
        return token

    def left_binding(self, token: Token) -> int:
        if token.type == 'op':
            return _LEFT_BINDING.get(token.value, 0)
        return 0

    def expression(self, rbp: int = 0) -> Node:
        left = self.nud(self.advance())
        while rbp < self.left_binding(self.peek()):
            left = self.led(self.advance(), left)
        return left

    def nud(self, token: Token) -> Node:
        if token.type == 'num':
            return Const(token.value)
        if token.type == 'var':
            return Var()
        if token.type == 'func':
            self.expect('(')
            arg = self.expression()
            self.expect(')')
            return Func(token.value, arg)
        if token.type == 'op':
            if token.value == '(':
                inner = self.expression()
                self.expect(')')
                return inner
            if token.value == '-':
                return Neg(self.expression(_PREFIX_BINDING))
            if token.value == '+':
                return self.expression(_PREFIX_BINDING)
        if token.type == 'end':
            raise self.error(token, "unexpected end of expression")
        raise self.error(token, "unexpected '%s'" % token.text)

    def led(self, token: Token, left: Node) -> Node:
        op = token.value
        if op == '+':
            return Sum(left, self.expression(_LEFT_BINDING['+']))
        if op == '-':
            return Sum(left, Neg(self.expression(_LEFT_BINDING['-'])))
        if op == '*':
            return Product(left, self.expression(_LEFT_BINDING['*']))
        if op == '/':
            return Quotient(left, self.expression(_LEFT_BINDING['/']))
        return Power(left, self.integer_exponent())

    def integer_exponent(self) -> int:
        token = self.advance()
        parenthesized = token.type == 'op' and token.value == '('
        if parenthesized:
            token = self.advance()
        sign = 1
        if token.type == 'op' and token.value == '-':
            sign = -1
            token = self.advance()
        if token.type != 'num' or not _INTEGER.fullmatch(token.text):
            raise self.error(token, "expected an integer exponent")
        if parenthesized:
            self.expect(')')
        return sign * int(token.text)

    def parse(self) -> Node:
        root = self.expression()
        token = self.peek()
        if token.type != 'end':
            raise self.error(token, "unexpected '%s'" % token.text)
        return root


def parse(text: str) -> SymbolExpr:
    """
    Parses an expression in the variable ``x``.

    :param text: the expression, for instance ``"0.5*x+1"`` or ``"sin(x^2)"``
    :return: the expression tree
    :raises ExpressionSyntaxError: on malformed text, with the 1-based byte offset of the error
    :raises UnknownIdentifier: on a name other than ``x`` and the supported functions
    """
    root = _Parser(text).parse()
    _logger.debug("Parsed '%s' as %s", text, root.render())
    return SymbolExpr(root, text)
