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
# Name:        family.py
# Purpose:     Recognize affine and polynomial symbols
#
# Author:      PyCopDyn developers
#
# Created:     03-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Structural recognition of the symbol families for which the decision rules are exact.

The expression tree is flattened into a :class:`numpy.polynomial.Polynomial` when every node is polynomial (constant
sub-trees such as ``exp(0)`` or ``1/4`` are folded). The flattened polynomial is only trusted after it reproduces the
expression at degree+2 distinct sample points. ::

    recognize_family(parse("2*x-3"))     # Affine(a=2.0, b=-3.0)
    recognize_family(parse("x*x+1"))     # Polynomial(coeffs=(1.0, 0.0, 1.0), degree=2)
    recognize_family(parse("sin(x)+x"))  # General()
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial as NpPolynomial

from .expr_errors import CopDynError
from .expr_parser import Compose, Const, Func, Neg, Node, Power, Product, Quotient, Sum, SymbolExpr, Var

_logger = logging.getLogger("PyCopDyn.Family")

__all__ = ['Affine', 'Polynomial', 'General', 'Family', 'recognize_family', 'to_polynomial']


@dataclass(frozen=True)
class Affine:
    """φ(x) = a·x + b. Constant symbols are Affine with a = 0."""
    a: float
    b: float
    tag = "Affine"

    @property
    def degree(self) -> int:
        return 1 if self.a != 0.0 else 0

    @property
    def coeffs(self) -> Tuple[float, ...]:
        return (self.b, self.a)

    def is_identity(self) -> bool:
        return self.a == 1.0 and self.b == 0.0

    def is_translation(self) -> bool:
        return self.a == 1.0 and self.b != 0.0

    def to_dict(self) -> dict:
        return {"tag": self.tag, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class Polynomial:
    """A polynomial symbol of degree >= 2, coefficients in ascending order."""
    coeffs: Tuple[float, ...]
    degree: int
    tag = "Polynomial"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "coeffs": list(self.coeffs), "degree": self.degree}


@dataclass(frozen=True)
class General:
    """Anything not recognized as a polynomial."""
    tag = "General"

    def to_dict(self) -> dict:
        return {"tag": self.tag}


Family = Union[Affine, Polynomial, General]


def _constant(p: NpPolynomial) -> Optional[float]:
    return float(p.coef[0]) if p.degree() == 0 else None


def to_polynomial(node: Node) -> Optional[NpPolynomial]:
    """Flattens an expression tree into a polynomial, or returns None when a node is not polynomial."""
    if isinstance(node, Const):
        return NpPolynomial([node.value])
    if isinstance(node, Var):
        return NpPolynomial([0.0, 1.0])
    if isinstance(node, Neg):
        p = to_polynomial(node.arg)
        return None if p is None else -p
    if isinstance(node, (Sum, Product)):
        left, right = to_polynomial(node.left), to_polynomial(node.right)
        if left is None or right is None:
            return None
        return left + right if isinstance(node, Sum) else left * right
    if isinstance(node, Quotient):
        num, den = to_polynomial(node.num), to_polynomial(node.den)
        if num is None or den is None:
            return None
        c = _constant(den.trim())
        if c is None or c == 0.0:
            return None
        return num / c
    if isinstance(node, Power):
        base = to_polynomial(node.base)
        if base is None:
            return None
        if node.exponent >= 0:
            return base ** node.exponent
        c = _constant(base.trim())
        if c is None or c == 0.0:
            return None
        return NpPolynomial([c ** node.exponent])
    if isinstance(node, Func):
        arg = to_polynomial(node.arg)
        c = None if arg is None else _constant(arg.trim())
        if c is None:
            return None
        try:
            return NpPolynomial([Func(node.name, Const(c)).evaluate(0.0)])
        except CopDynError:
            return None
    if isinstance(node, Compose):
        outer, inner = to_polynomial(node.outer), to_polynomial(node.inner)
        if outer is None or inner is None:
            return None
        return outer(inner)
    return None


def _verified(expr: SymbolExpr, poly: NpPolynomial) -> bool:
    degree = max(poly.degree(), 0)
    samples = 0.5 + 0.75 * np.arange(degree + 2) - 0.3 * degree
    for x in samples:
        try:
            value = expr.evaluate(float(x))
        except CopDynError:
            return False
        expected = float(poly(x))
        if not math.isclose(value, expected, rel_tol=1e-9, abs_tol=1e-12):
            _logger.debug("Flattened polynomial of %s disagrees at x=%r: %r != %r", expr, x, value, expected)
            return False
    return True


def recognize_family(phi: SymbolExpr) -> Family:
    """
    Classifies a symbol as Affine, Polynomial or General.

    :param phi: the symbol
    :return: Affine(a, b) when the degree is at most 1, Polynomial(coeffs, degree) for degree >= 2, General otherwise
    """
    poly = to_polynomial(phi.root)
    if poly is None:
        return General()
    poly = poly.trim()
    if not _verified(phi, poly):
        return General()
    coeffs = tuple(float(c) for c in poly.coef)
    degree = len(coeffs) - 1
    if degree <= 1:
        family = Affine(a=coeffs[1] if degree == 1 else 0.0, b=coeffs[0])
    else:
        family = Polynomial(coeffs=coeffs, degree=degree)
    _logger.info("Recognized %s as %s", phi, family)
    return family
