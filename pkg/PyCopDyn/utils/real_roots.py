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
# Name:        real_roots.py
# Purpose:     Exact real root counting and isolation for polynomials
#
# Author:      PyCopDyn developers
#
# Created:     05-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Real roots of polynomials with rational coefficients, counted and isolated by :class:`sympy.Poly` over ``QQ``. Every
float is an exact binary fraction, so a recognized polynomial converts without rounding and statements such as
"φ(x) - x has no real root" or "φ' vanishes somewhere" are certified.

Polynomials are passed as lists of coefficients in ascending order, ``[c0, c1, c2]`` being c0 + c1 x + c2 x^2.
Results come back as :class:`fractions.Fraction`. ::

    count_real_roots([0, -1, 0, 1])            # x^3 - x -> 3
    isolate_real_roots([-2, 0, 1])             # x^2 - 2 -> [(lo1, hi1), (lo2, hi2)] around -sqrt(2), sqrt(2)
    sign_change_roots([0, 0, 3])               # 3x^2 -> [] (the double root at 0 does not change sign)
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy as sp
from sympy import QQ

_logger = logging.getLogger("PyCopDyn.RealRoots")

__all__ = ['to_fractions', 'to_poly', 'from_poly', 'poly_derivative', 'root_bound', 'count_real_roots',
           'isolate_real_roots', 'sign_change_roots', 'constant_sign', 'interval_midpoint']

Coefficients = List[Fraction]
Interval = Tuple[Fraction, Fraction]

#: Isolating intervals are refined until narrower than this.
DEFAULT_WIDTH = Fraction(1, 2 ** 44)

_X = sp.Symbol("x", real=True)


def to_fractions(coeffs: Sequence) -> Coefficients:
    """Exact conversion of float (or int, or Fraction) coefficients, trailing zeros removed."""
    p = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    while p and p[-1] == 0:
        p.pop()
    return p


def _rational(value) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def to_poly(coeffs: Sequence) -> sp.Poly:
    """:class:`sympy.Poly` in x over QQ from ascending coefficients."""
    p = to_fractions(coeffs)
    return sp.Poly.from_list([_rational(c) for c in reversed(p)] or [0], _X, domain=QQ)


def from_poly(poly: sp.Poly) -> Coefficients:
    """Ascending Fraction coefficients of a univariate :class:`sympy.Poly`, the zero polynomial giving []."""
    return to_fractions([_fraction(c) for c in reversed(poly.all_coeffs())])


def poly_derivative(coeffs: Sequence) -> Coefficients:
    return from_poly(to_poly(coeffs).diff(_X))


def _non_zero(coeffs: Sequence) -> sp.Poly:
    poly = to_poly(coeffs)
    if poly.is_zero:
        raise ValueError("the zero polynomial has every real number as root")
    return poly


def root_bound(coeffs: Sequence) -> Fraction:
    """
    A bound B such that every real root lies in [-B, B], taken from the isolating intervals. Constants give 0.

    :raises ValueError: for the zero polynomial
    """
    poly = _non_zero(coeffs)
    if poly.degree() < 1:
        return Fraction(0)
    ends = [abs(_fraction(end)) for (lo, hi), _ in poly.intervals() for end in (lo, hi)]
    return max(ends, default=Fraction(0))


def count_real_roots(coeffs: Sequence, lo=None, hi=None) -> int:
    """
    Number of distinct real roots in the half-open interval (lo, hi]. ``None`` stands for -inf or +inf.

    :raises ValueError: for the zero polynomial, whose roots are not isolated
    """
    poly = _non_zero(coeffs)
    if poly.degree() < 1:
        return 0
    inf = None if lo is None else _rational(lo)
    sup = None if hi is None else _rational(hi)
    # sympy counts on the closed interval
    count = int(poly.count_roots(inf, sup))
    if inf is not None and poly.eval(inf) == 0:
        count -= 1
    return count


def _intervals(poly: sp.Poly, width: Fraction) -> List[Tuple[Interval, int]]:
    if poly.degree() < 1:
        return []
    found = [((_fraction(lo), _fraction(hi)), int(k)) for (lo, hi), k in poly.intervals(eps=_rational(width))]
    _logger.debug("Isolated %d real roots of a degree %d polynomial", len(found), poly.degree())
    return found


def isolate_real_roots(coeffs: Sequence, width: Fraction = DEFAULT_WIDTH) -> List[Interval]:
    """
    Closed intervals [lo, hi], each holding exactly one distinct real root, sorted in increasing order and narrower
    than ``width``. A rational root may come back as the point interval (r, r).

    :raises ValueError: for the zero polynomial
    """
    return [interval for interval, _ in _intervals(_non_zero(coeffs), width)]


def interval_midpoint(interval: Interval) -> float:
    lo, hi = interval
    return float((lo + hi) / 2)


def sign_change_roots(coeffs: Sequence, width: Fraction = DEFAULT_WIDTH) -> List[Interval]:
    """Isolating intervals of the real roots of odd multiplicity, i.e. the points where the polynomial changes sign."""
    poly = to_poly(coeffs)
    if poly.is_zero:
        return []
    return [interval for interval, k in _intervals(poly, width) if k % 2 == 1]


def constant_sign(coeffs: Sequence) -> int:
    """+1 when the polynomial is positive on the whole real line, -1 when negative everywhere, 0 otherwise."""
    poly = to_poly(coeffs)
    if poly.is_zero or (poly.degree() >= 1 and poly.count_roots() > 0):
        return 0
    return int(sp.sign(poly.eval(0)))
