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
# Name:        membership.py
# Purpose:     Decide whether a symbol has polynomially bounded derivatives
#
# Author:      PyCopDyn developers
#
# Created:     12-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
A symbol φ belongs to O^m when every derivative φ^(i), i <= m, is bounded by C(1+x^2)^p for some C and p. This is also
the condition for C_φ to map O^m into itself. Recognized polynomials are decided structurally, with p = ceil(d/2).
Anything else is decided from growth fits on a symmetric logarithmic grid. ::

    membership_Om(parse("x^2+1"), 3).status      # Status.PROVEN_TRUE
    membership_Om(parse("sin(x)"), 3).status     # Status.EMPIRICAL_TRUE
    membership_Om(parse("exp(x)"), 0).status     # Status.EMPIRICAL_FALSE

:func:`membership_OM` sweeps the orders 0..m_max and reports one verdict per order.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from typing import List

import numpy as np

from ..classifier.verdict import Property, Provenance, SpaceKind, SpaceTag, Status, Verdict
from ..symbol.expr_errors import MAX_ORDER, DomainError
from ..symbol.expr_parser import SymbolExpr
from ..symbol.family import General, recognize_family
from ..symbol.jet import check_order
from ..utils.sweep_iterators import symmetric_log_grid
from .growth_fit import fit_growth
from .seminorm import DEFAULT_X_MAX

_logger = logging.getLogger("PyCopDyn.Membership")

__all__ = ['membership_Om', 'membership_OM', 'growth_exponents', 'GRID_X_MIN', 'GRID_POINTS']

GRID_X_MIN = 1e-2
GRID_POINTS = 401


def growth_exponents(phi: SymbolExpr, m: int, *, x_max: float = DEFAULT_X_MAX, points: int = GRID_POINTS):
    """
    Growth fits of φ^(i), i = 0..m, over a symmetric logarithmic grid.

    :return: (fits, overflow_x). ``fits`` has one :class:`GrowthFit` per order, ``overflow_x`` is the first abscissa
        where the jets overflow (None when they do not), in which case ``fits`` is empty.
    :raises DomainError: when φ is undefined on the grid
    """
    grid = symmetric_log_grid(GRID_X_MIN, x_max, points)
    ja = phi.jets(grid, m)
    if not ja.domain_ok.all():
        raise DomainError(ja.domain_node or str(phi), float(grid[np.argmin(ja.domain_ok)]))
    if ja.overflow.any():
        order = np.argsort(np.abs(grid), kind='stable')
        first = order[np.argmax(ja.overflow[order])]
        return [], float(grid[first])
    return [fit_growth(zip(grid, np.abs(ja.coeffs[i]))) for i in range(m + 1)], None


def _structural(phi: SymbolExpr, family, m: int, space: SpaceTag, citation: str) -> Verdict:
    p = math.ceil(family.degree / 2)
    return Verdict(Property.SYMBOL_FOR, Status.PROVEN_TRUE, citation,
                   witnesses=(("family", family.tag), ("degree", family.degree), ("p", p)),
                   provenance=Provenance.STRUCTURAL, space=space,
                   note="every derivative of a polynomial of degree d is bounded by C(1+x^2)^ceil(d/2)")


def _from_fits(fits, overflow_x, m: int, space: SpaceTag, citation: str) -> Verdict:
    if overflow_x is not None:
        return Verdict(Property.SYMBOL_FOR, Status.EMPIRICAL_FALSE, citation,
                       witnesses=(("overflow_x", overflow_x),), space=space,
                       note="derivatives exceed the overflow guard inside the window")
    for i, fit in enumerate(fits[:m + 1]):
        if not fit.fits:
            return Verdict(Property.SYMBOL_FOR, Status.EMPIRICAL_FALSE, citation,
                           witnesses=(("derivative", i), ("witness_x", fit.witness_x),
                                      ("outer_slope", fit.outer_slope)), space=space)
    exponents = [fit.p for fit in fits[:m + 1]]
    witnesses = [("p", max(exponents))] + [("p_%d" % i, p) for i, p in enumerate(exponents)]
    return Verdict(Property.SYMBOL_FOR, Status.EMPIRICAL_TRUE, citation, witnesses=tuple(witnesses), space=space)


def membership_Om(phi: SymbolExpr, m: int, *, x_max: float = DEFAULT_X_MAX, points: int = GRID_POINTS) -> Verdict:
    """
    SymbolFor(O^m) verdict.

    :param phi: the symbol
    :param m: derivative order, 0 <= m <= 8
    :raises DomainError: when φ is undefined on the grid
    """
    check_order(m)
    space = SpaceTag(SpaceKind.OM_ORDER, m)
    family = recognize_family(phi)
    if not isinstance(family, General):
        return _structural(phi, family, m, space, "symbol-Om")
    fits, overflow_x = growth_exponents(phi, m, x_max=x_max, points=points)
    verdict = _from_fits(fits, overflow_x, m, space, "symbol-Om")
    _logger.info("%s in O^%d: %s", phi, m, verdict.status.value)
    return verdict


def membership_OM(phi: SymbolExpr, m_max: int = MAX_ORDER, *, x_max: float = DEFAULT_X_MAX,
                  points: int = GRID_POINTS) -> List[Verdict]:
    """
    One SymbolFor verdict per order m = 0..m_max, as a sweep toward O_M. The verdicts are tagged with the space O^m
    of their order, no statement is made about the limit space itself.
    """
    check_order(m_max)
    family = recognize_family(phi)
    if not isinstance(family, General):
        return [_structural(phi, family, m, SpaceTag(SpaceKind.OM_ORDER, m), "symbol-OM") for m in range(m_max + 1)]
    fits, overflow_x = growth_exponents(phi, m_max, x_max=x_max, points=points)
    verdicts = [_from_fits(fits, overflow_x, m, SpaceTag(SpaceKind.OM_ORDER, m), "symbol-OM")
                for m in range(m_max + 1)]
    _logger.info("%s O_M sweep: %s", phi, ", ".join(v.status.value for v in verdicts))
    return verdicts
