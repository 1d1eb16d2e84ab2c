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
# Name:        iterate_jets.py
# Purpose:     Jets of the iterates of a symbol over a grid
#
# Author:      PyCopDyn developers
#
# Created:     07-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Jets of φ_n over a grid, computed by chaining the chain rule along the orbit: the jet of φ_{n+1} is the jet of φ taken
at φ_n(x) composed with the jet of φ_n at x. The cost is linear in n, the expression φ_n is never expanded. ::

    for n, ja in iterate_jets(parse("0.5*x"), np.linspace(-1, 1, 11), 10, 1):
        print(n, ja.coeffs[1, 0])       # 0.5**n
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from typing import Iterator, Tuple

import numpy as np

from ..symbol.expr_parser import SymbolExpr
from ..symbol.jet import JetArray, JetContext, identity_jet

_logger = logging.getLogger("PyCopDyn.IterateJets")

__all__ = ['iterate_jets', 'iterate_jet_list']


def iterate_jets(phi: SymbolExpr, xs, n_max: int, m: int) -> Iterator[Tuple[int, JetArray]]:
    """
    Yields (n, jets of φ_n over xs) for n = 1 .. n_max.

    Points whose orbit leaves the domain of φ or overflows are masked in the returned :class:`JetArray` and stay masked
    for every later n. The generator stops early once every point is masked.

    :param phi: the symbol
    :param xs: the grid
    :param n_max: last iterate
    :param m: derivative order
    """
    xs = np.asarray(xs, dtype=float)
    ctx = JetContext(xs, m)
    current = identity_jet(xs, m)
    for n in range(1, n_max + 1):
        with np.errstate(all='ignore'):
            current = phi.root.jets(current, ctx)
            current = np.broadcast_to(current, (m + 1,) + xs.shape).copy()
        ja = JetArray(xs, current.copy(), ctx.domain_ok.copy(), ctx.overflow.copy(), ctx.domain_node,
                      ctx.overflow_node)
        yield n, ja
        if not ja.valid.any():
            _logger.debug("Every orbit of %s failed at n=%d", phi, n)
            return
        # failed points are parked at 0, their masks stay set
        current[:, ~ja.valid] = 0.0


def iterate_jet_list(phi: SymbolExpr, xs, n_max: int, m: int) -> list:
    """List version of :func:`iterate_jets`, entry k holding the jets of φ_{k+1}."""
    return [ja for _, ja in iterate_jets(phi, xs, n_max, m)]
