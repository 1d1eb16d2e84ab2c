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
# Name:        runaway.py
# Purpose:     Escape of compact sets under the iterates of a monotone symbol
#
# Author:      PyCopDyn developers
#
# Created:     09-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
A symbol is strongly runaway on a compact K = [a, b] when φ_n(K) and K are disjoint for every n >= n0.

For an increasing symbol the image of K is the interval [φ_n(a), φ_n(b)], so only the orbits of a and b are needed.
Escape is certified as soon as one end has left K while moving away from it: if φ_n(a) > b and
φ_n(a) >= φ_{n-1}(a), monotonicity keeps the orbit of a non-decreasing forever. The downward case is symmetric.

Decreasing symbols are handled through φ_2 = φ o φ, which is increasing, applied both to K (even iterates) and to
φ(K) (odd iterates). ::

    is_strongly_runaway(parse("x+1"), (-2, 2))      # RunawayResult(runaway=True, n0=5, reason='escapes', ...)
    is_strongly_runaway(parse("0.5*x+1"), (0, 4))   # runaway=False, reason='fixed-point-in-or-near-K'
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..symbol.expr_errors import NumericOverflow
from ..symbol.expr_parser import SymbolExpr, compose
from .fixed_points import Monotonicity, monotonicity, scan_fixed_points

_logger = logging.getLogger("PyCopDyn.Runaway")

__all__ = ['RunawayResult', 'is_strongly_runaway', 'escape_index']

ESCAPES = "escapes"
FIXED_POINT_IN_K = "fixed-point-in-or-near-K"
PERIODIC_POINT_IN_K = "periodic-point-in-K"
TANGENTIAL_POINT_IN_K = "tangential-fixed-point-in-K"
NO_ESCAPE_CERTIFIED = "no-escape-certified"
NON_MONOTONE = "non-monotone"
OVERFLOW = "overflow"

_K_SCAN_RESOLUTION = 2001


@dataclass(frozen=True)
class RunawayResult:
    """``runaway`` is True, False or None (inconclusive). ``n0`` is only set when runaway is True."""
    runaway: Optional[bool]
    n0: Optional[int]
    reason: str
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        return {"runaway": self.runaway, "n0": self.n0, "reason": self.reason, "witness": self.witness}


def _disjoint(lo: float, hi: float, a: float, b: float) -> bool:
    return lo > b or hi < a


def escape_index(psi: SymbolExpr, start: Tuple[float, float], K: Tuple[float, float], k_max: int) -> Optional[int]:
    """
    For an increasing ψ, the least k0 such that ψ_k([s, t]) and K are disjoint for every k >= k0, or None when the
    escape cannot be certified within k_max iterations.

    :raises NumericOverflow: when an end point orbit overflows before the escape is certified
    """
    s, t = start
    a, b = K
    low, high = [s], [t]
    last_meeting = -1 if _disjoint(s, t, a, b) else 0
    for k in range(1, k_max + 1):
        low.append(psi.evaluate(low[-1]))
        high.append(psi.evaluate(high[-1]))
        if not _disjoint(low[k], high[k], a, b):
            last_meeting = k
            continue
        escaped_up = low[k] > b and low[k] >= low[k - 1]
        escaped_down = high[k] < a and high[k] <= high[k - 1]
        if escaped_up or escaped_down:
            _logger.debug("Escape of [%r, %r] from K certified at k=%d", s, t, k)
            return last_meeting + 1
    return None


def _k_interval(a: float, b: float) -> Tuple[float, float]:
    margin = 1e-6 * (1.0 + max(abs(a), abs(b)))
    return a - margin, b + margin


def _fixed_point_in(psi: SymbolExpr, a: float, b: float):
    """First certified fixed point of psi near [a, b], else the first tangential one, else None."""
    scan = scan_fixed_points(psi, _k_interval(a, b), _K_SCAN_RESOLUTION)
    certified = scan.certified_points
    if certified:
        return certified[0]
    return scan.points[0] if scan.points else None


def is_strongly_runaway(phi: SymbolExpr, K: Tuple[float, float], n_max: int = 100) -> RunawayResult:
    """
    Decides whether the iterates of a monotone φ eventually leave the compact K = [a, b] for good.

    :param phi: the symbol
    :param K: the compact (a, b), a <= b
    :param n_max: iteration budget
    :return: runaway True with the least n0, False with a reason, or None (inconclusive)
    :raises DomainError: propagated from the scans
    """
    a, b = float(K[0]), float(K[1])
    if a > b:
        raise ValueError("the compact K=[a, b] needs a <= b")
    kind = monotonicity(phi).kind
    if kind not in (Monotonicity.INCREASING, Monotonicity.DECREASING):
        _logger.info("%s is %s, strongly runaway analysis is inconclusive", phi, kind.value)
        return RunawayResult(None, None, NON_MONOTONE)

    fixed = _fixed_point_in(phi, a, b)
    if fixed is not None and fixed.tangential:
        return RunawayResult(None, None, TANGENTIAL_POINT_IN_K, {"fixed_point": fixed.location})
    if fixed is not None:
        return RunawayResult(False, None, FIXED_POINT_IN_K, {"fixed_point": fixed.location})

    try:
        if kind is Monotonicity.INCREASING:
            k0 = escape_index(phi, (a, b), (a, b), n_max)
            n0 = k0
        else:
            phi2 = compose(phi, phi)
            periodic = _fixed_point_in(phi2, a, b)
            if periodic is not None and periodic.tangential:
                return RunawayResult(None, None, TANGENTIAL_POINT_IN_K, {"periodic_point": periodic.location})
            if periodic is not None:
                return RunawayResult(False, None, PERIODIC_POINT_IN_K, {"periodic_point": periodic.location})
            half = n_max // 2 + 1
            k_even = escape_index(phi2, (a, b), (a, b), half)
            image = (phi.evaluate(b), phi.evaluate(a))
            k_odd = escape_index(phi2, image, (a, b), half)
            n0 = None if k_even is None or k_odd is None else max(2 * k_even - 1, 2 * k_odd)
    except NumericOverflow as err:
        _logger.info("Orbit overflow before escape was certified: %s", err)
        return RunawayResult(None, None, OVERFLOW)

    if n0 is None or n0 > n_max:
        return RunawayResult(None, None, NO_ESCAPE_CERTIFIED)
    n0 = max(n0, 1)
    _logger.info("%s is strongly runaway on [%g, %g] from n0=%d", phi, a, b, n0)
    return RunawayResult(True, n0, ESCAPES)
