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
# Name:        fixed_points.py
# Purpose:     Fixed points of a symbol, their stability, and monotonicity scans
#
# Author:      PyCopDyn developers
#
# Created:     08-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Fixed points of φ are the roots of g(x) = φ(x) - x. They are searched on a finite window sampled with a regular grid:

* every sign change of g between two consecutive grid points is refined with :func:`scipy.optimize.brentq`. Such a
  root is bracketed, so its existence is certified;
* a grid point where g is exactly 0.0 is certified only when its two neighbours have opposite signs. Otherwise it is
  kept as ``tangential``: far from the origin ``x + exp(x) - x`` rounds to 0.0 without any root;
* local minima of |g| without sign change are refined with :func:`scipy.optimize.minimize_scalar` and kept when the
  residual passes. They are flagged ``tangential`` as nothing brackets them.

The window is always part of the result, together with flags telling whether g changes sign beyond each end. ::

    scan = scan_fixed_points(parse("x^3"), interval=(-2, 2), resolution=401)
    [(p.location, p.stability.value) for p in scan.points]
    # [(-1.0, 'repelling'), (0.0, 'super-attracting'), (1.0, 'repelling')]

    monotonicity(parse("x^2")).kind     # Monotonicity.NON_MONOTONE
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from ..symbol.expr_errors import CopDynError, DomainError
from ..symbol.expr_parser import SymbolExpr

_logger = logging.getLogger("PyCopDyn.FixedPoints")

__all__ = ['Stability', 'FixedPoint', 'FixedPointScan', 'Monotonicity', 'MonotonicityResult', 'classify_stability',
           'scan_fixed_points', 'find_fixed_points', 'monotonicity', 'DEFAULT_SCAN_INTERVAL', 'DEFAULT_RESOLUTION',
           'RESIDUAL_TOLERANCE', 'NEUTRAL_TOLERANCE']

DEFAULT_SCAN_INTERVAL = (-1e3, 1e3)
DEFAULT_RESOLUTION = 10_000

#: A root x is accepted when |φ(x) - x| <= RESIDUAL_TOLERANCE * (1 + |x|).
RESIDUAL_TOLERANCE = 1e-12

#: ||φ'| - 1| below this is neutral, |φ'| below this is super-attracting.
NEUTRAL_TOLERANCE = 1e-9

#: Roots closer than this (relative) are merged.
MERGE_TOLERANCE = 1e-9

#: Derivatives with magnitude below this count as zero in monotonicity scans.
MONOTONICITY_TOLERANCE = 1e-12

_ENDPOINT_PROBES = 24


class Stability(Enum):
    ATTRACTING = "attracting"
    REPELLING = "repelling"
    NEUTRAL = "neutral"
    SUPER_ATTRACTING = "super-attracting"


def classify_stability(derivative: float) -> Stability:
    slope = abs(derivative)
    if slope < NEUTRAL_TOLERANCE:
        return Stability.SUPER_ATTRACTING
    if abs(slope - 1.0) <= NEUTRAL_TOLERANCE:
        return Stability.NEUTRAL
    return Stability.ATTRACTING if slope < 1.0 else Stability.REPELLING


@dataclass(frozen=True)
class FixedPoint:
    location: float
    derivative: float
    stability: Stability
    tangential: bool = False
    residual: float = 0.0

    @property
    def certified(self) -> bool:
        """True when the root was bracketed by a sign change, False for tangential roots."""
        return not self.tangential

    def to_dict(self) -> dict:
        return {
            "location": self.location,
            "derivative": self.derivative,
            "stability": self.stability.value,
            "tangential": self.tangential,
            "residual": self.residual,
        }


@dataclass
class FixedPointScan:
    """
    Result of a windowed fixed point search.

    :ivar points: fixed points found inside the window, sorted by location
    :ivar window: the scanned interval
    :ivar resolution: number of grid points
    :ivar possible_roots_below: g changes sign (or nearly vanishes) somewhere below the window
    :ivar possible_roots_above: g changes sign (or nearly vanishes) somewhere above the window
    """
    points: List[FixedPoint] = field(default_factory=list)
    window: Tuple[float, float] = DEFAULT_SCAN_INTERVAL
    resolution: int = DEFAULT_RESOLUTION
    possible_roots_below: bool = False
    possible_roots_above: bool = False

    @property
    def certified_points(self) -> List[FixedPoint]:
        return [p for p in self.points if p.certified]

    @property
    def complete(self) -> bool:
        """True when nothing hints at roots outside the window."""
        return not (self.possible_roots_below or self.possible_roots_above)

    def to_dict(self) -> dict:
        return {
            "points": [p.to_dict() for p in self.points],
            "window": list(self.window),
            "resolution": self.resolution,
            "possible_roots_below": self.possible_roots_below,
            "possible_roots_above": self.possible_roots_above,
        }


def _residual_ok(x: float, residual: float) -> bool:
    return residual <= RESIDUAL_TOLERANCE * (1.0 + abs(x))


def _g(phi: SymbolExpr):
    return lambda x: phi.evaluate(x) - x


def _make_point(phi: SymbolExpr, x: float, tangential: bool) -> Optional[FixedPoint]:
    try:
        residual = abs(phi.evaluate(x) - x)
        slope = phi.jet(x, 1)[1]
    except CopDynError:
        return None
    if not _residual_ok(x, residual):
        return None
    return FixedPoint(float(x), float(slope), classify_stability(slope), tangential, float(residual))


def _merge(points: List[FixedPoint]) -> List[FixedPoint]:
    points = sorted(points, key=lambda p: (p.location, p.tangential))
    merged: List[FixedPoint] = []
    for p in points:
        if merged and abs(p.location - merged[-1].location) <= MERGE_TOLERANCE * (1.0 + abs(p.location)):
            if merged[-1].tangential and not p.tangential:
                merged[-1] = p
            continue
        merged.append(p)
    return merged


def _probe_outside(g, start: float, span: float, direction: int) -> bool:
    """Looks for a sign change, or a near root, of g along geometrically growing distances beyond ``start``."""
    try:
        g0 = g(start)
    except CopDynError:
        return False
    for k in range(1, _ENDPOINT_PROBES + 1):
        x = start + direction * span * (2.0 ** k - 1.0)
        try:
            value = g(x)
        except CopDynError:
            continue
        if value == 0.0 or np.sign(value) != np.sign(g0) or _residual_ok(x, abs(value)):
            return True
    return False


def _grid_values(phi: SymbolExpr, xs: np.ndarray, m: int):
    ja = phi.jets(xs, m)
    if not ja.domain_ok.all():
        x = xs[np.argmin(ja.domain_ok)]
        raise DomainError(ja.domain_node or str(phi), float(x))
    return ja


def scan_fixed_points(phi: SymbolExpr, interval: Tuple[float, float] = DEFAULT_SCAN_INTERVAL,
                      resolution: int = DEFAULT_RESOLUTION) -> FixedPointScan:
    """
    Searches the fixed points of φ inside ``interval``.

    :param phi: the symbol
    :param interval: the window (lo, hi)
    :param resolution: number of grid points, at least 2
    :return: the fixed points with the disclosure of the window
    :raises DomainError: when φ is undefined somewhere on the grid
    :raises ValueError: on an empty interval or a resolution below 2
    """
    lo, hi = float(interval[0]), float(interval[1])
    if not lo < hi:
        raise ValueError("the scan interval must satisfy lo < hi")
    if resolution < 2:
        raise ValueError("the scan needs at least 2 grid points")
    xs = np.linspace(lo, hi, resolution)
    step = (hi - lo) / (resolution - 1)
    ja = _grid_values(phi, xs, 0)
    with np.errstate(all='ignore'):
        gs = np.where(ja.valid, ja.coeffs[0] - xs, np.nan)
    g = _g(phi)

    candidates: List[FixedPoint] = []
    for i in np.flatnonzero(gs == 0.0):
        # an exact zero is certified only between neighbours of opposite sign
        with np.errstate(invalid='ignore'):
            bracketed = bool(0 < i < resolution - 1 and gs[i - 1] * gs[i + 1] < 0.0)
        point = _make_point(phi, xs[i], tangential=not bracketed)
        if point is not None:
            candidates.append(point)

    with np.errstate(invalid='ignore'):
        brackets = np.flatnonzero(gs[:-1] * gs[1:] < 0.0)
    for i in brackets:
        try:
            root = brentq(g, xs[i], xs[i + 1], xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=200)
        except (CopDynError, RuntimeError, ValueError) as err:
            _logger.debug("Refinement in [%r, %r] failed: %s", xs[i], xs[i + 1], err)
            continue
        point = _make_point(phi, root, tangential=False)
        if point is None:
            _logger.debug("Sign change of g near %r is not a root (pole or discontinuity)", root)
        else:
            candidates.append(point)

    magnitude = np.abs(gs)
    for i in range(1, resolution - 1):
        here, left, right = magnitude[i], magnitude[i - 1], magnitude[i + 1]
        if not (np.isfinite(here) and np.isfinite(left) and np.isfinite(right)):
            continue
        if here == 0.0 or here > left or here > right or here > step * (1.0 + abs(xs[i])):
            continue
        if gs[i - 1] * gs[i] <= 0.0 or gs[i] * gs[i + 1] <= 0.0:
            continue

        def absolute_g(x):
            try:
                return abs(g(x))
            except CopDynError:
                return np.inf

        result = minimize_scalar(absolute_g, bounds=(xs[i - 1], xs[i + 1]), method='bounded',
                                 options={'xatol': 1e-14 * (1.0 + abs(xs[i]))})
        point = _make_point(phi, float(result.x), tangential=True)
        if point is not None:
            candidates.append(point)

    points = _merge(candidates)
    span = hi - lo
    scan = FixedPointScan(points=points, window=(lo, hi), resolution=resolution,
                          possible_roots_below=_probe_outside(g, lo, span, -1),
                          possible_roots_above=_probe_outside(g, hi, span, +1))
    _logger.info("Found %d fixed points of %s in [%g, %g]", len(points), phi, lo, hi)
    tangential = [p for p in points if p.tangential]
    if tangential:
        _logger.warning("%d fixed point(s) of %s in [%g, %g] are not bracketed by a sign change, the first near %r",
                        len(tangential), phi, lo, hi, tangential[0].location)
    if not scan.complete:
        _logger.warning("φ(x) - x for %s may vanish outside [%g, %g]", phi, lo, hi)
    return scan


def find_fixed_points(phi: SymbolExpr, interval: Tuple[float, float] = DEFAULT_SCAN_INTERVAL,
                      resolution: int = DEFAULT_RESOLUTION) -> List[FixedPoint]:
    """Fixed points of φ inside the interval, see :func:`scan_fixed_points`."""
    return scan_fixed_points(phi, interval, resolution).points


class Monotonicity(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    NON_MONOTONE = "non-monotone"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MonotonicityResult:
    kind: Monotonicity
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "witness": self.witness}


def monotonicity(phi: SymbolExpr, interval: Tuple[float, float] = DEFAULT_SCAN_INTERVAL,
                 resolution: int = DEFAULT_RESOLUTION) -> MonotonicityResult:
    """
    Classifies φ by the sign of φ' on the scan grid.

    The witness of a non-monotone symbol is the closest pair of grid points across the first sign change of φ'.

    :raises DomainError: when φ is undefined somewhere on the grid
    """
    lo, hi = float(interval[0]), float(interval[1])
    if not lo < hi:
        raise ValueError("the scan interval must satisfy lo < hi")
    if resolution < 2:
        raise ValueError("the scan needs at least 2 grid points")
    xs = np.linspace(lo, hi, resolution)
    ja = _grid_values(phi, xs, 1)
    valid = ja.valid
    slopes = ja.coeffs[1]
    signs = np.where(valid & (slopes > MONOTONICITY_TOLERANCE), 1,
                     np.where(valid & (slopes < -MONOTONICITY_TOLERANCE), -1, 0))
    signed = np.flatnonzero(signs != 0)
    if signed.size and (signs[signed] == 1).all() and signed.size == valid.sum():
        return MonotonicityResult(Monotonicity.INCREASING)
    if signed.size and (signs[signed] == -1).all() and signed.size == valid.sum():
        return MonotonicityResult(Monotonicity.DECREASING)
    for a, b in zip(signed, signed[1:]):
        if signs[a] != signs[b]:
            witness = {"x_left": float(xs[a]), "slope_left": float(slopes[a]),
                       "x_right": float(xs[b]), "slope_right": float(slopes[b])}
            _logger.debug("φ' of %s changes sign between %r and %r", phi, xs[a], xs[b])
            return MonotonicityResult(Monotonicity.NON_MONOTONE, witness)
    return MonotonicityResult(Monotonicity.INCONCLUSIVE)
