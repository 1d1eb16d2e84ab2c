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
# Name:        growth_fit.py
# Purpose:     Fit polynomial growth bounds C(1+x^2)^p to sampled magnitudes
#
# Author:      PyCopDyn developers
#
# Created:     11-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Polynomial growth bounds.

Given samples (x, |g(x)|), :func:`fit_growth` looks for the smallest integer p such that |g(x)| <= C (1+x^2)^p is a
credible global bound, and reports the constant C observed over the samples.

The upper envelope of the samples is taken over the outer two decades of |x| (12 logarithmic bins per decade) and a
log-log regression gives its slope on each decade. A polynomial has nearly equal slopes on both. A function growing
faster than every polynomial shows an outer slope well above the inner one, in which case the bound is rejected. ::

    xs = np.linspace(-50, 50, 201)
    fit_growth(zip(xs, np.abs(xs) ** 3))      # GrowthFit(p=2, C=..., verdict='fits')
    fit_growth(zip(xs, np.exp(np.abs(xs))))   # GrowthFit(..., verdict='violated', witness_x=-50.0)
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from ..symbol.expr_errors import InsufficientSamples

_logger = logging.getLogger("PyCopDyn.GrowthFit")

__all__ = ['GrowthFit', 'fit_growth', 'FITS', 'VIOLATED', 'DEFAULT_P_CAP']

FITS = "fits"
VIOLATED = "violated"

DEFAULT_P_CAP = 64
MIN_SAMPLES = 8
MIN_DECADES = 2.0

#: Bins per decade of the envelope.
ENVELOPE_BINS = 12

#: Slack on the outer slope before rounding p up.
SLOPE_SLACK = 0.25

#: A super-polynomial growth shows an outer slope exceeding the inner one by this much...
CONVEXITY_MARGIN = 0.5
#: ...on top of an outer slope above this value.
CONVEXITY_FLOOR = 8.0


@dataclass(frozen=True)
class GrowthFit:
    """
    :ivar p: the integer exponent
    :ivar C: the smallest constant making C(1+x^2)^p dominate every sample
    :ivar residual: largest log-scale excess of a sample over the bound (0 for the fitted samples)
    :ivar verdict: ``fits`` or ``violated``
    :ivar witness_x: abscissa of the sample exposing the violation
    """
    p: int
    C: float
    residual: float
    verdict: str
    witness_x: Optional[float] = None
    inner_slope: float = 0.0
    outer_slope: float = 0.0

    @property
    def fits(self) -> bool:
        return self.verdict == FITS

    def bound(self, x: float) -> float:
        return self.C * (1.0 + x * x) ** self.p

    def check(self, samples: Iterable[Tuple[float, float]]) -> float:
        """Largest log-scale excess of the samples over the bound, 0.0 when they all satisfy it."""
        worst = 0.0
        log_c = math.log(self.C) if self.C > 0 else -math.inf
        for x, magnitude in samples:
            if not magnitude > 0:
                continue
            excess = math.log(magnitude) - log_c - self.p * math.log1p(x * x)
            worst = max(worst, excess)
        return worst

    def to_dict(self) -> dict:
        return {"p": self.p, "C": self.C, "residual": self.residual, "verdict": self.verdict,
                "witness_x": self.witness_x, "inner_slope": self.inner_slope, "outer_slope": self.outer_slope}


def _slope(log_x: np.ndarray, log_y: np.ndarray) -> float:
    if log_x.size == 0:
        return 0.0
    if log_x.size == 1 or np.ptp(log_x) == 0.0:
        return 0.0
    return float(np.polyfit(log_x, log_y, 1)[0])


def _envelope(ax: np.ndarray, mag: np.ndarray, lo: float, hi: float) -> Tuple[np.ndarray, np.ndarray]:
    """Per logarithmic bin, the largest magnitude and the |x| where it occurs."""
    n_bins = max(int(round(ENVELOPE_BINS * math.log10(hi / lo))), 1)
    edges = np.geomspace(lo, hi, n_bins + 1)
    which = np.clip(np.searchsorted(edges, ax, side='right') - 1, 0, n_bins - 1)
    env_x, env_y = [], []
    for b in range(n_bins):
        members = np.flatnonzero(which == b)
        if members.size == 0:
            continue
        k = members[np.argmax(mag[members])]
        if mag[k] > 0:
            env_x.append(ax[k])
            env_y.append(mag[k])
    return np.log(np.array(env_x)), np.log(np.array(env_y))


def fit_growth(samples: Iterable[Tuple[float, float]], *, p_cap: int = DEFAULT_P_CAP) -> GrowthFit:
    """
    Fits |g(x)| <= C (1+x^2)^p over the samples.

    :param samples: pairs (x, magnitude). Non finite pairs are ignored.
    :param p_cap: largest admissible exponent
    :return: the fit. The verdict is ``violated`` when no p <= p_cap is credible.
    :raises InsufficientSamples: with fewer than 8 finite samples, or when the non-zero |x| span less than two
        decades
    """
    data = np.array([(float(x), abs(float(m))) for x, m in samples], dtype=float).reshape(-1, 2)
    data = data[np.isfinite(data).all(axis=1)]
    xs, mag = data[:, 0], data[:, 1]
    ax = np.abs(xs)
    positive = ax[ax > 0]
    decades = math.log10(positive.max() / positive.min()) if positive.size else 0.0
    if xs.size < MIN_SAMPLES or decades < MIN_DECADES:
        raise InsufficientSamples(int(xs.size), decades)

    top = float(positive.max())
    witness = float(xs[np.lexsort((-mag, -ax))[0]])
    mid, bottom = top / 10.0, top / 100.0
    inner = (ax >= bottom) & (ax < mid)
    outer = ax >= mid
    inner_slope = _slope(*_envelope(ax[inner], mag[inner], bottom, mid))
    outer_slope = _slope(*_envelope(ax[outer], mag[outer], mid, top))

    p = max(0, math.ceil((outer_slope - SLOPE_SLACK) / 2.0))
    if (outer_slope - inner_slope > CONVEXITY_MARGIN and outer_slope > CONVEXITY_FLOOR) or p > p_cap:
        _logger.debug("Growth faster than polynomial: slopes %.3g then %.3g", inner_slope, outer_slope)
        return GrowthFit(p=min(p, p_cap), C=math.inf, residual=math.inf, verdict=VIOLATED, witness_x=witness,
                         inner_slope=inner_slope, outer_slope=outer_slope)

    nonzero = mag > 0
    if nonzero.any():
        log_c = float(np.max(np.log(mag[nonzero]) - p * np.log1p(xs[nonzero] ** 2)))
        c = math.exp(log_c) if log_c < 709.0 else math.inf
    else:
        c = 0.0
    fit = GrowthFit(p=p, C=c, residual=0.0, verdict=FITS, inner_slope=inner_slope, outer_slope=outer_slope)
    _logger.debug("Growth fit p=%d C=%.6g (slopes %.3g, %.3g)", p, c, inner_slope, outer_slope)
    return fit
