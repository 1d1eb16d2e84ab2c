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
# Name:        seminorm.py
# Purpose:     Estimate weighted sup seminorms on adaptive grids
#
# Author:      PyCopDyn developers
#
# Created:     11-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Weighted sup seminorms of a function f:

.. code-block:: text

    |f|_{m,n} = sup_x sup_{i<=m} (1+x^2)^(-n) |f^(i)(x)|
    p_{m,v}(f) = sup_x sup_{i<=m} |v(x)| |f^(i)(x)|

A sup over the real line is estimated on the window [-x_max, x_max]. The window is sampled with a regular grid, then
the 8 largest local maxima are refined with a finer grid around them. The estimate carries a tail status telling
whether the weighted integrand is negligible at the window ends:

* ``decaying``: both ends are below 1e-3 of the maximum and shrinking outward;
* ``non-decaying``: one end is above 1e-3 of the maximum and growing outward, the window hides a larger value;
* ``truncated``: anything in between.

An overflowing integrand gives the value +inf with a non-decaying tail. ::

    est = seminorm_Omn(parse("x"), 0, 1)
    est.value, est.witness_x       # (0.5, -1.0)
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Optional, Tuple

import numpy as np

from ..symbol.expr_errors import DomainError, NumericOverflow
from ..symbol.expr_parser import SymbolExpr
from ..symbol.family import General, recognize_family
from ..symbol.jet import check_order

_logger = logging.getLogger("PyCopDyn.Seminorm")

__all__ = ['TailStatus', 'SeminormSamples', 'SeminormEstimate', 'seminorm_Omn', 'seminorm_weighted',
           'weighted_scan', 'DEFAULT_X_MAX', 'DEFAULT_STEP', 'REFINED_STEP']

DEFAULT_X_MAX = 100.0
DEFAULT_STEP = 0.01
REFINED_STEP = 1e-4

#: Relative level below which the weighted integrand counts as negligible at the window ends.
TAIL_LEVEL = 1e-3

#: Number of local maxima refined.
REFINED_MAXIMA = 8


class TailStatus(Enum):
    DECAYING = "decaying"
    NON_DECAYING = "non-decaying"
    TRUNCATED = "truncated"


@dataclass
class SeminormSamples:
    """The coarse grid behind an estimate: |f^(i)(x)| and the weight at every grid point."""
    xs: np.ndarray
    magnitudes: np.ndarray
    weights: np.ndarray

    def rows(self) -> Iterator[Tuple[float, int, float, float]]:
        """(x, i, magnitude, weighted_magnitude) rows, ordered by x then i."""
        for k, x in enumerate(self.xs):
            for i in range(self.magnitudes.shape[0]):
                magnitude = float(self.magnitudes[i, k])
                yield float(x), i, magnitude, magnitude * float(self.weights[k])


@dataclass
class SeminormEstimate:
    """
    :ivar value: the estimated sup
    :ivar witness_x: where the sup is attained
    :ivar witness_i: the derivative order attaining it
    :ivar x_max: half width of the window
    :ivar points: number of coarse grid points
    :ivar tail: behaviour of the weighted integrand at the window ends
    :ivar exact: True only for a polynomial f with a decaying tail and an interior maximum
    :ivar weight_label: text of the weight
    """
    value: float
    witness_x: float
    witness_i: int
    x_max: float
    points: int
    tail: TailStatus
    exact: bool = False
    weight_label: str = ""
    samples: Optional[SeminormSamples] = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness_x": self.witness_x,
            "witness_i": self.witness_i,
            "grid": {"x_max": self.x_max, "points": self.points},
            "tail": self.tail.value,
            "exact": self.exact,
            "weight": self.weight_label,
        }


WeightFunction = Callable[[np.ndarray], np.ndarray]


def _weighted(f, xs: np.ndarray, m: int, weight: WeightFunction):
    """Returns (|f^(i)| of shape (m+1, N), weights, overflow mask). Raises DomainError outside the domain of f."""
    ja = f.jets(xs, m)
    if not ja.domain_ok.all():
        x = xs[np.argmin(ja.domain_ok)]
        raise DomainError(ja.domain_node or str(f), float(x))
    with np.errstate(all='ignore'):
        magnitudes = np.abs(ja.coeffs)
        weights = weight(xs)
    return magnitudes, weights, ja.overflow


def _best(xs: np.ndarray, integrand: np.ndarray) -> Tuple[float, float, int]:
    """Largest entry of the (m+1, N) integrand, ties going to the smallest x then the lowest order."""
    per_point = integrand.max(axis=0)
    top = per_point.max()
    k = int(np.flatnonzero(per_point == top)[0])
    i = int(np.flatnonzero(integrand[:, k] == top)[0])
    return float(top), float(xs[k]), i


def _tail_status(per_point: np.ndarray, top: float) -> TailStatus:
    if top == 0.0:
        return TailStatus.DECAYING
    inward = max(1, per_point.size // 100)
    ends = ((per_point[0], per_point[inward]), (per_point[-1], per_point[-1 - inward]))
    level = TAIL_LEVEL * top
    if all(end < level and end <= inner for end, inner in ends):
        return TailStatus.DECAYING
    if any(end >= level and end > inner for end, inner in ends):
        return TailStatus.NON_DECAYING
    return TailStatus.TRUNCATED


def weighted_scan(f, m: int, weight: WeightFunction, *, x_max: float = DEFAULT_X_MAX, step: float = DEFAULT_STEP,
                  weight_label: str = "") -> SeminormEstimate:
    """
    Estimates sup_x sup_{i<=m} weight(x) |f^(i)(x)| on [-x_max, x_max].

    :param f: the function, a :class:`SymbolExpr` or any object with the same ``jets`` method
    :param m: highest derivative order
    :param weight: vectorized weight function
    :param x_max: half width of the window
    :param step: coarse grid step
    :param weight_label: text describing the weight, copied into the estimate
    :raises DomainError: when f is undefined somewhere in the window
    """
    check_order(m)
    if x_max <= 0 or step <= 0:
        raise ValueError("the window half width and the grid step must be positive")
    points = int(round(2 * x_max / step)) + 1
    xs = np.linspace(-x_max, x_max, points)
    magnitudes, weights, overflow = _weighted(f, xs, m, weight)
    if overflow.any():
        x = float(xs[np.argmax(overflow)])
        _logger.warning("%s overflows at x=%r, seminorm reported as +inf", f, x)
        return SeminormEstimate(math.inf, x, 0, float(x_max), points, TailStatus.NON_DECAYING,
                                weight_label=weight_label, samples=SeminormSamples(xs, magnitudes, weights))
    with np.errstate(all='ignore'):
        integrand = magnitudes * weights[None, :]
    per_point = integrand.max(axis=0)
    best = _best(xs, integrand)

    interior = np.flatnonzero((per_point[1:-1] >= per_point[:-2]) & (per_point[1:-1] >= per_point[2:])) + 1
    candidates = list(interior) + [0, points - 1]
    candidates = sorted(set(candidates), key=lambda k: (-per_point[k], xs[k]))[:REFINED_MAXIMA]
    for k in candidates:
        lo, hi = max(xs[k] - step, -x_max), min(xs[k] + step, x_max)
        fine = np.linspace(lo, hi, int(round((hi - lo) / REFINED_STEP)) + 1)
        fine_magnitudes, fine_weights, fine_overflow = _weighted(f, fine, m, weight)
        if fine_overflow.any():
            continue
        with np.errstate(all='ignore'):
            local = _best(fine, fine_magnitudes * fine_weights[None, :])
        if local[0] > best[0] or (local[0] == best[0] and local[1] < best[1]):
            best = local

    value, witness_x, witness_i = best
    tail = _tail_status(per_point, value)
    if tail is not TailStatus.DECAYING:
        _logger.warning("Weighted integrand of %s is %s at |x|=%g", f, tail.value, x_max)
    exact = False
    if isinstance(f, SymbolExpr) and tail is TailStatus.DECAYING and abs(witness_x) < x_max:
        exact = not isinstance(recognize_family(f), General)
    _logger.debug("Seminorm of %s: %r at x=%r, i=%d", f, value, witness_x, witness_i)
    return SeminormEstimate(value, witness_x, witness_i, float(x_max), points, tail, exact, weight_label,
                            SeminormSamples(xs, magnitudes, weights))


def seminorm_Omn(f, m: int, n: int, *, x_max: float = DEFAULT_X_MAX, step: float = DEFAULT_STEP) -> SeminormEstimate:
    """
    Estimates |f|_{m,n} = sup_x sup_{i<=m} (1+x^2)^(-n) |f^(i)(x)|.

    :param f: the function
    :param m: derivative order, 0 <= m <= 8
    :param n: weight exponent, n >= 0
    :raises DomainError: when f is undefined in the window
    """
    if n < 0:
        raise ValueError("the weight exponent must be non-negative")

    def weight(xs):
        return np.exp(-n * np.log1p(xs * xs))

    return weighted_scan(f, m, weight, x_max=x_max, step=step, weight_label="(1+x^2)^-%d" % n)


def seminorm_weighted(f, m: int, v: SymbolExpr, *, x_max: float = DEFAULT_X_MAX,
                      step: float = DEFAULT_STEP) -> SeminormEstimate:
    """
    Estimates p_{m,v}(f) = sup_x sup_{i<=m} |v(x)| |f^(i)(x)|.

    The tail is reported non-decaying when |v| itself is not below 1e-3 of its maximum at the window ends.

    :raises DomainError: when f or v is undefined in the window
    :raises NumericOverflow: when v overflows in the window
    """

    def weight(xs):
        ja = v.jets(xs, 0)
        if not ja.domain_ok.all():
            raise DomainError(ja.domain_node or str(v), float(xs[np.argmin(ja.domain_ok)]))
        if ja.overflow.any():
            raise NumericOverflow("weight %s" % v)
        return np.abs(ja.coeffs[0])

    estimate = weighted_scan(f, m, weight, x_max=x_max, step=step, weight_label="|%s|" % v)
    ends = weight(np.array([-x_max, x_max]))
    sample = weight(np.linspace(-x_max, x_max, 2001))
    if sample.max() > 0 and ends.max() >= TAIL_LEVEL * sample.max():
        _logger.warning("Weight %s does not decay at |x|=%g", v, x_max)
        estimate.tail = TailStatus.NON_DECAYING
        estimate.exact = False
    return estimate
