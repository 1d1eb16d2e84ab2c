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
# Name:        counterexamples.py
# Purpose:     The bump sequence and the sin(x^2) blow up, measured
#
# Author:      PyCopDyn developers
#
# Created:     18-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Two constructions that show how the weighted spaces differ from C^m.

The bump sequence f_n (see :class:`~PyCopDyn.seminorms.bump.BumpFunction`) converges to 0 in every C^m, yet
|f_n|_{0,p} >= n for n >= p, so it is unbounded in O^m. ::

    series = counterexample_bump_sequence(1, range(1, 9))
    series.summary          # "pass"

With φ(x) = x^2 and f = sin, the weighted derivative of order 2(n0+1) of f o φ grows at least like x_k^2 along
x_k^2 = π/2 + 2kπ, so f o φ leaves O_C although both f and φ belong to it. ::

    series = counterexample_sin_x_squared(1, range(1, 7))
    series.values           # strictly increasing
    min(series.ratios)      # positive
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from ..raw.series_write import SeriesWrite, Trace
from ..seminorms.bump import BumpFunction
from ..seminorms.seminorm import SeminormEstimate, seminorm_Omn
from ..symbol.expr_errors import MAX_ORDER, PreconditionViolated, UnsupportedOrder
from ..symbol.expr_parser import parse

_logger = logging.getLogger("PyCopDyn.Counterexamples")

__all__ = ['BumpSeries', 'SinSquareSeries', 'counterexample_bump_sequence', 'counterexample_sin_x_squared',
           'PASS', 'FAIL', 'NO_CLAIM']

PASS = "pass"
FAIL = "fail"
NO_CLAIM = "no claim in range"

#: Relative slack of the check |f_n|_{0,p} >= n.
BUMP_SLACK = 1e-9

SIN_X_SQUARED = "sin(x^2)"


@dataclass
class BumpSeries:
    """
    :ivar p: the weight exponent
    :ivar ns: the bump indices
    :ivar estimates: |f_n|_{0,p} for each n
    """
    p: int
    ns: List[int]
    estimates: List[SeminormEstimate]
    citation: str = "bump-unbounded"

    @property
    def values(self) -> List[float]:
        return [e.value for e in self.estimates]

    @property
    def claims(self) -> List[bool]:
        """True where the lower bound n is claimed, that is n >= p."""
        return [n >= self.p for n in self.ns]

    @property
    def holds(self) -> List[bool]:
        return [v >= n * (1.0 - BUMP_SLACK) for n, v in zip(self.ns, self.values)]

    @property
    def summary(self) -> str:
        checked = [h for c, h in zip(self.claims, self.holds) if c]
        if not checked:
            return NO_CLAIM
        return PASS if all(checked) else FAIL

    def to_series(self) -> SeriesWrite:
        series = SeriesWrite()
        series.add_trace(Trace("n", self.ns))
        series.add_trace(Trace("value", self.values))
        series.add_trace(Trace("witness_x", [e.witness_x for e in self.estimates]))
        series.add_trace(Trace("claimed", self.claims))
        return series

    def to_dict(self) -> dict:
        return {
            "which": "bump",
            "p": self.p,
            "n": list(self.ns),
            "values": self.values,
            "summary": self.summary,
            "citation": self.citation,
        }


def counterexample_bump_sequence(p: int, n_range: Iterable[int]) -> BumpSeries:
    """
    Estimates |f_n|_{0,p} = sup_x (1+x^2)^(-p) |f_n(x)| for every n in n_range.

    The window is [-(n+2), n+2], which holds the support [n, n+1] of f_n.

    :raises PreconditionViolated: when p < 1
    """
    if p < 1:
        raise PreconditionViolated("the bump sequence needs a weight p >= 1, got %d" % p)
    ns = [int(n) for n in n_range]
    estimates = [seminorm_Omn(BumpFunction(n), 0, p, x_max=n + 2.0) for n in ns]
    series = BumpSeries(p, ns, estimates)
    _logger.info("Bump sequence with p=%d over n=%s: %s", p, ns, series.summary)
    return series


@dataclass
class SinSquareSeries:
    """
    :ivar n0: the weight exponent, the derivative order being 2(n0+1)
    :ivar ks: the indices k
    :ivar xs: the abscissas x_k = sqrt(π/2 + 2kπ)
    :ivar values: (1+x_k^2)^(-n0) |(sin o x^2)^(2(n0+1))(x_k)|
    """
    n0: int
    ks: List[int]
    xs: List[float]
    values: List[float]
    citation: str = "OC-not-closed"

    @property
    def order(self) -> int:
        return 2 * (self.n0 + 1)

    @property
    def ratios(self) -> List[float]:
        """values divided by x_k^2."""
        return [v / (x * x) for x, v in zip(self.xs, self.values)]

    @property
    def increasing(self) -> bool:
        return all(b > a for a, b in zip(self.values, self.values[1:]))

    @property
    def summary(self) -> str:
        if not self.values:
            return NO_CLAIM
        return PASS if self.increasing and min(self.ratios) > 0 else FAIL

    def to_series(self) -> SeriesWrite:
        series = SeriesWrite()
        series.add_trace(Trace("k", self.ks))
        series.add_trace(Trace("x_k", self.xs))
        series.add_trace(Trace("value", self.values))
        series.add_trace(Trace("ratio", self.ratios))
        return series

    def to_dict(self) -> dict:
        return {
            "which": "sinsq",
            "n0": self.n0,
            "order": self.order,
            "k": list(self.ks),
            "values": list(self.values),
            "min_ratio": min(self.ratios) if self.values else None,
            "summary": self.summary,
            "citation": self.citation,
        }


def counterexample_sin_x_squared(n0: int, k_range: Iterable[int]) -> SinSquareSeries:
    """
    Weighted derivatives of sin(x^2) of order 2(n0+1) at x_k^2 = π/2 + 2kπ.

    :param n0: weight exponent, 1 <= n0 <= 3
    :param k_range: the indices k >= 0
    :raises UnsupportedOrder: when 2(n0+1) > 8
    :raises NumericOverflow: when a jet overflows
    """
    if n0 < 1:
        raise PreconditionViolated("n0 must be at least 1, got %d" % n0)
    order = 2 * (n0 + 1)
    if order > MAX_ORDER:
        raise UnsupportedOrder(order)
    ks = [int(k) for k in k_range]
    xs = np.sqrt(np.array([math.pi / 2 + 2 * k * math.pi for k in ks], dtype=float))
    ja = parse(SIN_X_SQUARED).jets(xs, order).raise_on_failure()
    values = np.abs(ja.coeffs[order]) * (1.0 + xs * xs) ** (-n0)
    series = SinSquareSeries(n0, ks, [float(x) for x in xs], [float(v) for v in values])
    _logger.info("sin(x^2) with n0=%d over k=%s: %s", n0, ks, series.summary)
    return series
