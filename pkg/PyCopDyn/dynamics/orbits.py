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
# Name:        orbits.py
# Purpose:     Orbits of a point under a symbol and their Cesaro means
#
# Author:      PyCopDyn developers
#
# Created:     07-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Iterates φ_n(x) = φ(φ(...φ(x))) of a single point, and the Cesàro means φ_[n](x) = (φ_1(x) + ... + φ_n(x)) / n. ::

    orbit = iterate_point(parse("x^2+1"), 0, 5)
    orbit.values              # [0.0, 1.0, 2.0, 5.0, 26.0, 677.0]
    orbit.terminated_by       # OrbitTermination.COMPLETED

    cesaro_mean_point(parse("x+1"), 0, 10)   # 5.5

An orbit that leaves the overflow guard ends with ``OrbitTermination.OVERFLOW`` and keeps the values computed so far.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from ..symbol.expr_errors import NumericOverflow
from ..symbol.expr_parser import SymbolExpr

_logger = logging.getLogger("PyCopDyn.Orbits")

__all__ = ['OrbitTermination', 'OrbitRecord', 'iterate_point', 'cesaro_mean_point', 'cesaro_series',
           'CONVERGENCE_TOLERANCE', 'CONVERGENCE_STREAK']

#: Relative step size below which an orbit step counts toward convergence.
CONVERGENCE_TOLERANCE = 1e-13

#: Number of consecutive small steps needed to declare convergence.
CONVERGENCE_STREAK = 3


class OrbitTermination(Enum):
    COMPLETED = "completed"
    OVERFLOW = "overflow"
    CONVERGED = "converged"


@dataclass
class OrbitRecord:
    """
    Orbit of ``start``. ``values[k]`` is φ_k(start), values[0] being the start itself.

    When ``terminated_by`` is CONVERGED, ``limit`` and ``tolerance`` hold the detected limit L and the tolerance τ,
    with |values[-1] - L| <= τ and |φ(L) - L| <= 10τ.
    """
    start: float
    values: List[float] = field(default_factory=list)
    terminated_by: OrbitTermination = OrbitTermination.COMPLETED
    limit: Optional[float] = None
    tolerance: Optional[float] = None
    overflow_at: Optional[int] = None

    @property
    def length(self) -> int:
        """Index of the last stored iterate."""
        return len(self.values) - 1

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "values": list(self.values),
            "terminated_by": self.terminated_by.value,
            "limit": self.limit,
            "tolerance": self.tolerance,
            "overflow_at": self.overflow_at,
        }


def _small_step(prev: float, new: float) -> bool:
    return abs(new - prev) < CONVERGENCE_TOLERANCE * (1.0 + abs(prev))


def iterate_point(phi: SymbolExpr, x0: float, n: int, *, stop_on_convergence: bool = False) -> OrbitRecord:
    """
    Computes the orbit x0, φ(x0), ..., φ_n(x0).

    The full orbit is stored unless ``stop_on_convergence`` is set, in which case the iteration stops as soon as
    3 consecutive steps are below the relative tolerance. In both cases the record reports CONVERGED when the last
    3 steps were small and the candidate limit passes the fixed point residual check.

    :param phi: the symbol
    :param x0: starting point
    :param n: number of iterations, n >= 0
    :param stop_on_convergence: stop early on convergence
    :raises DomainError: when the orbit leaves the domain of φ
    :raises ValueError: when n is negative
    """
    if n < 0:
        raise ValueError("the number of iterations cannot be negative")
    record = OrbitRecord(start=float(x0), values=[float(x0)])
    streak = 0
    current = float(x0)
    for k in range(1, n + 1):
        try:
            new = phi.evaluate(current)
        except NumericOverflow:
            record.terminated_by = OrbitTermination.OVERFLOW
            record.overflow_at = k
            _logger.info("Orbit of %r under %s overflows at n=%d", x0, phi, k)
            return record
        streak = streak + 1 if _small_step(current, new) else 0
        record.values.append(new)
        current = new
        if stop_on_convergence and streak >= CONVERGENCE_STREAK:
            break
    if streak >= CONVERGENCE_STREAK:
        limit = record.values[-1]
        tau = CONVERGENCE_TOLERANCE * (1.0 + abs(limit))
        try:
            residual = abs(phi.evaluate(limit) - limit)
        except NumericOverflow:
            residual = math.inf
        if residual <= 10 * tau:
            record.terminated_by = OrbitTermination.CONVERGED
            record.limit = limit
            record.tolerance = tau
            _logger.debug("Orbit of %r converged to %r after %d steps", x0, limit, record.length)
    return record


def cesaro_series(phi: SymbolExpr, x: float, n: int) -> List[float]:
    """
    Returns [φ_[1](x), ..., φ_[n](x)].

    :raises NumericOverflow: when an iterate exceeds the overflow guard
    """
    if n < 1:
        raise ValueError("the Cesaro mean needs n >= 1")
    orbit = iterate_point(phi, x, n)
    if orbit.terminated_by is OrbitTermination.OVERFLOW:
        raise NumericOverflow("iterate %d of %s at x=%r" % (orbit.overflow_at, phi, x))
    means = []
    for k in range(1, n + 1):
        means.append(math.fsum(orbit.values[1:k + 1]) / k)
    return means


def cesaro_mean_point(phi: SymbolExpr, x: float, n: int) -> float:
    """
    Cesàro mean φ_[n](x) = (1/n) Σ_{k=1..n} φ_k(x).

    :raises NumericOverflow: when an iterate exceeds the overflow guard
    :raises ValueError: when n < 1
    """
    if n < 1:
        raise ValueError("the Cesaro mean needs n >= 1")
    orbit = iterate_point(phi, x, n)
    if orbit.terminated_by is OrbitTermination.OVERFLOW:
        raise NumericOverflow("iterate %d of %s at x=%r" % (orbit.overflow_at, phi, x))
    return math.fsum(orbit.values[1:]) / n
