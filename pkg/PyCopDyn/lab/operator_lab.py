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
# Name:        operator_lab.py
# Purpose:     C_φ^n and its Cesàro means applied to test functions on a compact
#
# Author:      PyCopDyn developers
#
# Created:     18-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Applies the powers of C_φ, C_φ^n f = f o φ_n, to a test function f and samples the result with its derivatives on a
compact K. ::

    g = apply_iterated(parse("sin(x)"), parse("0.5*x+1"), 30, (-3, 3))
    g.values                         # all within 1e-8 of sin(2)

    probe = convergence_probe(parse("sin(x)"), parse("0.5*x+1"), (-3, 3), m=2)
    probe.limit_kind, probe.limit_value    # (LimitKind.CONSTANT, sin(2))

The test function can be a parsed expression or any object with the same ``jets(xs, m)`` method, such as a
:class:`~PyCopDyn.seminorms.bump.BumpFunction`. The jets of f o φ_n are the jets of f taken at φ_n(x), chained with
the jets of φ_n by the Faà di Bruno formula.

A probe only looks at a compact, so it says nothing about the weighted topologies of O^m by itself. On bounded sets of
O^m those topologies agree with the one of C^m, which is what makes the probe meaningful there. That statement is
cited in the probe, not verified.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..dynamics.iterate_jets import iterate_jets
from ..dynamics.orbits import OrbitTermination, iterate_point
from ..raw.series_write import SeriesWrite, Trace
from ..symbol.expr_errors import DomainError, NumericOverflow, PreconditionViolated, UnsupportedOrder
from ..symbol.expr_parser import SymbolExpr
from ..symbol.jet import check_order, faa_di_bruno, identity_jet, overflow_mask

_logger = logging.getLogger("PyCopDyn.OperatorLab")

__all__ = ['SampledFunction', 'ConvergenceProbe', 'LimitKind', 'DeviationSeries', 'apply_iterated',
           'operator_cesaro', 'convergence_probe', 'superposition_continuity_check', 'compact_grid']

DEFAULT_COMPACT = (-3.0, 3.0)
DEFAULT_POINTS = 201

LIMIT_TOLERANCE = 1e-6
LIMIT_STREAK = 5

SUPERPOSITION_MAX_ORDER = 5
SUPERPOSITION_STEPS = 32
#: The deviation series must decrease from this k on.
MONOTONE_FROM = 8

BOUNDED_SETS_NOTE = "bounded sets of O^m carry the C^m topology (bounded-sets-Cm-topology), cited not verified"


class LimitKind(Enum):
    CONSTANT = "constant"
    FUNCTION = "function"
    NONE_DETECTED = "none-detected"


@dataclass
class SampledFunction:
    """
    A function sampled with its derivatives on a grid of a compact.

    :ivar grid: strictly increasing abscissas
    :ivar jets: array of shape (m+1, N), entry [i, k] is the i-th derivative at grid[k]
    :ivar label: how the samples were obtained
    """
    grid: np.ndarray
    jets: np.ndarray
    label: str = ""

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.jets = np.asarray(self.jets, dtype=float)
        if self.jets.ndim != 2 or self.jets.shape[1] != self.grid.size:
            raise ValueError("jets must have shape (m+1, %d), got %s" % (self.grid.size, self.jets.shape))
        if self.grid.size > 1 and not (np.diff(self.grid) > 0).all():
            raise ValueError("the grid must be strictly increasing")

    @property
    def order(self) -> int:
        return self.jets.shape[0] - 1

    @property
    def values(self) -> np.ndarray:
        return self.jets[0]

    def derivative(self, i: int) -> np.ndarray:
        return self.jets[i]

    def to_series(self) -> SeriesWrite:
        """CSV export: ``x`` then one column per derivative order."""
        series = SeriesWrite()
        series.add_trace(Trace("x", self.grid))
        for i in range(self.order + 1):
            series.add_trace(Trace("d%d" % i, self.jets[i]))
        if self.label:
            series.add_comment(self.label)
        return series


def compact_grid(K: Tuple[float, float], points: int) -> np.ndarray:
    a, b = float(K[0]), float(K[1])
    if not a < b:
        raise ValueError("the compact K=[a, b] needs a < b")
    if points < 2:
        raise ValueError("a compact grid needs at least 2 points")
    return np.linspace(a, b, points)


def _compose(f, inner: np.ndarray) -> np.ndarray:
    """Jets of f o g over the grid, from the jets of g."""
    m = inner.shape[0] - 1
    outer = f.jets(inner[0], m)
    if not outer.domain_ok.all():
        raise DomainError(outer.domain_node or str(f), float(inner[0][np.argmin(outer.domain_ok)]))
    if outer.overflow.any():
        raise NumericOverflow("%s at %r" % (f, float(inner[0][np.argmax(outer.overflow)])))
    coeffs = faa_di_bruno(outer.coeffs, inner)
    bad = overflow_mask(coeffs)
    if bad.any():
        raise NumericOverflow("composition with %s" % f)
    return coeffs


def _iterates(phi: SymbolExpr, xs: np.ndarray, n: int, m: int) -> Iterator[Tuple[int, np.ndarray]]:
    """Yields (k, jets of φ_k) for k = 0 .. n, raising as soon as an orbit fails."""
    yield 0, identity_jet(xs, m)
    for k, ja in iterate_jets(phi, xs, n, m):
        yield k, ja.raise_on_failure().coeffs


def apply_iterated(f, phi: SymbolExpr, n: int, K: Tuple[float, float] = DEFAULT_COMPACT, m: int = 0,
                   points: int = DEFAULT_POINTS) -> SampledFunction:
    """
    Samples C_φ^n f = f o φ_n with its derivatives up to order m on K.

    :param f: the test function
    :param phi: the symbol
    :param n: the power, n >= 0
    :param K: the compact (a, b)
    :param m: derivative order, at most 8
    :param points: grid size
    :raises NumericOverflow: when an orbit or the composition overflows
    :raises DomainError: when an orbit leaves the domain of φ or of f
    """
    if n < 0:
        raise ValueError("the power n cannot be negative")
    check_order(m)
    xs = compact_grid(K, points)
    inner = None
    for _, inner in _iterates(phi, xs, n, m):
        pass
    return SampledFunction(xs, _compose(f, inner), "C_phi^%d %s, phi=%s" % (n, f, phi))


def operator_cesaro(f, phi: SymbolExpr, n: int, K: Tuple[float, float] = DEFAULT_COMPACT, m: int = 0,
                    points: int = DEFAULT_POINTS) -> SampledFunction:
    """
    Samples the Cesàro mean (1/n) Σ_{k=1..n} C_φ^k f on K.

    :raises ValueError: when n < 1
    :raises NumericOverflow: when an orbit or a composition overflows
    """
    if n < 1:
        raise ValueError("the Cesaro mean needs n >= 1")
    check_order(m)
    xs = compact_grid(K, points)
    total = np.zeros((m + 1, xs.size))
    for k, inner in _iterates(phi, xs, n, m):
        if k:
            total += _compose(f, inner)
    return SampledFunction(xs, total / n, "Cesaro mean %d of %s, phi=%s" % (n, f, phi))


@dataclass
class ConvergenceProbe:
    """
    :ivar sup_deviations: entry n is sup_K max_{i<=m} |(f o φ_n)^(i) - L^(i)| for the limit candidate L
    :ivar limit_kind: what was detected
    :ivar limit_value: the constant, when the limit is a constant
    :ivar fixed_point: the fixed point a behind a constant limit f(a)
    :ivar detected_at: first n of the run of deviations below tolerance
    """
    sup_deviations: np.ndarray
    limit_kind: LimitKind
    limit_value: Optional[float] = None
    fixed_point: Optional[float] = None
    detected_at: Optional[int] = None
    tolerance: float = LIMIT_TOLERANCE
    citation: str = "sot-convergence"
    note: str = BOUNDED_SETS_NOTE

    def to_series(self) -> SeriesWrite:
        series = SeriesWrite()
        series.add_trace(Trace("n", range(len(self.sup_deviations))))
        series.add_trace(Trace("sup_deviation", self.sup_deviations))
        return series

    def to_dict(self) -> dict:
        return {
            "limit_kind": self.limit_kind.value,
            "limit_value": self.limit_value,
            "fixed_point": self.fixed_point,
            "detected_at": self.detected_at,
            "tolerance": self.tolerance,
            "citation": self.citation,
            "note": self.note,
            "sup_deviations": [float(d) for d in self.sup_deviations],
        }


def _settles(deviations: np.ndarray, tolerance: float) -> Optional[int]:
    """First n opening a run of LIMIT_STREAK deviations below tolerance that lasts to the end."""
    below = deviations < tolerance
    if below.size < LIMIT_STREAK or not below[-LIMIT_STREAK:].all():
        return None
    start = below.size
    while start > 0 and below[start - 1]:
        start -= 1
    return start


def _deviations(images: List[np.ndarray], limit: np.ndarray) -> np.ndarray:
    return np.array([float(np.max(np.abs(g - limit))) for g in images])


def convergence_probe(f, phi: SymbolExpr, K: Tuple[float, float] = DEFAULT_COMPACT, m: int = 0, n_max: int = 100,
                      *, points: int = DEFAULT_POINTS, tolerance: float = LIMIT_TOLERANCE) -> ConvergenceProbe:
    """
    Looks for the limit of C_φ^n f on K, with derivatives up to order m, among three candidates in turn:

    1. the constant f(a), a being the limit of the orbit of the middle of K when that orbit converges;
    2. the constant 0, for a test function decaying along escaping orbits;
    3. a function, when f o φ_n stops moving.

    A candidate is accepted when the sup deviation stays below ``tolerance`` for the last 5 iterates or more.

    :raises PreconditionViolated: when n_max < 2
    :raises NumericOverflow: when an orbit from K overflows
    """
    if n_max < 2:
        raise PreconditionViolated("the convergence probe needs n_max >= 2, got %d" % n_max)
    check_order(m)
    xs = compact_grid(K, points)
    images = [_compose(f, inner) for _, inner in _iterates(phi, xs, n_max, m)]

    orbit = iterate_point(phi, 0.5 * (xs[0] + xs[-1]), max(n_max, 200), stop_on_convergence=True)
    fixed_point = orbit.limit if orbit.terminated_by is OrbitTermination.CONVERGED else None
    first_deviations = None
    if fixed_point is not None:
        value = float(_compose(f, np.array([[fixed_point]] + [[0.0]] * m))[0, 0])
        limit = np.zeros((m + 1, xs.size))
        limit[0] = value
        deviations = _deviations(images, limit)
        first_deviations = deviations
        start = _settles(deviations, tolerance)
        if start is not None:
            _logger.info("C_phi^n %s converges to the constant %r = f(%r) from n=%d", f, value, fixed_point, start)
            return ConvergenceProbe(deviations, LimitKind.CONSTANT, value, fixed_point, start, tolerance)

    deviations = _deviations(images, np.zeros((m + 1, xs.size)))
    start = _settles(deviations, tolerance)
    if start is not None:
        _logger.info("C_phi^n %s decays to 0 from n=%d", f, start)
        return ConvergenceProbe(deviations, LimitKind.CONSTANT, 0.0, None, start, tolerance)

    steps = np.array([0.0] + [float(np.max(np.abs(b - a))) for a, b in zip(images, images[1:])])
    if _settles(steps, tolerance) is not None:
        deviations = _deviations(images, images[-1])
        start = _settles(deviations, tolerance) or 0
        _logger.info("C_phi^n %s settles on a function from n=%d", f, start)
        return ConvergenceProbe(deviations, LimitKind.FUNCTION, None, None, start, tolerance)

    _logger.info("No limit detected for C_phi^n %s with phi=%s", f, phi)
    return ConvergenceProbe(first_deviations if first_deviations is not None else deviations,
                            LimitKind.NONE_DETECTED, None, fixed_point, None, tolerance)


@dataclass
class DeviationSeries:
    """
    :ivar ks: the perturbation indices k, the perturbed symbol being φ + 1/k
    :ivar deviations: sup_K max_{i<=m} |(f o (φ+1/k))^(i) - (f o φ)^(i)|
    """
    ks: List[int]
    deviations: np.ndarray
    monotone_from: int = MONOTONE_FROM
    citation: str = "superposition-continuity"

    @property
    def eventually_decreasing(self) -> bool:
        """True when the series does not increase from k = monotone_from on, up to rounding."""
        tail = [d for k, d in zip(self.ks, self.deviations) if k >= self.monotone_from]
        return all(b <= a * (1.0 + 1e-9) + 1e-15 for a, b in zip(tail, tail[1:]))

    def to_series(self) -> SeriesWrite:
        series = SeriesWrite()
        series.add_trace(Trace("k", self.ks))
        series.add_trace(Trace("deviation", self.deviations))
        return series


def superposition_continuity_check(f, phi: SymbolExpr, K: Tuple[float, float] = (-2.0, 2.0), m: int = 2,
                                   k_max: int = SUPERPOSITION_STEPS, *,
                                   points: int = DEFAULT_POINTS) -> DeviationSeries:
    """
    Deviations of f o φ_k from f o φ in C^m(K) along the perturbations φ_k = φ + 1/k, k = 1 .. k_max.

    :raises UnsupportedOrder: when m > 5
    :raises DomainError: when φ or a perturbed symbol leaves the domain of f on K
    """
    if m > SUPERPOSITION_MAX_ORDER:
        raise UnsupportedOrder(m, SUPERPOSITION_MAX_ORDER)
    xs = compact_grid(K, points)
    base = phi.jets(xs, m).raise_on_failure().coeffs
    reference = _compose(f, base)
    ks = list(range(1, k_max + 1))
    deviations = []
    for k in ks:
        perturbed = base.copy()
        perturbed[0] += 1.0 / k
        deviations.append(float(np.max(np.abs(_compose(f, perturbed) - reference))))
    series = DeviationSeries(ks, np.array(deviations))
    if not series.eventually_decreasing:
        _logger.warning("Superposition deviations of %s o %s do not decrease from k=%d", f, phi, MONOTONE_FROM)
    return series
