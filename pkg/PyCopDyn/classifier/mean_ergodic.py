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
# Name:        mean_ergodic.py
# Purpose:     Necessary conditions for mean ergodicity of C_φ
#
# Author:      PyCopDyn developers
#
# Created:     15-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
A battery of necessary conditions for C_φ to be mean ergodic. Passing every check is evidence, never a proof, so the
battery returns EmpiricalTrue at best. A failed structural check gives ProvenFalse.

The checks, in order:

1. ``sup_K |φ_n|/n`` decays: its maximum over the late iterates is at most 0.6 times the one over the earlier ones;
2. the Cesàro means φ_[n] settle on K: their oscillation over the late iterates shrinks against the earlier one;
3. no escaping tail: φ(x) - x keeps a sign bounded away from 0 beyond some β, with φ increasing there. The tail is
   certified exactly for polynomials (real root bounds), sampled otherwise;
4. an increasing φ other than the identity has exactly one fixed point.

::

    verdicts = mean_ergodic_necessary(parse("x+1"))
    summarize(verdicts).status                  # ProvenFalse, witness phi_n(beta)/n = 1
    summarize(mean_ergodic_necessary(parse("0.5*x+1"))).status      # EmpiricalTrue
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..dynamics.iterate_jets import iterate_jets
from ..dynamics.orbits import OrbitTermination, iterate_point
from ..symbol.expr_errors import DomainError, PreconditionViolated
from ..symbol.expr_parser import SymbolExpr
from ..symbol.family import Family, General, recognize_family
from ..utils.real_roots import poly_derivative, root_bound, to_fractions
from .cyclicity import SymbolProfile, symbol_profile
from .verdict import Property, Provenance, SpaceTag, Status, Verdict

_logger = logging.getLogger("PyCopDyn.MeanErgodic")

__all__ = ['mean_ergodic_necessary', 'summarize', 'DEFAULT_COMPACT', 'MIN_ITERATIONS']

DEFAULT_COMPACT = (-5.0, 5.0)
DEFAULT_POINTS = 41
MIN_ITERATIONS = 10

RATIO_DECAY = 0.6
CESARO_CONTRACTION = 0.75

#: Smallest gap between φ(x) and x accepted on a sampled tail.
TAIL_GAP = 1e-6
TAIL_SAMPLES = 64
TAIL_END = 1e3


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def _sign_at(p: Sequence[Fraction], direction: int) -> int:
    """Sign of a non-zero polynomial at +infinity (direction 1) or -infinity (direction -1)."""
    degree = len(p) - 1
    return _sign(p[-1]) * (direction ** degree)


def escaping_tail(family: Family) -> Optional[Tuple[int, int, float]]:
    """
    Certified escaping tail of a polynomial symbol.

    :return: (direction, β, δ) such that direction * (φ(x) - x) >= δ and φ'(x) > 0 for every x beyond β in that
        direction, or None when neither tail escapes
    """
    p = to_fractions(family.coeffs)
    p = p + [Fraction(0)] * max(0, 2 - len(p))
    d = poly_derivative(p)
    g = list(p)
    g[1] -= 1
    g = to_fractions(g)
    if not g or not d:
        return None
    if len(g) == 1:
        # translation x + b
        return _sign(g[0]), 0, float(abs(g[0]))
    for direction in (1, -1):
        if _sign_at(g, direction) == direction and _sign_at(d, direction) > 0:
            h = list(g)
            h[0] -= direction
            beta = math.ceil(max(root_bound(h), root_bound(d)))
            return direction, direction * beta, 1.0
    return None


def _tail_verdict(phi: SymbolExpr, direction: int, beta: float, delta: float, n_max: int, provenance: Provenance,
                  space: Optional[SpaceTag]) -> Verdict:
    status = Status.PROVEN_FALSE if provenance is Provenance.STRUCTURAL else Status.EMPIRICAL_FALSE
    witnesses = [("beta", beta), ("delta", delta), ("direction", direction)]
    orbit = iterate_point(phi, beta, n_max)
    if orbit.terminated_by is OrbitTermination.OVERFLOW:
        witnesses.append(("overflow_at", orbit.overflow_at))
    else:
        witnesses.append(("n", n_max))
        witnesses.append(("phi_n(beta)/n", orbit.values[-1] / n_max))
    return Verdict(Property.MEAN_ERGODIC, status, "me-escape-above-diagonal", witnesses=tuple(witnesses),
                   provenance=provenance, space=space, note="φ_n(β) >= β + nδ in the escaping direction")


def _sampled_tail(phi: SymbolExpr, K: Tuple[float, float]) -> Optional[Tuple[int, float, float]]:
    start = max(abs(K[0]), abs(K[1])) + 1.0
    for direction in (1, -1):
        ts = direction * np.geomspace(start, TAIL_END, TAIL_SAMPLES)
        ja = phi.jets(ts, 1)
        if not ja.valid.all():
            _logger.debug("Tail of %s in direction %d not fully evaluable", phi, direction)
            continue
        gap = direction * (ja.coeffs[0] - ts)
        if gap.min() > TAIL_GAP and (ja.coeffs[1] > 0).all():
            return direction, float(ts[0]), float(gap.min())
    return None


def _orbit_grid(phi: SymbolExpr, xs: np.ndarray, n_max: int):
    """Orbit values over the grid, shape (n_max, len(xs)). Returns (values, None) or (None, overflow witness)."""
    values = np.empty((n_max, xs.size))
    for n, ja in iterate_jets(phi, xs, n_max, 0):
        if not ja.domain_ok.all():
            raise DomainError(ja.domain_node or str(phi), float(xs[np.argmin(ja.domain_ok)]))
        if ja.overflow.any():
            return None, (("x", float(xs[np.argmax(ja.overflow)])), ("overflow_at", n))
        values[n - 1] = ja.coeffs[0]
    return values, None


def _ratio_check(values: np.ndarray, xs: np.ndarray, space) -> Verdict:
    n_max = values.shape[0]
    half, quarter = n_max // 2, n_max // 4
    # maxima over n in (n_max/2, n_max] and (n_max/4, n_max/2]
    r_full = float(np.abs(values[half:]).max()) / n_max
    r_half = float(np.abs(values[quarter:half]).max()) / half
    worst = int(np.argmax(np.abs(values[-1])))
    witnesses = (("x", float(xs[worst])), ("n", n_max), ("phi_n(x)/n", float(values[-1, worst]) / n_max),
                 ("ratio_at_half", r_half))
    if r_full <= RATIO_DECAY * r_half + 1e-12:
        return Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_TRUE, "me-iterates-over-n", witnesses=witnesses,
                       space=space, note="sup |φ_n|/n decays on K")
    return Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_FALSE, "me-iterates-over-n", witnesses=witnesses,
                   space=space, note="sup |φ_n|/n does not decay on K")


def _cesaro_check(values: np.ndarray, xs: np.ndarray, space) -> Verdict:
    n_max = values.shape[0]
    means = np.cumsum(values, axis=0) / np.arange(1, n_max + 1)[:, None]
    quarter, half = n_max // 4, n_max // 2
    # oscillation of φ_[n] over n in [n_max/4, n_max/2], then over [n_max/2, n_max]
    early = np.ptp(means[quarter - 1:half], axis=0)
    late = np.ptp(means[half - 1:], axis=0)
    d0, d1 = float(early.max()), float(late.max())
    scale = 1.0 + float(np.abs(means[-1]).max())
    worst = int(np.argmax(late))
    witnesses = (("x", float(xs[worst])), ("early_oscillation", d0), ("late_oscillation", d1))
    if d1 <= CESARO_CONTRACTION * d0 + 1e-9 * scale:
        return Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_TRUE, "me-iterates-over-n", witnesses=witnesses,
                       space=space, note="Cesàro means settle on K")
    return Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_FALSE, "me-iterates-over-n", witnesses=witnesses,
                   space=space, note="Cesàro means do not settle on K")


def _single_fixed_point_check(profile: SymbolProfile, space) -> Optional[Verdict]:
    if profile.exact:
        if profile.fixed_points is None or profile.increasing is not True:
            return None
        points = profile.fixed_points
        complete = True
    else:
        if profile.evidence.get("monotonicity") != "increasing":
            return None
        points = profile.fixed_points
        complete = not profile.evidence.get("possible_roots_outside") \
            and not profile.evidence.get("tangential_fixed_points")
    witnesses = (("fixed_points", list(points[:2])), ("count", len(points)))
    if len(points) >= 2:
        return Verdict(Property.MEAN_ERGODIC, Status.PROVEN_FALSE, "me-single-fixed-point", witnesses=witnesses,
                       provenance=profile.provenance, space=space, note="increasing with several fixed points")
    if len(points) == 1 and complete:
        return Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_TRUE, "me-single-fixed-point", witnesses=witnesses,
                       space=space)
    if not points and profile.exact:
        return Verdict(Property.MEAN_ERGODIC, Status.PROVEN_FALSE, "me-single-fixed-point", witnesses=witnesses,
                       provenance=Provenance.STRUCTURAL, space=space, note="increasing without fixed points")
    if not points and complete:
        return Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_FALSE, "me-single-fixed-point", witnesses=witnesses,
                       space=space, note="no fixed point in the scan window")
    return Verdict(Property.MEAN_ERGODIC, Status.INCONCLUSIVE, "me-single-fixed-point", witnesses=witnesses,
                   space=space)


def mean_ergodic_necessary(phi: SymbolExpr, space: SpaceTag = None, n_max: int = 64,
                           K: Tuple[float, float] = DEFAULT_COMPACT, *, points: int = DEFAULT_POINTS,
                           profile: SymbolProfile = None) -> List[Verdict]:
    """
    Runs the necessary conditions of mean ergodicity on the compact K.

    :param phi: the symbol
    :param space: recorded in the verdicts
    :param n_max: number of iterates, at least 10
    :param K: the compact (a, b)
    :param points: grid size on K
    :param profile: a precomputed :func:`~PyCopDyn.classifier.cyclicity.symbol_profile`
    :return: one MeanErgodic verdict per check that applies, see :func:`summarize`
    :raises PreconditionViolated: when n_max < 10
    :raises DomainError: when an orbit leaves the domain of φ
    """
    if n_max < MIN_ITERATIONS:
        raise PreconditionViolated("the mean ergodic battery needs n_max >= %d, got %d" % (MIN_ITERATIONS, n_max))
    a, b = float(K[0]), float(K[1])
    if not a < b:
        raise ValueError("the compact K must satisfy a < b")
    xs = np.linspace(a, b, points)
    verdicts = []

    values, overflow = _orbit_grid(phi, xs, n_max)
    if overflow is not None:
        verdicts.append(Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_FALSE, "me-iterates-over-n",
                                witnesses=overflow, space=space, note="an orbit from K overflows"))
    else:
        verdicts.append(_ratio_check(values, xs, space))
        verdicts.append(_cesaro_check(values, xs, space))

    family = recognize_family(phi)
    if isinstance(family, General):
        tail = _sampled_tail(phi, (a, b))
        provenance = Provenance.GRID
    else:
        tail = escaping_tail(family)
        provenance = Provenance.STRUCTURAL
    if tail is not None:
        verdicts.append(_tail_verdict(phi, tail[0], tail[1], tail[2], n_max, provenance, space))
    else:
        verdicts.append(Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_TRUE, "me-escape-above-diagonal",
                                space=space, note="no escaping tail"))

    profile = profile or symbol_profile(phi)
    check = _single_fixed_point_check(profile, space)
    if check is not None:
        verdicts.append(check)
    _logger.info("Mean ergodic battery on %s: %s", phi, ", ".join(v.status.value for v in verdicts))
    return verdicts


def summarize(verdicts: List[Verdict], space: SpaceTag = None) -> Verdict:
    """
    One MeanErgodic verdict out of the battery: the first ProvenFalse, else the first EmpiricalFalse, else
    EmpiricalTrue when every check passed, else Inconclusive.
    """
    for status in (Status.PROVEN_FALSE, Status.EMPIRICAL_FALSE):
        for v in verdicts:
            if v.status is status:
                return v
    checks = tuple(("check", v.citation) for v in verdicts)
    if verdicts and all(v.status is Status.EMPIRICAL_TRUE for v in verdicts):
        return Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_TRUE, "me-iterates-over-n", witnesses=checks,
                       space=space, note="every necessary condition holds")
    return Verdict(Property.MEAN_ERGODIC, Status.INCONCLUSIVE, "me-iterates-over-n", witnesses=checks, space=space)
