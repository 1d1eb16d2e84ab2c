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
# Name:        power_bounded.py
# Purpose:     Empirical power boundedness and the monotone symbol analysis
#
# Author:      PyCopDyn developers
#
# Created:     15-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Power boundedness of C_φ on O^m means one polynomial bound C(1+x^2)^p for every derivative φ_n^(i), i <= m, uniformly
in n. :func:`power_bounded_empirical` chains the jets of φ along the orbits of a symmetric logarithmic grid, pools the
samples of all iterates and asks :func:`~PyCopDyn.seminorms.growth_fit.fit_growth` for one bound per order. ::

    power_bounded_empirical(parse("0.5*x"), m=1).status      # EmpiricalTrue, p_0 = 1, p_1 = 0
    power_bounded_empirical(parse("2*x"), m=0).witness("x")   # 1.0, with φ_n(1) = 2^n

For monotone symbols :func:`monotone_pb_analysis` looks for an attracting fixed point instead. A decreasing symbol is
analysed through φ_2.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from typing import List, Optional

import numpy as np

from ..dynamics.fixed_points import Monotonicity, monotonicity, scan_fixed_points
from ..dynamics.iterate_jets import iterate_jets
from ..dynamics.orbits import OrbitTermination, iterate_point
from ..seminorms.growth_fit import fit_growth
from ..seminorms.membership import GRID_X_MIN
from ..symbol.expr_errors import CopDynError, DomainError, InsufficientSamples, PreconditionViolated
from ..symbol.expr_parser import SymbolExpr, compose
from ..symbol.family import Affine, General, recognize_family
from ..symbol.jet import check_order
from ..utils.sweep_iterators import symmetric_log_grid
from .cyclicity import symbol_profile
from .polynomial_rules import classify_polynomial
from .verdict import Property, Provenance, SpaceKind, SpaceTag, Status, Verdict

_logger = logging.getLogger("PyCopDyn.PowerBounded")

__all__ = ['power_bounded_empirical', 'monotone_pb_analysis', 'monotone_kind', 'GROWTH_FACTOR', 'ATTRACTION_MARGIN']

DEFAULT_X_MAX = 20.0
DEFAULT_POINTS = 161

#: Magnitudes growing by this factor between the first and second half of the iterates count as growth in n.
GROWTH_FACTOR = 1.5

#: An attracting fixed point needs |φ'(a)| < 1 - ATTRACTION_MARGIN.
ATTRACTION_MARGIN = 1e-9

INVOLUTION_SAMPLES = 32
PROBE_ITERATIONS = 5000
MONOTONE_SCAN_RESOLUTION = 4001
ORBIT_PREFIX = 8


def _witness_key(x: float):
    """Preference order of witnesses: non-zero, |x| close to 1, positive first."""
    return x == 0.0, abs(abs(x) - 1.0), x < 0.0, abs(x)


def _orbit_prefix(phi: SymbolExpr, x: float) -> list:
    return iterate_point(phi, x, ORBIT_PREFIX).values


def power_bounded_empirical(phi: SymbolExpr, m: int = 1, n_max: int = 64, *, x_max: float = DEFAULT_X_MAX,
                            points: int = DEFAULT_POINTS, space: SpaceTag = None) -> Verdict:
    """
    PowerBounded verdict from the iterates φ_1 .. φ_{n_max} and their derivatives up to order m.

    The verdict is EmpiricalFalse when an orbit overflows (the witness is the orbit escaping last), when a magnitude
    keeps growing in n at a fixed point of the grid, or when no polynomial bound fits the pooled samples of some
    order. It is EmpiricalTrue otherwise, with the exponents p_i of the bounds.

    :param phi: the symbol
    :param m: derivative order, at most 8
    :param n_max: number of iterates, at least 2
    :param x_max: half width of the grid
    :param points: grid size
    :param space: recorded in the verdict, O^m by default
    :raises DomainError: when an orbit leaves the domain of φ
    """
    check_order(m)
    if n_max < 2:
        raise ValueError("the power bounded test needs n_max >= 2")
    space = space or SpaceTag(SpaceKind.OM_ORDER, m)
    citation = "iterate-bound-OM" if space.kind is SpaceKind.OM else "iterate-bound-Om"
    grid = symmetric_log_grid(GRID_X_MIN, x_max, points)
    magnitudes = np.zeros((n_max, m + 1, grid.size))
    overflow_at = np.zeros(grid.size, dtype=int)
    last = 0
    for n, ja in iterate_jets(phi, grid, n_max, m):
        if not ja.domain_ok.all():
            raise DomainError(ja.domain_node or str(phi), float(grid[np.argmin(ja.domain_ok)]))
        newly = ja.overflow & (overflow_at == 0)
        overflow_at[newly] = n
        magnitudes[n - 1] = np.where(ja.valid, np.abs(ja.coeffs), 0.0)
        last = n

    if overflow_at.any():
        failed = np.flatnonzero(overflow_at)
        latest = overflow_at[failed].max()
        candidates = [float(grid[k]) for k in failed if overflow_at[k] == latest]
        x = min(candidates, key=lambda v: (abs(v), v < 0.0))
        verdict = Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_FALSE, citation,
                          witnesses=(("x", x), ("overflow_at", int(latest)), ("orbit", _orbit_prefix(phi, x))),
                          space=space, note="%d of %d orbits overflow" % (failed.size, grid.size))
        _logger.info("%s: power bounded test overflows at n=%d", phi, latest)
        return verdict

    half = last // 2
    first = magnitudes[:half].max(axis=0)
    second = magnitudes[half:last].max(axis=0)
    growing = second > GROWTH_FACTOR * np.maximum(first, 1.0)
    if growing.any():
        orders, cols = np.nonzero(growing)
        pairs = sorted(zip(cols, orders), key=lambda c: (_witness_key(float(grid[c[0]])), c[1]))
        col, i = pairs[0]
        x = float(grid[col])
        n_at = int(np.argmax(magnitudes[:last, i, col])) + 1
        witnesses = (("x", x), ("i", int(i)), ("n", n_at), ("magnitude", float(magnitudes[n_at - 1, i, col])),
                     ("orbit", _orbit_prefix(phi, x)))
        _logger.info("%s: |φ_n^(%d)(%r)| grows with n", phi, i, x)
        return Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_FALSE, citation, witnesses=witnesses, space=space,
                       note="magnitudes grow in n at a fixed grid point")

    exponents = []
    for i in range(m + 1):
        samples = [(x, magnitudes[n, i, k]) for n in range(last) for k, x in enumerate(grid)]
        try:
            fit = fit_growth(samples)
        except InsufficientSamples as err:
            _logger.warning("No growth fit for order %d: %s", i, err)
            return Verdict(Property.POWER_BOUNDED, Status.INCONCLUSIVE, citation, witnesses=(("i", i),), space=space)
        if not fit.fits:
            return Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_FALSE, citation,
                           witnesses=(("i", i), ("x", fit.witness_x), ("outer_slope", fit.outer_slope)), space=space,
                           note="no polynomial bound fits the pooled iterates")
        exponents.append((i, fit.p, fit.C))
    witnesses = [("p", max(p for _, p, _ in exponents)), ("n_max", last)]
    witnesses += [("p_%d" % i, p) for i, p, _ in exponents]
    witnesses += [("C_%d" % i, c) for i, _, c in exponents]
    _logger.info("%s: one bound fits %d iterates", phi, last)
    return Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_TRUE, citation, witnesses=tuple(witnesses), space=space)


def monotone_kind(phi: SymbolExpr) -> Monotonicity:
    """Monotonicity of φ, exact for polynomials. Constants count as increasing."""
    family = recognize_family(phi)
    if isinstance(family, General):
        return monotonicity(phi).kind
    if isinstance(family, Affine) and family.a == 0.0:
        return Monotonicity.INCREASING
    profile = symbol_profile(phi)
    if profile.injective is False:
        return Monotonicity.NON_MONOTONE
    return Monotonicity.INCREASING if profile.increasing else Monotonicity.DECREASING


def _is_involution(psi: SymbolExpr) -> bool:
    """psi = φ_2 is the identity on the sample points."""
    xs = np.linspace(-10.0, 10.0, INVOLUTION_SAMPLES)
    values = psi.values(xs)
    return bool(np.all(np.isfinite(values)) and np.allclose(values, xs, rtol=1e-12, atol=1e-12))


def _attracting(psi: SymbolExpr, a: float) -> Optional[List[float]]:
    """Orbit probes around a. Returns the probe seeds that failed to converge to a, None if ψ'(a) rules it out."""
    slope = psi.jet(a, 1)[1]
    if not abs(slope) < 1.0 - ATTRACTION_MARGIN:
        return None
    failed = []
    offsets = (0.1, 0.5, 1.0, 2.0)
    for offset in offsets:
        for seed in (a - offset * (1.0 + abs(a)), a + offset * (1.0 + abs(a))):
            try:
                orbit = iterate_point(psi, seed, PROBE_ITERATIONS, stop_on_convergence=True)
            except CopDynError:
                failed.append(seed)
                continue
            if orbit.terminated_by is not OrbitTermination.CONVERGED or \
                    not math.isclose(orbit.limit, a, rel_tol=1e-6, abs_tol=1e-6):
                failed.append(seed)
    return failed


def monotone_pb_analysis(phi: SymbolExpr, space: SpaceTag = None) -> Verdict:
    """
    PowerBounded verdict of a monotone φ from its fixed points.

    Recognized polynomials take the exact rule. Otherwise ψ = φ (increasing) or ψ = φ_2 (decreasing) is scanned for
    fixed points: several certified ones give ProvenFalse, none gives EmpiricalFalse, a single one is tested for
    attraction (|ψ'(a)| < 1 and 8 orbit probes converging to a) and gives EmpiricalTrue with the limit a.

    :raises PreconditionViolated: when φ is not monotone, or when φ_2 is the identity
    """
    kind = monotone_kind(phi)
    if kind not in (Monotonicity.INCREASING, Monotonicity.DECREASING):
        raise PreconditionViolated("%s is not monotone (%s)" % (phi, kind.value))
    phi2 = compose(phi, phi)
    psi = phi if kind is Monotonicity.INCREASING else phi2
    if _is_involution(phi2):
        raise PreconditionViolated("φ_2 is the identity for %s" % phi)
    note = None if kind is Monotonicity.INCREASING else "decreasing symbol, analysed through φ_2"

    family = recognize_family(phi)
    if not isinstance(family, General):
        verdict = classify_polynomial(family, space)[0]
        witnesses = verdict.witnesses
        if isinstance(family, Affine) and abs(family.a) < 1.0:
            witnesses = witnesses + (("attracting_fixed_point", family.b / (1.0 - family.a)),)
        return Verdict(Property.POWER_BOUNDED, verdict.status, verdict.citation, witnesses=witnesses,
                       provenance=verdict.provenance, note=note or verdict.note, space=space)

    citation = "monotone-attracting-fixed-point"
    scan = scan_fixed_points(psi, resolution=MONOTONE_SCAN_RESOLUTION)
    certified = scan.certified_points
    if len(certified) >= 2:
        return Verdict(Property.POWER_BOUNDED, Status.PROVEN_FALSE, citation,
                       witnesses=(("fixed_points", [p.location for p in certified[:2]]),),
                       provenance=Provenance.CERTIFIED_WITNESS, note=note or "several fixed points", space=space)
    if not scan.points:
        status = Status.EMPIRICAL_FALSE if scan.complete else Status.INCONCLUSIVE
        return Verdict(Property.POWER_BOUNDED, status, citation, witnesses=(("window", list(scan.window)),),
                       note=note or "no fixed point in the scan window", space=space)
    if len(certified) != 1 or len(scan.points) != 1:
        return Verdict(Property.POWER_BOUNDED, Status.INCONCLUSIVE, citation,
                       witnesses=(("candidates", [p.location for p in scan.points]),), note=note, space=space)
    a = certified[0].location
    failed = _attracting(psi, a)
    if failed is None or failed:
        witnesses = (("fixed_point", a), ("derivative", certified[0].derivative))
        if failed:
            witnesses += (("probe_failures", failed),)
        return Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_FALSE, citation, witnesses=witnesses,
                       note=note or "the fixed point is not attracting", space=space)
    return Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_TRUE, citation,
                   witnesses=(("limit", a), ("derivative", certified[0].derivative)), space=space,
                   note=note or "C_φn should converge to the evaluation at the limit")
