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
# Name:        schwartz.py
# Purpose:     Symbol and power boundedness conditions on the Schwartz space
#
# Author:      PyCopDyn developers
#
# Created:     16-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
C_φ acts on the Schwartz space when

1. every derivative is controlled by φ itself, |φ^(j)(x)| <= C (1+φ(x)^2)^p;
2. φ does not come back too close to 0, |φ(x)| >= |x|^(1/k) for |x| >= k, for some k.

It is power bounded there when both conditions hold for the iterates φ_n with constants independent of n.

Condition 1 is fitted with :func:`~PyCopDyn.seminorms.growth_fit.fit_growth` over the samples (φ(x), |φ^(j)(x)|).
When the values of φ do not span enough decades for a fit (bounded φ), the bound falls back to p = 0 and C the largest
magnitude. Condition 2 is scanned for k = 1, 2, ... on the grid. ::

    schwartz_symbol_check(parse("x^2+1")).status    # EmpiricalTrue
    schwartz_symbol_check(parse("sin(x)")).status   # EmpiricalFalse, condition 2
    schwartz_pb_check(parse("0.5*x")).status        # EmpiricalFalse, φ_n(x) = x/2^n
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..dynamics.iterate_jets import iterate_jets
from ..seminorms.growth_fit import fit_growth
from ..seminorms.membership import GRID_X_MIN
from ..symbol.expr_errors import DomainError, InsufficientSamples
from ..symbol.expr_parser import SymbolExpr
from ..symbol.jet import check_order
from ..utils.sweep_iterators import symmetric_log_grid
from .verdict import Property, SpaceKind, SpaceTag, Status, Verdict

_logger = logging.getLogger("PyCopDyn.Schwartz")

__all__ = ['schwartz_symbol_check', 'schwartz_pb_check', 'K_CAP']

K_CAP = 64
DEFAULT_POINTS = 401

SCHWARTZ = SpaceTag(SpaceKind.SCHWARTZ)


def _derivative_bound(values: np.ndarray, magnitudes: np.ndarray) -> Tuple[bool, dict]:
    """Condition 1 for one derivative order, samples pooled over whatever axes the arrays have."""
    values = values.ravel()
    magnitudes = magnitudes.ravel()
    try:
        fit = fit_growth(zip(values, magnitudes))
    except InsufficientSamples:
        top = float(magnitudes.max()) if magnitudes.size else 0.0
        return math.isfinite(top), {"p": 0, "C": top, "fallback": True}
    if not fit.fits:
        return False, {"witness_value": fit.witness_x, "outer_slope": fit.outer_slope}
    return True, {"p": fit.p, "C": fit.C}


def _lower_bound_k(xs: np.ndarray, values: np.ndarray, k_cap: int) -> Tuple[Optional[int], Optional[float]]:
    """
    Smallest k <= k_cap with |φ(x)| >= |x|^(1/k) wherever k <= |x|. ``values`` may carry a leading axis of iterates.

    :return: (k, None) on success, (None, x) with the worst abscissa at k_cap otherwise
    """
    ax = np.abs(xs)
    mags = np.abs(values).reshape(-1, xs.size).min(axis=0)
    for k in range(1, k_cap + 1):
        region = ax >= k
        if not region.any():
            break
        if (mags[region] >= ax[region] ** (1.0 / k) * (1.0 - 1e-12)).all():
            return k, None
    region = ax >= min(k_cap, ax.max())
    deficit = np.where(region, ax ** (1.0 / k_cap) - mags, -np.inf)
    return None, float(xs[int(np.argmax(deficit))])


def _k_cap(x_max: float) -> int:
    return max(1, min(K_CAP, int(x_max // 2)))


def schwartz_symbol_check(phi: SymbolExpr, j_max: int = 3, *, x_max: float = 100.0,
                          points: int = DEFAULT_POINTS) -> Verdict:
    """
    SymbolFor(Schwartz) verdict from the two symbol conditions on a symmetric grid over [-x_max, x_max].

    :param phi: the symbol
    :param j_max: highest derivative order of condition 1, at most 8
    :raises DomainError: when φ is undefined on the grid
    """
    check_order(j_max)
    grid = symmetric_log_grid(GRID_X_MIN, x_max, points)
    ja = phi.jets(grid, j_max)
    if not ja.domain_ok.all():
        raise DomainError(ja.domain_node or str(phi), float(grid[np.argmin(ja.domain_ok)]))
    if ja.overflow.any():
        return Verdict(Property.SYMBOL_FOR, Status.INCONCLUSIVE, "schwartz-symbol", space=SCHWARTZ,
                       witnesses=(("overflow_x", float(grid[np.argmax(ja.overflow)])),))
    return _decide(grid, ja.coeffs[None, ...], j_max, x_max, "schwartz-symbol", Property.SYMBOL_FOR, None)


def _decide(grid: np.ndarray, coeffs: np.ndarray, j_max: int, x_max: float, citation: str, prop: Property,
            n_max: Optional[int]) -> Verdict:
    """coeffs has shape (n, j_max+1, points): jets of each iterate."""
    witnesses = [] if n_max is None else [("n_max", n_max)]
    for j in range(1, j_max + 1):
        ok, info = _derivative_bound(coeffs[:, 0, :], np.abs(coeffs[:, j, :]))
        if not ok:
            witnesses += [("condition", 1), ("j", j)] + sorted(info.items())
            return Verdict(prop, Status.EMPIRICAL_FALSE, citation, witnesses=tuple(witnesses), space=SCHWARTZ,
                           note="a derivative outgrows every power of 1+φ^2")
        witnesses += [("p_%d" % j, info["p"])]
    k, x_bad = _lower_bound_k(grid, coeffs[:, 0, :], _k_cap(x_max))
    if k is None:
        witnesses += [("condition", 2), ("x", x_bad)]
        return Verdict(prop, Status.EMPIRICAL_FALSE, citation, witnesses=tuple(witnesses), space=SCHWARTZ,
                       note="|φ(x)| >= |x|^(1/k) fails for every k up to %d" % _k_cap(x_max))
    witnesses.append(("k", k))
    return Verdict(prop, Status.EMPIRICAL_TRUE, citation, witnesses=tuple(witnesses), space=SCHWARTZ)


def schwartz_pb_check(phi: SymbolExpr, j_max: int = 2, n_max: int = 8, *, x_max: float = 10.0,
                      points: int = 201) -> Verdict:
    """
    PowerBounded(Schwartz) verdict: both symbol conditions for φ_1 .. φ_{n_max}, pooled so that the constants do not
    depend on n.

    Points whose orbit overflows are left out of both conditions, their count is reported as a witness.

    :raises DomainError: when an orbit leaves the domain of φ
    """
    check_order(j_max)
    grid = symmetric_log_grid(GRID_X_MIN, x_max, points)
    stack = []
    for n, ja in iterate_jets(phi, grid, n_max, j_max):
        if not ja.domain_ok.all():
            raise DomainError(ja.domain_node or str(phi), float(grid[np.argmin(ja.domain_ok)]))
        stack.append(ja)
    valid = stack[-1].valid
    if not valid.any():
        return Verdict(Property.POWER_BOUNDED, Status.INCONCLUSIVE, "schwartz-power-bounded", space=SCHWARTZ,
                       witnesses=(("overflow_at", len(stack)),))
    dropped = int((~valid).sum())
    if dropped:
        _logger.warning("%d orbits of %s overflow and are left out", dropped, phi)
    coeffs = np.stack([ja.coeffs[:, valid] for ja in stack])
    verdict = _decide(grid[valid], coeffs, j_max, x_max, "schwartz-power-bounded", Property.POWER_BOUNDED, n_max)
    if dropped:
        verdict = Verdict(verdict.property, verdict.status, verdict.citation,
                          witnesses=verdict.witnesses + (("overflow_samples", dropped),), space=SCHWARTZ,
                          note=verdict.note)
    _logger.info("Schwartz power bounded check of %s: %s", phi, verdict.status.value)
    return verdict
