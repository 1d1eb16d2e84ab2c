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
# Name:        cyclicity.py
# Purpose:     Supercyclicity obstructions and mixing rules
#
# Author:      PyCopDyn developers
#
# Created:     14-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Supercyclicity and mixing of C_φ are governed by a short profile of the symbol: does φ have a fixed point, does φ'
vanish somewhere, is φ increasing, is φ' > 0 everywhere.

:func:`symbol_profile` computes that profile. Each entry is ``True`` or ``False`` when certified, ``None`` when only
grid evidence is available:

* for recognized polynomials, every entry is certified by exact root isolation of φ(x) - x and φ' over the rationals;
* for other symbols, a fixed point bracketed by a sign change of φ(x) - x and a zero of φ' bracketed by a sign change
  of φ' are certified, everything else stays grid evidence.

The rules then read the profile::

    supercyclicity_obstructions(parse("x^3"), SpaceTag.parse("cinf"))[0].status    # ProvenFalse (φ'(0) = 0)
    mixing_classification(parse("x+1"), SpaceTag.parse("oM")).status               # ProvenTrue (translation)
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from scipy.optimize import brentq

from ..dynamics.fixed_points import (DEFAULT_RESOLUTION, DEFAULT_SCAN_INTERVAL, Monotonicity, monotonicity,
                                     scan_fixed_points)
from ..dynamics.runaway import is_strongly_runaway
from ..symbol.expr_errors import CopDynError
from ..symbol.expr_parser import SymbolExpr
from ..symbol.family import Affine, Family, General, recognize_family
from ..utils.real_roots import (constant_sign, interval_midpoint, isolate_real_roots, poly_derivative,
                                sign_change_roots, to_fractions)
from .verdict import Property, Provenance, SpaceKind, SpaceTag, Status, Verdict

_logger = logging.getLogger("PyCopDyn.Cyclicity")

__all__ = ['SymbolProfile', 'symbol_profile', 'supercyclicity_obstructions', 'mixing_classification',
           'RUNAWAY_COMPACTS']

#: Compacts on which the strongly runaway property is probed for symbols that are not recognized polynomials.
RUNAWAY_COMPACTS = ((-1.0, 1.0), (-10.0, 10.0), (-100.0, 100.0))

OPEN_PROBLEM_NOTE = "mixing on O^m and O_M is only established for translations"


@dataclass
class SymbolProfile:
    """
    :ivar exact: True when the entries come from exact root isolation
    :ivar has_fixed_point: True (certified), False (certified absent) or None
    :ivar has_critical_point: certified zero of φ'
    :ivar increasing: φ non-decreasing on the whole line
    :ivar derivative_positive: φ' > 0 everywhere
    :ivar injective: False when a local extremum is certified
    :ivar fixed_points: certified fixed points, None when every point is fixed
    :ivar provenance: STRUCTURAL for exact profiles, CERTIFIED_WITNESS for bracketed witnesses
    :ivar witnesses: (description, value) pairs
    :ivar evidence: grid observations behind the uncertified entries
    """
    family: Family
    exact: bool
    has_fixed_point: Optional[bool] = None
    has_critical_point: Optional[bool] = None
    increasing: Optional[bool] = None
    derivative_positive: Optional[bool] = None
    injective: Optional[bool] = None
    fixed_points: Optional[List[float]] = field(default_factory=list)
    provenance: Provenance = Provenance.GRID
    witnesses: List[Tuple[str, object]] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    def witness(self, description: str):
        for d, v in self.witnesses:
            if d == description:
                return v
        return None

    @property
    def certified_mixing_profile(self) -> bool:
        """Increasing, φ' > 0 everywhere and no fixed point, all certified."""
        return self.increasing is True and self.derivative_positive is True and self.has_fixed_point is False

    @property
    def grid_mixing_profile(self) -> bool:
        """Grid evidence agrees with the mixing profile and nothing contradicts it."""
        return (self.has_fixed_point is not True and self.has_critical_point is not True
                and self.increasing is not False and self.evidence.get("monotonicity") == Monotonicity.INCREASING.value
                and not self.evidence.get("fixed_points_on_grid") and not self.evidence.get("tangential_fixed_points"))


def _equal_value_pair(phi: SymbolExpr, c: float, gap: float) -> Optional[Tuple[float, float]]:
    """Two points on both sides of the local extremum c with the same image, or None when not found."""
    h = min(1e-3 * (1.0 + abs(c)), gap / 4.0)
    x1 = c - h
    try:
        y = phi.evaluate(x1)

        def diff(x):
            return phi.evaluate(x) - y

        x2 = brentq(diff, c, c + 3.0 * h, xtol=1e-15)
    except (CopDynError, ValueError, RuntimeError):
        return None
    return x1, float(x2)


def _exact_profile(phi: SymbolExpr, family: Family) -> SymbolProfile:
    coeffs = to_fractions(family.coeffs)
    profile = SymbolProfile(family, exact=True, provenance=Provenance.STRUCTURAL)
    g = list(coeffs) + [Fraction(0)] * max(0, 2 - len(coeffs))
    g[1] -= 1
    g = to_fractions(g)
    if not g:
        profile.has_fixed_point = True
        profile.witnesses.append(("fixed_point", 0.0))
        profile.evidence["identity"] = True
        profile.fixed_points = None
    else:
        roots = isolate_real_roots(g)
        profile.has_fixed_point = bool(roots)
        profile.fixed_points = [interval_midpoint(r) for r in roots]
        if roots:
            profile.witnesses.append(("fixed_point", interval_midpoint(roots[0])))
    d = poly_derivative(coeffs)
    if not d:
        profile.has_critical_point = True
        profile.increasing = False
        profile.derivative_positive = False
        profile.injective = False
        profile.witnesses.append(("critical_point", 0.0))
        return profile
    critical = isolate_real_roots(d)
    profile.has_critical_point = bool(critical)
    if critical:
        profile.witnesses.append(("critical_point", interval_midpoint(critical[0])))
    profile.derivative_positive = constant_sign(d) == 1
    extrema = sign_change_roots(d)
    if extrema:
        profile.increasing = False
        profile.injective = False
        c = interval_midpoint(extrema[0])
        others = [abs(interval_midpoint(r) - c) for r in critical if abs(interval_midpoint(r) - c) > 0]
        gap = min(others) if others else 1.0
        pair = _equal_value_pair(phi, c, gap)
        if pair is not None:
            profile.witnesses.append(("equal_values", list(pair)))
    else:
        profile.increasing = d[-1] > 0
        profile.injective = True
        if not profile.increasing:
            profile.witnesses.append(("decreasing", True))
    return profile


def _grid_profile(phi: SymbolExpr, interval, resolution) -> SymbolProfile:
    profile = SymbolProfile(General(), exact=False, provenance=Provenance.CERTIFIED_WITNESS)
    scan = scan_fixed_points(phi, interval, resolution)
    certified = scan.certified_points
    profile.fixed_points = [p.location for p in certified]
    if certified:
        profile.has_fixed_point = True
        profile.witnesses.append(("fixed_point", certified[0].location))
    profile.evidence["fixed_points_on_grid"] = len(scan.points)
    profile.evidence["tangential_fixed_points"] = len(scan.points) - len(certified)
    profile.evidence["scan_window"] = list(scan.window)
    profile.evidence["possible_roots_outside"] = not scan.complete

    mono = monotonicity(phi, interval, resolution)
    profile.evidence["monotonicity"] = mono.kind.value
    if mono.kind is Monotonicity.NON_MONOTONE:
        w = mono.witness

        def slope(x):
            return phi.jet(x, 1)[1]

        try:
            c = float(brentq(slope, w["x_left"], w["x_right"], xtol=1e-15))
        except (CopDynError, ValueError, RuntimeError):
            c = 0.5 * (w["x_left"] + w["x_right"])
        profile.has_critical_point = True
        profile.increasing = False
        profile.injective = False
        profile.witnesses.append(("critical_point", c))
        profile.witnesses.append(("slope_sign_change", [w["x_left"], w["x_right"]]))
        pair = _equal_value_pair(phi, c, w["x_right"] - w["x_left"])
        if pair is not None:
            profile.witnesses.append(("equal_values", list(pair)))
    elif mono.kind is Monotonicity.DECREASING:
        lo, hi = scan.window
        a, b = lo + 0.25 * (hi - lo), hi - 0.25 * (hi - lo)
        try:
            fa, fb = phi.evaluate(a), phi.evaluate(b)
        except CopDynError:
            fa, fb = 0.0, 0.0
        if fa > fb + 1e-9 * (1.0 + abs(fa) + abs(fb)):
            profile.increasing = False
            profile.witnesses.append(("decreasing_pair", [a, b]))
    return profile


def symbol_profile(phi: SymbolExpr, *, interval: Tuple[float, float] = DEFAULT_SCAN_INTERVAL,
                   resolution: int = DEFAULT_RESOLUTION) -> SymbolProfile:
    """
    Fixed point, critical point and monotonicity profile of φ.

    :raises DomainError: when φ is undefined on the scan window
    """
    family = recognize_family(phi)
    if isinstance(family, General):
        profile = _grid_profile(phi, interval, resolution)
    else:
        profile = _exact_profile(phi, family)
    _logger.debug("Profile of %s: fixed=%s critical=%s increasing=%s positive=%s", phi, profile.has_fixed_point,
                  profile.has_critical_point, profile.increasing, profile.derivative_positive)
    return profile


def _profile_witnesses(profile: SymbolProfile) -> tuple:
    return tuple(profile.witnesses) + tuple(sorted(profile.evidence.items()))


def _runaway_verdict(phi: SymbolExpr, profile: SymbolProfile) -> Verdict:
    if profile.has_fixed_point:
        return Verdict(Property.STRONGLY_RUNAWAY, Status.PROVEN_FALSE, "runaway-no-fixed-point",
                       witnesses=(("fixed_point", profile.witness("fixed_point")),), provenance=profile.provenance,
                       note="the orbit of a fixed point never leaves a compact containing it")
    if profile.exact and profile.increasing and profile.has_fixed_point is False:
        return Verdict(Property.STRONGLY_RUNAWAY, Status.PROVEN_TRUE, "runaway-no-fixed-point",
                       provenance=Provenance.STRUCTURAL, note="increasing without fixed points")
    results = []
    for K in RUNAWAY_COMPACTS:
        try:
            results.append((K, is_strongly_runaway(phi, K)))
        except CopDynError as err:
            _logger.info("Runaway probe on %s failed: %s", K, err)
            results.append((K, None))
    witnesses = tuple(("n0 on [%g, %g]" % K, None if r is None else r.n0) for K, r in results)
    if any(r is not None and r.runaway is False for _, r in results):
        reasons = tuple(("reason on [%g, %g]" % K, r.reason) for K, r in results if r is not None and r.runaway is False)
        return Verdict(Property.STRONGLY_RUNAWAY, Status.EMPIRICAL_FALSE, "runaway-no-fixed-point",
                       witnesses=reasons)
    if all(r is not None and r.runaway for _, r in results):
        return Verdict(Property.STRONGLY_RUNAWAY, Status.EMPIRICAL_TRUE, "runaway-no-fixed-point", witnesses=witnesses)
    return Verdict(Property.STRONGLY_RUNAWAY, Status.INCONCLUSIVE, "runaway-no-fixed-point", witnesses=witnesses)


def _fixed_or_critical_obstruction(profile: SymbolProfile, space: SpaceTag, prop: Property) -> Optional[Verdict]:
    if profile.has_fixed_point:
        return Verdict(prop, Status.PROVEN_FALSE, "fixed-point-or-critical-point",
                       witnesses=(("fixed_point", profile.witness("fixed_point")),), provenance=profile.provenance,
                       space=space)
    if space.embeds_in_C1 and profile.has_critical_point:
        return Verdict(prop, Status.PROVEN_FALSE, "fixed-point-or-critical-point",
                       witnesses=(("critical_point", profile.witness("critical_point")),),
                       provenance=profile.provenance, space=space)
    return None


def _c0_obstruction(profile: SymbolProfile, space: SpaceTag, prop: Property) -> Optional[Verdict]:
    if profile.injective is False:
        witnesses = [("critical_point", profile.witness("critical_point"))]
        if profile.witness("equal_values") is not None:
            witnesses.append(("equal_values", profile.witness("equal_values")))
        return Verdict(prop, Status.PROVEN_FALSE, "supercyclic-increasing-no-fixed-point", witnesses=tuple(witnesses),
                       provenance=profile.provenance, space=space, note="φ is not injective")
    if profile.increasing is False:
        return Verdict(prop, Status.PROVEN_FALSE, "supercyclic-increasing-no-fixed-point",
                       witnesses=tuple(profile.witnesses), provenance=profile.provenance, space=space,
                       note="φ is not increasing")
    return None


def _is_translation(family: Family) -> bool:
    return isinstance(family, Affine) and family.is_translation()


def _weak_supercyclicity(phi: SymbolExpr, profile: SymbolProfile, space: SpaceTag) -> Verdict:
    prop = Property.WEAKLY_SUPERCYCLIC
    obstruction = _fixed_or_critical_obstruction(profile, space, prop)
    if obstruction is None and space.is_continuous_functions:
        obstruction = _c0_obstruction(profile, space, prop)
    if obstruction is not None:
        return obstruction
    if space.is_O and _is_translation(profile.family):
        return Verdict(prop, Status.PROVEN_TRUE, "translation-mixing", witnesses=(("d", profile.family.b),),
                       provenance=Provenance.STRUCTURAL, space=space, note="mixing implies weakly supercyclic")
    if profile.certified_mixing_profile:
        if space.is_continuous_functions:
            citation = "sc-mixing-C0"
        elif space.kind is SpaceKind.ANALYTIC:
            citation = "wsc-mixing-analytic"
        elif space.is_Cm:
            citation = "wsc-mixing-Cm"
        else:
            citation = None
        if citation is not None:
            return Verdict(prop, Status.PROVEN_TRUE, citation, provenance=Provenance.STRUCTURAL, space=space,
                           note="increasing, φ' > 0 and no fixed point")
    citation = "supercyclic-increasing-no-fixed-point" if space.is_continuous_functions \
        else "wsc-runaway-positive-derivative"
    if profile.certified_mixing_profile or profile.grid_mixing_profile:
        return Verdict(prop, Status.EMPIRICAL_TRUE, citation, witnesses=_profile_witnesses(profile), space=space,
                       note="the necessary profile holds, sufficiency is not established for this space")
    return Verdict(prop, Status.INCONCLUSIVE, citation, witnesses=_profile_witnesses(profile), space=space)


def _supercyclicity_c0(profile: SymbolProfile, space: SpaceTag) -> Verdict:
    prop = Property.SUPERCYCLIC
    obstruction = _fixed_or_critical_obstruction(profile, space, prop) or _c0_obstruction(profile, space, prop)
    if obstruction is not None:
        return obstruction
    if profile.exact and profile.increasing and profile.has_fixed_point is False:
        return Verdict(prop, Status.PROVEN_TRUE, "sc-mixing-C0", provenance=Provenance.STRUCTURAL, space=space,
                       note="increasing without fixed points")
    if profile.grid_mixing_profile:
        return Verdict(prop, Status.EMPIRICAL_TRUE, "supercyclic-increasing-no-fixed-point",
                       witnesses=_profile_witnesses(profile), space=space)
    return Verdict(prop, Status.INCONCLUSIVE, "supercyclic-increasing-no-fixed-point",
                   witnesses=_profile_witnesses(profile), space=space)


def supercyclicity_obstructions(phi: SymbolExpr, space: SpaceTag, *, profile: SymbolProfile = None) -> List[Verdict]:
    """
    WeaklySupercyclic verdict (plus Supercyclic on C(R)) and the StronglyRunaway verdict of φ.

    A certified fixed point, or a certified zero of φ' on spaces of C^1 functions, rules weak supercyclicity out. On
    C(R) a non-injective or non-increasing φ rules it out as well.

    :param phi: the symbol
    :param space: the function space
    :param profile: a precomputed :func:`symbol_profile`
    :raises DomainError: when φ is undefined on the scan window
    """
    profile = profile or symbol_profile(phi)
    verdicts = [_weak_supercyclicity(phi, profile, space)]
    if space.is_continuous_functions:
        verdicts.append(_supercyclicity_c0(profile, space))
    verdicts.append(_runaway_verdict(phi, profile))
    for v in verdicts:
        _logger.info("%s on %s: %s %s", phi, space, v.property.value, v.status.value)
    return verdicts


def mixing_classification(phi: SymbolExpr, space: SpaceTag, *, profile: SymbolProfile = None) -> Verdict:
    """
    Mixing verdict of C_φ.

    * C^m (m >= 1), C^infinity and the real analytic functions: mixing iff weakly supercyclic iff strongly runaway
      with φ' > 0, proven only on a certified profile;
    * C(R): mixing iff φ increasing without fixed points;
    * O^m and O_M: proven only for translations x + d, d != 0;
    * Schwartz space: only obstructions are reported.

    A certified obstruction gives ProvenFalse on every space.
    """
    profile = profile or symbol_profile(phi)
    prop = Property.MIXING
    obstruction = _fixed_or_critical_obstruction(profile, space, prop)
    if obstruction is None and space.is_continuous_functions:
        obstruction = _c0_obstruction(profile, space, prop)
    if obstruction is not None:
        verdict = obstruction
    elif space.is_O:
        if _is_translation(profile.family):
            verdict = Verdict(prop, Status.PROVEN_TRUE, "translation-mixing", witnesses=(("d", profile.family.b),),
                              provenance=Provenance.STRUCTURAL, space=space)
        else:
            verdict = Verdict(prop, Status.INCONCLUSIVE, "translation-mixing", witnesses=_profile_witnesses(profile),
                              space=space, note=OPEN_PROBLEM_NOTE)
    elif space.kind is SpaceKind.SCHWARTZ:
        verdict = Verdict(prop, Status.INCONCLUSIVE, "fixed-point-or-critical-point", space=space,
                          note="no mixing criterion for the Schwartz space")
    else:
        if space.is_continuous_functions:
            citation = "sc-mixing-C0"
            certified = profile.exact and profile.increasing is True and profile.has_fixed_point is False
        else:
            citation = "wsc-mixing-analytic" if space.kind is SpaceKind.ANALYTIC else "wsc-mixing-Cm"
            certified = profile.certified_mixing_profile
        if certified:
            verdict = Verdict(prop, Status.PROVEN_TRUE, citation, provenance=Provenance.STRUCTURAL, space=space,
                              note="certified profile: increasing, no fixed point" +
                                   ("" if space.is_continuous_functions else ", φ' > 0"))
        else:
            verdict = Verdict(prop, Status.INCONCLUSIVE, citation, witnesses=_profile_witnesses(profile), space=space)
    _logger.info("%s on %s: Mixing %s", phi, space, verdict.status.value)
    return verdict
