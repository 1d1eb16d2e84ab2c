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
# Name:        polynomial_rules.py
# Purpose:     Exact power boundedness and mean ergodicity of polynomial symbols
#
# Author:      PyCopDyn developers
#
# Created:     13-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
For a polynomial symbol the question is settled by the coefficients alone. C_φ is power bounded, and mean ergodic,
exactly when φ(x) = ax + b with

* |a| < 1, in which case φ_n converges to the fixed point b/(1-a);
* a = -1, in which case φ_2 is the identity;
* a = 1 and b = 0, the identity itself.

Every other polynomial has an orbit that escapes: φ_n(0) = nb for a translation, and beyond a computable n0 the
inequality |φ(x)| >= |x| + 1 holds for |a| > 1 or degree >= 2, so |φ_n(n0)| >= n0 + n. ::

    classify_polynomial(recognize_family(parse("0.5*x+1")))
    # [Verdict(PowerBounded, ProvenTrue), Verdict(MeanErgodic, ProvenTrue), Verdict(IterateConvergence, ProvenTrue)]
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from fractions import Fraction
from typing import List, Optional

from ..symbol.family import Affine, Family, General, Polynomial
from ..utils.real_roots import root_bound, to_fractions
from .verdict import Property, Provenance, SpaceKind, SpaceTag, Status, Verdict

_logger = logging.getLogger("PyCopDyn.PolynomialRules")

__all__ = ['classify_polynomial', 'escape_start']


def escape_start(coeffs) -> int:
    """
    An integer n0 such that |φ(x)| >= |x| + 1 whenever |x| >= n0, for a polynomial φ of degree >= 2 (coefficients in
    ascending order). It is one more than the largest real root bound of φ(x) ∓ x ∓ 1.
    """
    p = to_fractions(coeffs)
    p = p + [Fraction(0)] * max(0, 2 - len(p))
    bounds = []
    for s_x, s_1 in ((-1, -1), (1, 1), (1, -1), (-1, 1)):
        q = list(p)
        q[1] += s_x
        q[0] += s_1
        bounds.append(root_bound(q))
    return math.ceil(max(bounds)) + 1


def _pair(prop_status: Status, citation: str, witnesses, note: Optional[str], space: Optional[SpaceTag]):
    return [Verdict(prop, prop_status, citation, witnesses=witnesses, provenance=Provenance.STRUCTURAL, note=note,
                    space=space)
            for prop in (Property.POWER_BOUNDED, Property.MEAN_ERGODIC)]


def _affine(family: Affine, space: Optional[SpaceTag]) -> List[Verdict]:
    a, b = family.a, family.b
    if family.is_identity():
        return _pair(Status.PROVEN_TRUE, "affine-pb-me", (("a", a), ("b", b)), "φ_n is the identity", space)
    if family.is_translation():
        witnesses = (("b", b), ("phi_n(0)", "n*b"), ("phi_10(0)", 10 * b))
        return _pair(Status.PROVEN_FALSE, "affine-pb-me", witnesses, "φ_n(0) = nb is unbounded", space)
    if abs(a) < 1.0:
        limit = b / (1.0 - a)
        verdicts = _pair(Status.PROVEN_TRUE, "affine-pb-me", (("a", a), ("b", b)), None, space)
        note = "C_φ is the evaluation at b" if a == 0.0 else "φ_n(x) - L = a^n (x - L)"
        verdicts.append(Verdict(Property.ITERATE_CONVERGENCE, Status.PROVEN_TRUE, "sot-convergence",
                                witnesses=(("limit", limit), ("rate", abs(a))), provenance=Provenance.STRUCTURAL,
                                note=note, space=space))
        return verdicts
    if a == -1.0:
        note = "φ_2 is the identity, so C_φ^2 = I"
        return _pair(Status.PROVEN_TRUE, "affine-pb-me", (("a", a), ("b", b), ("phi_2", "x")), note, space)
    n0 = math.ceil((abs(b) + 1.0) / (abs(a) - 1.0))
    witnesses = (("a", a), ("b", b), ("n0", n0), ("|phi_n(n0)| >=", "n0 + n"))
    return _pair(Status.PROVEN_FALSE, "affine-pb-me", witnesses, "|a| > 1 pushes |x| >= n0 away by at least 1 per step",
                 space)


def classify_polynomial(family: Family, space: Optional[SpaceTag] = None) -> List[Verdict]:
    """
    Power boundedness and mean ergodicity of C_φ for a recognized polynomial φ.

    :param family: an :class:`Affine` or :class:`Polynomial` family
    :param space: the function space, recorded in the verdicts. The rule does not cover the Schwartz space, where
        the verdicts are Inconclusive.
    :return: PowerBounded and MeanErgodic verdicts, followed by IterateConvergence when |a| < 1
    :raises ValueError: for the General family
    """
    if isinstance(family, General):
        raise ValueError("classify_polynomial needs an Affine or Polynomial family")
    if space is not None and space.kind is SpaceKind.SCHWARTZ:
        return [Verdict(prop, Status.INCONCLUSIVE, "schwartz-power-bounded", space=space,
                        note="the polynomial rule is not stated for the Schwartz space")
                for prop in (Property.POWER_BOUNDED, Property.MEAN_ERGODIC)]
    if isinstance(family, Affine):
        verdicts = _affine(family, space)
    else:
        n0 = escape_start(family.coeffs)
        witnesses = (("degree", family.degree), ("n0", n0), ("|phi_n(n0)| >=", "n0 + n"))
        verdicts = _pair(Status.PROVEN_FALSE, "affine-pb-me", witnesses,
                         "a polynomial of degree >= 2 satisfies |φ(x)| >= |x| + 1 for |x| >= n0", space)
    _logger.info("Polynomial rule on %s: %s", family, ", ".join("%s=%s" % (v.property.value, v.status.value)
                                                                 for v in verdicts))
    return verdicts
