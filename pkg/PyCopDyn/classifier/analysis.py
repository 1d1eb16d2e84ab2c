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
# Name:        analysis.py
# Purpose:     Full classification of a symbol on a function space
#
# Author:      PyCopDyn developers
#
# Created:     17-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Runs every rule of the classifier on one symbol and collects the verdicts into an
:class:`~PyCopDyn.raw.report_write.AnalysisReport`. ::

    report = classify_symbol(parse("0.5*x+1"), AnalysisSettings(space=SpaceTag.parse("oM")))
    report.verdict("PowerBounded").status     # Status.PROVEN_TRUE
    report.verdict("Mixing").status           # Status.PROVEN_FALSE, fixed point 2

The steps are:

1. recognize the family of φ;
2. decide whether C_φ acts on the space at all (:func:`symbol_of_space`);
3. power boundedness and mean ergodicity, by the polynomial rule for recognized polynomials and by the empirical
   batteries otherwise;
4. the supercyclicity obstructions and the mixing rule, sharing one symbol profile.

The verdicts come out ordered by property tag.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from dataclasses import fields
from typing import List, Optional

import numpy as np

from ..raw.report_write import AnalysisReport
from ..seminorms.membership import GRID_X_MIN, membership_Om, membership_OM
from ..symbol.expr_errors import MAX_ORDER, PreconditionViolated
from ..symbol.expr_parser import Func, Node, Power, Quotient, SymbolExpr
from ..symbol.family import Family, General, recognize_family
from ..utils.sweep_iterators import symmetric_log_grid
from ..version import __version__
from .citations import EMPIRICAL
from .cyclicity import SymbolProfile, mixing_classification, supercyclicity_obstructions, symbol_profile
from .mean_ergodic import mean_ergodic_necessary, summarize
from .polynomial_rules import classify_polynomial
from .power_bounded import DEFAULT_X_MAX as PB_X_MAX
from .power_bounded import monotone_pb_analysis, power_bounded_empirical
from .schwartz import schwartz_pb_check, schwartz_symbol_check
from .settings import AnalysisSettings
from .verdict import Property, Provenance, SpaceKind, SpaceTag, Status, Verdict, sorted_verdicts

_logger = logging.getLogger("PyCopDyn.Analysis")

__all__ = ['classify_symbol', 'symbol_of_space', 'power_bounded_verdict', 'is_total', 'merge_pb_verdicts']

#: From the worst to the best.
_STATUS_RANK = {
    Status.PROVEN_FALSE: 0,
    Status.EMPIRICAL_FALSE: 1,
    Status.INCONCLUSIVE: 2,
    Status.EMPIRICAL_TRUE: 3,
    Status.PROVEN_TRUE: 4,
}


def is_total(node: Node) -> bool:
    """True when no sub-expression can be undefined: no quotient, no negative power, no logarithm."""
    if isinstance(node, Quotient):
        return False
    if isinstance(node, Power) and node.exponent < 0:
        return False
    if isinstance(node, Func) and node.name == 'log':
        return False
    return all(is_total(getattr(node, f.name)) for f in fields(node) if isinstance(getattr(node, f.name), Node))


def _smooth_symbol(phi: SymbolExpr, space: SpaceTag, x_max: float) -> Verdict:
    citation = "symbol-Cm"
    if is_total(phi.root):
        return Verdict(Property.SYMBOL_FOR, Status.PROVEN_TRUE, citation, provenance=Provenance.STRUCTURAL,
                       space=space, note="elementary expression defined on the whole line")
    grid = symmetric_log_grid(GRID_X_MIN, x_max, 2001)
    ja = phi.jets(grid, 0)
    if not ja.domain_ok.all():
        x = float(grid[np.argmin(ja.domain_ok)])
        return Verdict(Property.SYMBOL_FOR, Status.PROVEN_FALSE, citation, witnesses=(("undefined_at", x),),
                       provenance=Provenance.CERTIFIED_WITNESS, space=space,
                       note="%s is undefined at x=%r" % (ja.domain_node or phi, x))
    return Verdict(Property.SYMBOL_FOR, Status.EMPIRICAL_TRUE, citation, witnesses=(("x_max", x_max),), space=space,
                   note="defined on the sampled window")


def _aggregate_OM(verdicts: List[Verdict], space: SpaceTag) -> Verdict:
    worst = min(verdicts, key=lambda v: _STATUS_RANK[v.status])
    witnesses = [("orders", len(verdicts) - 1)]
    witnesses += [("p_%d" % m, v.witness("p")) for m, v in enumerate(verdicts)]
    if worst.status is not Status.PROVEN_TRUE:
        witnesses.append(("failing_order", verdicts.index(worst)))
    return Verdict(Property.SYMBOL_FOR, worst.status, "symbol-OM", witnesses=tuple(witnesses),
                   provenance=worst.provenance, note=worst.note, space=space)


def symbol_of_space(phi: SymbolExpr, space: SpaceTag, settings: AnalysisSettings = None) -> Verdict:
    """
    SymbolFor(space) verdict: does C_φ map the space into itself.

    * O^m: :func:`~PyCopDyn.seminorms.membership.membership_Om`;
    * O_M: the sweep of :func:`~PyCopDyn.seminorms.membership.membership_OM` folded into one verdict, the worst order
      deciding;
    * Schwartz space: :func:`~PyCopDyn.classifier.schwartz.schwartz_symbol_check`;
    * C^m and the real analytic functions: every expression defined on the whole line qualifies.

    :raises DomainError: when φ is undefined in a membership window
    """
    settings = settings or AnalysisSettings(space=space)
    if space.kind is SpaceKind.OM_ORDER:
        return membership_Om(phi, min(space.order, MAX_ORDER), x_max=settings.x_max)
    if space.kind is SpaceKind.OM:
        return _aggregate_OM(membership_OM(phi, MAX_ORDER, x_max=settings.x_max), space)
    if space.kind is SpaceKind.SCHWARTZ:
        return schwartz_symbol_check(phi, x_max=settings.x_max)
    return _smooth_symbol(phi, space, settings.x_max)


def merge_pb_verdicts(empirical: Verdict, monotone: Optional[Verdict]) -> Verdict:
    """
    One PowerBounded verdict from the growth fit and the fixed point analysis: a proven verdict wins, an inconclusive
    one gives way, agreement keeps the growth fit and disagreement is inconclusive.
    """
    if monotone is None or monotone.status is Status.INCONCLUSIVE:
        return empirical
    if monotone.status.proven or empirical.status is Status.INCONCLUSIVE:
        return monotone
    if monotone.status.positive == empirical.status.positive:
        limit = monotone.witness("limit")
        if limit is None:
            return empirical
        return Verdict(empirical.property, empirical.status, empirical.citation,
                       witnesses=empirical.witnesses + (("limit", limit),), provenance=empirical.provenance,
                       note=empirical.note, space=empirical.space)
    _logger.warning("Growth fit (%s) and fixed point analysis (%s) disagree", empirical.status.value,
                    monotone.status.value)
    return Verdict(Property.POWER_BOUNDED, Status.INCONCLUSIVE, EMPIRICAL, space=empirical.space,
                   witnesses=(("growth_fit", empirical.status.value),
                              ("fixed_point_analysis", monotone.status.value)),
                   note="the growth fit and the fixed point analysis disagree")


def power_bounded_verdict(phi: SymbolExpr, settings: AnalysisSettings) -> Verdict:
    """PowerBounded verdict of a symbol outside the recognized polynomials, or on the Schwartz space."""
    space = settings.space
    if space.kind is SpaceKind.SCHWARTZ:
        return schwartz_pb_check(phi)
    empirical = power_bounded_empirical(phi, m=settings.growth_order, n_max=settings.iterations,
                                        x_max=min(settings.x_max, PB_X_MAX), space=space)
    try:
        monotone = monotone_pb_analysis(phi, space)
    except PreconditionViolated as err:
        _logger.debug("No fixed point analysis: %s", err)
        monotone = None
    return merge_pb_verdicts(empirical, monotone)


def _mean_ergodic(phi: SymbolExpr, settings: AnalysisSettings, profile: SymbolProfile) -> Verdict:
    battery = mean_ergodic_necessary(phi, settings.space, settings.iterations, settings.compact, profile=profile)
    return summarize(battery, settings.space)


def _pb_and_me(phi: SymbolExpr, family: Family, settings: AnalysisSettings, profile: SymbolProfile) -> List[Verdict]:
    if not isinstance(family, General) and settings.space.kind is not SpaceKind.SCHWARTZ:
        return classify_polynomial(family, settings.space)
    return [power_bounded_verdict(phi, settings), _mean_ergodic(phi, settings, profile)]


def classify_symbol(phi: SymbolExpr, settings: AnalysisSettings = None) -> AnalysisReport:
    """
    Classifies C_φ on ``settings.space``.

    :param phi: the symbol
    :param settings: the run settings, C^infinity with the default knobs when omitted
    :return: the report, without series references
    :raises DomainError: when φ is undefined where a rule needs it
    """
    settings = settings or AnalysisSettings()
    space = settings.space
    family = recognize_family(phi)
    _logger.info("Classifying %s on %s, family %s", phi, space, family.tag)
    profile = symbol_profile(phi, interval=settings.scan_interval, resolution=settings.resolution)

    verdicts = [symbol_of_space(phi, space, settings)]
    verdicts += _pb_and_me(phi, family, settings, profile)
    verdicts += supercyclicity_obstructions(phi, space, profile=profile)
    verdicts.append(mixing_classification(phi, space, profile=profile))
    verdicts = sorted_verdicts(verdicts)
    return AnalysisReport(symbol_text=str(phi), family=family.to_dict(), space=str(space), verdicts=verdicts,
                          parameters=settings.to_dict(), tool_version=__version__)
