# -*- coding: utf-8 -*-

# Convenience direct imports
from PyCopDyn.version import __version__
from PyCopDyn.symbol.expr_errors import (CopDynError, ExpressionSyntaxError, UnknownIdentifier, DomainError,
                                         NumericOverflow, OrderMismatch, UnsupportedOrder, InsufficientSamples,
                                         PreconditionViolated)
from PyCopDyn.symbol.expr_parser import parse, compose, SymbolExpr
from PyCopDyn.symbol.jet import Jet, compose_jets
from PyCopDyn.symbol.family import recognize_family, Affine, Polynomial, General
from PyCopDyn.dynamics.orbits import iterate_point, cesaro_mean_point
from PyCopDyn.dynamics.fixed_points import find_fixed_points, scan_fixed_points, monotonicity
from PyCopDyn.dynamics.runaway import is_strongly_runaway
from PyCopDyn.seminorms.seminorm import seminorm_Omn, seminorm_weighted
from PyCopDyn.seminorms.growth_fit import fit_growth
from PyCopDyn.seminorms.membership import membership_Om, membership_OM
from PyCopDyn.classifier.verdict import Verdict, SpaceTag, Status, Property
from PyCopDyn.classifier.settings import AnalysisSettings
from PyCopDyn.classifier.analysis import classify_symbol
from PyCopDyn.classifier.batch import BatchClassifier
from PyCopDyn.lab.operator_lab import apply_iterated, operator_cesaro, convergence_probe
from PyCopDyn.raw.report_write import AnalysisReport
from PyCopDyn.raw.series_write import SeriesWrite, Trace


def all_loggers():
    """
    Returns all the name strings used as logger identifiers.

    :return: A List of strings which contains all the logger's names used in this library.
    :rtype: list[str]
    """
    return [
        "PyCopDyn.ExprParser",
        "PyCopDyn.Jet",
        "PyCopDyn.Family",
        "PyCopDyn.RealRoots",
        "PyCopDyn.Orbits",
        "PyCopDyn.IterateJets",
        "PyCopDyn.FixedPoints",
        "PyCopDyn.Runaway",
        "PyCopDyn.Seminorm",
        "PyCopDyn.GrowthFit",
        "PyCopDyn.Membership",
        "PyCopDyn.PolynomialRules",
        "PyCopDyn.Cyclicity",
        "PyCopDyn.MeanErgodic",
        "PyCopDyn.PowerBounded",
        "PyCopDyn.Schwartz",
        "PyCopDyn.Analysis",
        "PyCopDyn.BatchClassifier",
        "PyCopDyn.OperatorLab",
        "PyCopDyn.Counterexamples",
        "PyCopDyn.ReportWrite",
        "PyCopDyn.SeriesWrite",
        "PyCopDyn.CLI",
    ]


def set_log_level(level):
    """
    Sets the logging level for all loggers used in the library.

    :param level: The logging level to be used, eg. logging.ERROR, logging.DEBUG, etc.
    :type level: int
    """
    import logging
    for logger in all_loggers():
        logging.getLogger(logger).setLevel(level)


def add_log_handler(handler):
    """
    Sets the logging handler for all loggers used in the library.

    :param handler: The logging handler to be used, eg. logging.NullHandler
    :type handler: Handler
    """
    import logging
    for logger in all_loggers():
        logging.getLogger(logger).addHandler(handler)
