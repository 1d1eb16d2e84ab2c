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
# Name:        settings.py
# Purpose:     Knobs of a full classification run
#
# Author:      PyCopDyn developers
#
# Created:     16-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
The parameters of :func:`~PyCopDyn.classifier.analysis.classify_symbol`, gathered in one immutable record that is
echoed verbatim into every report. ::

    settings = AnalysisSettings(space=SpaceTag.parse("om:2"), iterations=128)
    settings = AnalysisSettings.from_environment(os.environ)     # honours COPDYN_XMAX
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Tuple

from ..dynamics.fixed_points import DEFAULT_RESOLUTION, DEFAULT_SCAN_INTERVAL
from ..seminorms.seminorm import DEFAULT_X_MAX
from ..symbol.expr_errors import MAX_ORDER, CopDynError
from .mean_ergodic import DEFAULT_COMPACT, MIN_ITERATIONS
from .verdict import SpaceKind, SpaceTag

_logger = logging.getLogger("PyCopDyn.Analysis")

__all__ = ['AnalysisSettings', 'XMAX_VARIABLE']

XMAX_VARIABLE = "COPDYN_XMAX"


@dataclass(frozen=True)
class AnalysisSettings:
    """
    :ivar space: the function space of the run
    :ivar order: derivative order m of the growth tests, also the m of C^infinity and O_M runs
    :ivar iterations: n_max of the iterate based tests
    :ivar x_max: half width of the seminorm and membership windows
    :ivar scan_interval: window of the fixed point and monotonicity scans
    :ivar resolution: grid size of those scans
    :ivar compact: the compact K of the orbit based tests
    """
    space: SpaceTag = field(default_factory=lambda: SpaceTag(SpaceKind.C))
    order: int = 3
    iterations: int = 64
    x_max: float = DEFAULT_X_MAX
    scan_interval: Tuple[float, float] = DEFAULT_SCAN_INTERVAL
    resolution: int = DEFAULT_RESOLUTION
    compact: Tuple[float, float] = DEFAULT_COMPACT

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise CopDynError("order must lie in 0..%d, got %d" % (MAX_ORDER, self.order))
        if self.iterations < MIN_ITERATIONS:
            raise CopDynError("iterations must be at least %d, got %d" % (MIN_ITERATIONS, self.iterations))
        if not self.x_max > 0:
            raise CopDynError("x_max must be positive, got %r" % self.x_max)

    @property
    def growth_order(self) -> int:
        """The m of the growth tests: the order of C^m and O^m, else ``order``."""
        m = self.space.derivative_order
        return min(m, MAX_ORDER) if m is not None else self.order

    @classmethod
    def from_environment(cls, environ: Mapping[str, str], **kwargs) -> "AnalysisSettings":
        """
        Settings with the window half width taken from COPDYN_XMAX when it is set and no x_max is given.

        :raises CopDynError: when the variable is not a positive number
        """
        value: Optional[str] = environ.get(XMAX_VARIABLE)
        if value is not None and "x_max" not in kwargs:
            try:
                kwargs["x_max"] = float(value)
            except ValueError:
                raise CopDynError("%s must be a number, got '%s'" % (XMAX_VARIABLE, value)) from None
            _logger.info("x_max set to %s from %s", value, XMAX_VARIABLE)
        return cls(**kwargs)

    def with_space(self, space: SpaceTag) -> "AnalysisSettings":
        return replace(self, space=space)

    def to_dict(self) -> dict:
        return {
            "space": str(self.space),
            "order": self.order,
            "iterations": self.iterations,
            "x_max": self.x_max,
            "scan_interval": list(self.scan_interval),
            "resolution": self.resolution,
            "compact": list(self.compact),
        }
