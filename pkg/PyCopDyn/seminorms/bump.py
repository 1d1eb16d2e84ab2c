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
# Name:        bump.py
# Purpose:     Smooth bump functions with polynomial plateaus
#
# Author:      PyCopDyn developers
#
# Created:     12-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
The bump family f_n, supported in [n, n+1] and equal to n(1+x^2)^n on the plateau [n+δ, n+1-δ], δ = min(1/n, 1/4).

The glue is the usual smooth step S(t) = ψ(t) / (ψ(t) + ψ(1-t)) with ψ(t) = exp(-1/t) for t > 0 and 0 otherwise:

.. code-block:: text

    f_n(x) = n (1+x^2)^n  S((x-n)/δ)  S((n+1-x)/δ)

The derivatives of ψ are coded up to order 3, which bounds the order of the jets. A :class:`BumpFunction` has the
same ``jets`` interface as a parsed expression, so it can be handed to the seminorm scans.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import numpy as np

from ..symbol.expr_errors import UnsupportedOrder
from ..symbol.jet import JetArray, faa_di_bruno, leibniz, overflow_mask, power_derivatives, quotient

__all__ = ['BumpFunction', 'smooth_step_jets', 'BUMP_MAX_ORDER']

BUMP_MAX_ORDER = 3

#: Below this, exp(-1/t) underflows to 0 and the derivative formulas lose meaning.
_PSI_CUTOFF = 1e-3


def _psi_jets(t: np.ndarray, m: int) -> np.ndarray:
    out = np.zeros((m + 1,) + t.shape)
    on = t > _PSI_CUTOFF
    s = np.where(on, t, 1.0)
    with np.errstate(all='ignore'):
        psi = np.where(on, np.exp(-1.0 / s), 0.0)
        out[0] = psi
        if m >= 1:
            out[1] = psi / s ** 2
        if m >= 2:
            out[2] = psi * (1.0 - 2.0 * s) / s ** 4
        if m >= 3:
            out[3] = psi * (6.0 * s ** 2 - 6.0 * s + 1.0) / s ** 6
    return out


def smooth_step_jets(t: np.ndarray, m: int) -> np.ndarray:
    """Jets in t of the smooth step S, which is 0 for t <= 0 and 1 for t >= 1."""
    if m > BUMP_MAX_ORDER:
        raise UnsupportedOrder(m, BUMP_MAX_ORDER)
    left = _psi_jets(t, m)
    right = _psi_jets(1.0 - t, m)
    right *= np.array([(-1.0) ** k for k in range(m + 1)]).reshape((m + 1,) + (1,) * t.ndim)
    return quotient(left, left + right)


def _scaled(jets: np.ndarray, factor: float) -> np.ndarray:
    """Jets of g(factor * x + c) from the jets of g taken at factor * x + c."""
    scale = np.array([factor ** k for k in range(jets.shape[0])]).reshape((-1,) + (1,) * (jets.ndim - 1))
    return jets * scale


class BumpFunction:
    """
    The n-th member of the bump family.

    :param n: index of the bump, n >= 1
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("bump functions are indexed from 1")
        self.n = int(n)
        self.delta = min(1.0 / n, 0.25)

    def __str__(self):
        return "bump_%d" % self.n

    @property
    def support(self):
        return float(self.n), float(self.n + 1)

    @property
    def plateau(self):
        return self.n + self.delta, self.n + 1 - self.delta

    def plateau_value(self, x: float) -> float:
        return self.n * (1.0 + x * x) ** self.n

    def jets(self, xs, m: int) -> JetArray:
        """Jets of order m <= 3 over the points xs."""
        if m > BUMP_MAX_ORDER:
            raise UnsupportedOrder(m, BUMP_MAX_ORDER)
        xs = np.asarray(xs, dtype=float)
        n, delta = self.n, self.delta
        inner = np.zeros((m + 1,) + xs.shape)
        inner[0] = 1.0 + xs * xs
        if m >= 1:
            inner[1] = 2.0 * xs
        if m >= 2:
            inner[2] = 2.0
        derivs, _ = power_derivatives(inner[0], n, m)
        plateau = n * faa_di_bruno(derivs, inner)
        rising = _scaled(smooth_step_jets((xs - n) / delta, m), 1.0 / delta)
        falling = _scaled(smooth_step_jets((n + 1 - xs) / delta, m), -1.0 / delta)
        coeffs = leibniz(leibniz(plateau, rising), falling)
        ok = np.ones(xs.shape, dtype=bool)
        return JetArray(xs, coeffs, ok, overflow_mask(coeffs), None, str(self))

    def evaluate(self, x: float) -> float:
        return float(self.jets(np.array([float(x)]), 0).coeffs[0, 0])

    def values(self, xs) -> np.ndarray:
        return self.jets(xs, 0).coeffs[0]
