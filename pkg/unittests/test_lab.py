# -*- coding: utf-8 -*-
"""
@author:        PyCopDyn developers
@copyright:     Copyright 2026

@license:       GPLv3

@file:          test_lab.py
@date:          2026-03-23

@note           operator powers, Cesàro means of the operator, convergence probes and the counterexample series
                  run ./unittests/test_lab.py
"""

#------------------------------------------------------------------------------
# Python Libs
import sys        # python path handling
import os         # platform independent paths
import math
import unittest   # performs test

import numpy as np

#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from PyCopDyn.lab.counterexamples import (FAIL, NO_CLAIM, PASS, counterexample_bump_sequence,
                                          counterexample_sin_x_squared)
from PyCopDyn.lab.operator_lab import (LimitKind, SampledFunction, apply_iterated, compact_grid, convergence_probe,
                                       operator_cesaro, superposition_continuity_check)
from PyCopDyn.symbol.expr_errors import NumericOverflow, PreconditionViolated, UnsupportedOrder
from PyCopDyn.symbol.expr_parser import parse
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_operator_lab(unittest.TestCase):

    def test_apply_iterated(self):
        """
        @note   sin o φ_30 with φ = 0.5x+1 is flat at sin(2) on [-3, 3]
        """
        sampled = apply_iterated(parse("sin(x)"), parse("0.5*x+1"), 30, (-3, 3))
        self.assertEqual(sampled.order, 0)
        np.testing.assert_allclose(sampled.values, math.sin(2.0), atol=1e-8)
        self.assertEqual(sampled.grid.size, 201)

    def test_power_zero_is_f(self):
        sampled = apply_iterated(parse("x^3"), parse("0.5*x+1"), 0, (-1, 1), m=1, points=5)
        np.testing.assert_allclose(sampled.values, np.linspace(-1, 1, 5) ** 3)
        np.testing.assert_allclose(sampled.derivative(1), 3 * np.linspace(-1, 1, 5) ** 2)

    def test_contraction_flattens_derivatives(self):
        """
        @note   the jets of f o φ_60 collapse to (f(2), 0, 0) for a contraction to 2
        """
        phi = parse("0.5*x+1")
        for text in ("sin(x)", "exp(-x^2)", "x^3"):
            f = parse(text)
            sampled = apply_iterated(f, phi, 60, (-3, 3), m=2)
            np.testing.assert_allclose(sampled.values, f.evaluate(2.0), rtol=1e-12, atol=1e-12)
            self.assertLess(np.max(np.abs(sampled.derivative(1))), 1e-9)
            self.assertLess(np.max(np.abs(sampled.derivative(2))), 1e-9)

    def test_arguments(self):
        phi = parse("x")
        self.assertRaises(ValueError, apply_iterated, parse("x"), phi, -1)
        self.assertRaises(UnsupportedOrder, apply_iterated, parse("x"), phi, 1, (-1, 1), 9)
        self.assertRaises(ValueError, apply_iterated, parse("x"), phi, 1, (1, -1))
        self.assertRaises(NumericOverflow, apply_iterated, parse("x"), parse("2*x"), 600)
        self.assertRaises(ValueError, compact_grid, (0, 1), 1)

    def test_operator_cesaro(self):
        """
        @note   the means of x o (x+k) over k = 1..n are x + (n+1)/2
        """
        sampled = operator_cesaro(parse("x"), parse("x+1"), 10, (-1, 1), m=1, points=11)
        np.testing.assert_allclose(sampled.values, np.linspace(-1, 1, 11) + 5.5)
        np.testing.assert_allclose(sampled.derivative(1), 1.0)
        self.assertRaises(ValueError, operator_cesaro, parse("x"), parse("x+1"), 0)

    def test_sampled_function(self):
        grid = np.linspace(0, 1, 3)
        self.assertRaises(ValueError, SampledFunction, grid, np.zeros((2, 4)))
        self.assertRaises(ValueError, SampledFunction, [0.0, 0.0, 1.0], np.zeros((1, 3)))
        sampled = SampledFunction(grid, np.vstack((grid, np.ones(3))), "identity")
        self.assertListEqual(sampled.to_series().trace_names, ["x", "d0", "d1"])
        self.assertIn("# identity", sampled.to_series().to_text())
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_convergence_probe(unittest.TestCase):

    def test_constant_limit(self):
        """
        @note   a contraction to 2 sends every test function to the constant f(2)
        """
        probe = convergence_probe(parse("sin(x)"), parse("0.5*x+1"))
        self.assertIs(probe.limit_kind, LimitKind.CONSTANT)
        self.assertAlmostEqual(probe.limit_value, math.sin(2.0), places=10)
        self.assertAlmostEqual(probe.fixed_point, 2.0, places=10)
        self.assertIsNotNone(probe.detected_at)
        self.assertLess(probe.sup_deviations[-1], 1e-6)
        self.assertEqual(probe.to_dict()["limit_kind"], "constant")
        self.assertEqual(len(probe.to_dict()["sup_deviations"]), 101)

    def test_derivatives_converge(self):
        """
        @note   with two derivatives on [-3, 3] the limit f(2) shows up by n = 60
        """
        for text, limit in (("sin(x)", math.sin(2.0)), ("exp(-x^2)", math.exp(-4.0)), ("x^3", 8.0)):
            probe = convergence_probe(parse(text), parse("0.5*x+1"), (-3, 3), m=2, n_max=60)
            self.assertIs(probe.limit_kind, LimitKind.CONSTANT, text)
            self.assertTrue(math.isclose(probe.limit_value, limit, rel_tol=1e-9, abs_tol=1e-12), text)
            self.assertIsNotNone(probe.detected_at, text)
            self.assertLessEqual(probe.detected_at, 60, text)
            self.assertLess(probe.sup_deviations[-1], 1e-6, text)

    def test_decay_along_escaping_orbits(self):
        """
        @note   exp(-x^2) o (x+n) tends to 0 on compacts
        """
        probe = convergence_probe(parse("exp(-x^2)"), parse("x+1"), n_max=40)
        self.assertIs(probe.limit_kind, LimitKind.CONSTANT)
        self.assertEqual(probe.limit_value, 0.0)
        self.assertIsNone(probe.fixed_point)

    def test_no_limit(self):
        probe = convergence_probe(parse("sin(x)"), parse("x+1"), n_max=50)
        self.assertIs(probe.limit_kind, LimitKind.NONE_DETECTED)
        self.assertIsNone(probe.limit_value)
        probe = convergence_probe(parse("sin(x)"), parse("2*x"), n_max=60)
        self.assertIs(probe.limit_kind, LimitKind.NONE_DETECTED)
        self.assertEqual(probe.fixed_point, 0.0)

    def test_arguments(self):
        self.assertRaises(PreconditionViolated, convergence_probe, parse("sin(x)"), parse("x"), (-1, 1), 0, 1)
        self.assertRaises(NumericOverflow, convergence_probe, parse("sin(x)"), parse("2*x"), (-3, 3), 0, 600)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_superposition(unittest.TestCase):

    def test_translation_perturbation(self):
        """
        @note   sin o (x + 1/k) approaches sin in C^2([-2, 2])
        """
        series = superposition_continuity_check(parse("sin(x)"), parse("x"))
        self.assertEqual(len(series.ks), 32)
        self.assertTrue(series.eventually_decreasing)
        self.assertLessEqual(series.deviations[0], 2 * math.sin(0.5) + 1e-12)
        self.assertLess(series.deviations[-1], 1.0 / 32)
        self.assertListEqual(series.to_series().trace_names, ["k", "deviation"])

    def test_order_limit(self):
        self.assertRaises(UnsupportedOrder, superposition_continuity_check, parse("sin(x)"), parse("x"), (-1, 1), 6)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_counterexamples(unittest.TestCase):

    def test_bump_sequence(self):
        """
        @note   |f_n|_{0,p} >= n for every n >= p, p = 1, 2, 3 and n up to 12
        """
        for p in (1, 2, 3):
            series = counterexample_bump_sequence(p, range(1, 13))
            self.assertEqual(series.summary, PASS, "p=%d" % p)
            self.assertListEqual(series.ns, list(range(1, 13)))
            for n, value, claimed in zip(series.ns, series.values, series.claims):
                self.assertEqual(claimed, n >= p)
                if claimed:
                    self.assertGreaterEqual(value / n, 1 - 1e-9, "p=%d n=%d" % (p, n))
        self.assertTrue(all(counterexample_bump_sequence(1, range(1, 9)).holds))
        self.assertEqual(series.to_dict()["which"], "bump")

    def test_bump_without_claim(self):
        """
        @note   n < p makes no claim
        """
        series = counterexample_bump_sequence(9, range(1, 4))
        self.assertEqual(series.summary, NO_CLAIM)
        self.assertNotEqual(series.summary, FAIL)
        self.assertRaises(PreconditionViolated, counterexample_bump_sequence, 0, [1])

    def test_sin_x_squared(self):
        """
        @note   weighted derivatives of order 4 grow along x_k
        """
        series = counterexample_sin_x_squared(1, range(1, 7))
        self.assertEqual(series.order, 4)
        self.assertEqual(series.summary, PASS)
        self.assertTrue(series.increasing)
        self.assertAlmostEqual(series.xs[0] ** 2, 2.5 * math.pi)
        self.assertEqual(series.to_dict()["which"], "sinsq")

    def test_sin_x_squared_ratio(self):
        """
        @note   value_k / x_k^2 stays above a positive constant for k = 2..8
        """
        series = counterexample_sin_x_squared(1, range(2, 9))
        self.assertEqual(len(series.ratios), 7)
        self.assertGreater(min(series.ratios), 0.0)
        self.assertEqual(series.summary, PASS)

    def test_sin_x_squared_limits(self):
        self.assertRaises(UnsupportedOrder, counterexample_sin_x_squared, 4, range(1, 3))
        self.assertRaises(PreconditionViolated, counterexample_sin_x_squared, 0, range(1, 3))
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
#------------------------------------------------------------------------------
