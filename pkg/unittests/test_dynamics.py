# -*- coding: utf-8 -*-
"""
@author:        PyCopDyn developers
@copyright:     Copyright 2026

@license:       GPLv3

@file:          test_dynamics.py
@date:          2026-03-20

@note           orbits, Cesàro means, iterated jets, fixed points and strongly runaway symbols
                  run ./unittests/test_dynamics.py
"""

#------------------------------------------------------------------------------
# Python Libs
import sys        # python path handling
import os         # platform independent paths
import math
import unittest   # performs test

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from PyCopDyn.dynamics.fixed_points import Monotonicity, Stability, monotonicity, scan_fixed_points
from PyCopDyn.dynamics.iterate_jets import iterate_jet_list, iterate_jets
from PyCopDyn.dynamics.orbits import OrbitTermination, cesaro_mean_point, cesaro_series, iterate_point
from PyCopDyn.dynamics.runaway import is_strongly_runaway
from PyCopDyn.symbol.expr_errors import DomainError, NumericOverflow
from PyCopDyn.symbol.expr_parser import compose, parse
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_orbits(unittest.TestCase):

    def test_orbit_values(self):
        """
        @note   x^2+1 from 0
        """
        orbit = iterate_point(parse("x^2+1"), 0, 5)
        self.assertListEqual(orbit.values, [0.0, 1.0, 2.0, 5.0, 26.0, 677.0])
        self.assertIs(orbit.terminated_by, OrbitTermination.COMPLETED)
        self.assertEqual(orbit.length, 5)
        self.assertListEqual(iterate_point(parse("x^2"), 3, 0).values, [3.0])
        self.assertRaises(ValueError, iterate_point, parse("x"), 0, -1)

    def test_overflow_keeps_prefix(self):
        """
        @note   the orbit of 2x stops at the overflow guard with every earlier value kept
        """
        orbit = iterate_point(parse("2*x"), 1, 600)
        self.assertIs(orbit.terminated_by, OrbitTermination.OVERFLOW)
        self.assertIsNotNone(orbit.overflow_at)
        self.assertEqual(len(orbit.values), orbit.overflow_at)
        self.assertEqual(orbit.values[10], 1024.0)
        self.assertRaises(NumericOverflow, cesaro_mean_point, parse("2*x"), 1, 600)

    def test_convergence(self):
        """
        @note   0.5x+1 converges to its fixed point 2
        """
        orbit = iterate_point(parse("0.5*x+1"), 0, 200, stop_on_convergence=True)
        self.assertIs(orbit.terminated_by, OrbitTermination.CONVERGED)
        self.assertAlmostEqual(orbit.limit, 2.0, places=10)
        self.assertLess(orbit.length, 200)

    def test_domain_error(self):
        self.assertRaises(DomainError, iterate_point, parse("log(x)"), 0.5, 5)

    def test_cesaro(self):
        self.assertEqual(cesaro_mean_point(parse("x+1"), 0, 10), 5.5)
        self.assertListEqual(cesaro_series(parse("x"), 4, 3), [4.0, 4.0, 4.0])
        self.assertRaises(ValueError, cesaro_series, parse("x"), 0, 0)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=-50, max_value=50), st.integers(min_value=1, max_value=60))
    def test_cesaro_of_translation(self, x0, n):
        """
        @note   the means of x+1 are x0 + (n+1)/2
        """
        self.assertAlmostEqual(cesaro_mean_point(parse("x+1"), x0, n), x0 + (n + 1) / 2.0)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(min_value=-5.0, max_value=5.0), st.integers(min_value=1, max_value=40))
    def test_cesaro_series_is_running_mean(self, x0, n):
        """
        @note   n times the n-th mean is the sum of the first n iterates
        """
        phi = parse("0.5*x+sin(x)")
        means = cesaro_series(phi, x0, n)
        values = iterate_point(phi, x0, n).values
        self.assertEqual(len(means), n)
        self.assertAlmostEqual(means[-1] * n, math.fsum(values[1:]), delta=1e-9 * (1 + abs(means[-1] * n)))

    def test_cesaro_identity(self):
        """
        @note   n phi_[n] - (n-1) phi_[n-1] = phi_n on 10^4 random (phi, x, n <= 100), 500 symbols drawn from families
                whose orbits stay finite, 20 (x, n) pairs each
        """
        rng = np.random.default_rng(20260324)

        def u(lo, hi):
            return float(rng.uniform(lo, hi))

        def lipschitz_pair():
            # |a| + |b| <= 1
            a = u(-1, 1)
            return a, (1.0 - abs(a)) * u(-1, 1)

        families = (
            lambda: "%r*x+%r" % (u(-1, 1), u(-2, 2)),
            lambda: "x+%r" % u(-3, 3),
            lambda: "%r*x+%r*sin(x)" % lipschitz_pair(),
            lambda: "cos(x)+%r" % u(-1, 1),
            lambda: "tanh(%r*x)+%r" % (u(-3, 3), u(-1, 1)),
            lambda: "%r*x*exp(-x^2)+%r" % (u(-4, 4), u(-1, 1)),
            lambda: "x^2+%r" % u(-1.9, 0.0),
        )
        samples = 0
        for i in range(500):
            text = families[i % len(families)]()
            phi = parse(text)
            for _ in range(20):
                x = float(rng.uniform(-1, 1))
                n = int(rng.integers(1, 101))
                means = cesaro_series(phi, x, n)
                phi_n = iterate_point(phi, x, n).values[-1]
                previous = (n - 1) * means[-2] if n > 1 else 0.0
                scale = 1.0 + abs(n * means[-1]) + abs(phi_n)
                self.assertTrue(math.isclose(n * means[-1] - previous, phi_n, rel_tol=1e-9, abs_tol=1e-9 * scale),
                                "%s x=%r n=%d" % (text, x, n))
                samples += 1
        self.assertEqual(samples, 10 ** 4)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_iterate_jets(unittest.TestCase):

    def test_contraction_derivative(self):
        """
        @note   the derivative of the n-th iterate of 0.5x is 0.5^n
        """
        xs = np.linspace(-1, 1, 11)
        for n, ja in iterate_jets(parse("0.5*x"), xs, 10, 1):
            np.testing.assert_allclose(ja.coeffs[1], 0.5 ** n)
            np.testing.assert_allclose(ja.coeffs[0], xs * 0.5 ** n)

    def test_matches_composed_expression(self):
        """
        @note   chaining along the orbit agrees with the jets of phi o phi o phi
        """
        phi = parse("0.5*x+0.1*sin(x)")
        xs = np.linspace(-3, 3, 13)
        third = iterate_jet_list(phi, xs, 3, 4)[2]
        expected = compose(phi, compose(phi, phi)).jets(xs, 4)
        np.testing.assert_allclose(third.coeffs, expected.coeffs, rtol=1e-10, atol=1e-12)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=6))
    def test_semigroup(self, j, k):
        """
        @note   the jets of the (j+k)-th iterate are those of the j-th composed with the k-th
        """
        phi = parse("0.7*x+0.2*tanh(x)")
        xs = np.linspace(-2, 2, 9)
        jets = iterate_jet_list(phi, xs, j + k, 3)
        phi_k_values = jets[k - 1].coeffs[0]
        outer = iterate_jet_list(phi, phi_k_values, j, 0)[j - 1].coeffs[0]
        np.testing.assert_allclose(jets[j + k - 1].coeffs[0], outer, rtol=1e-12, atol=1e-12)

    def test_failures_are_masked(self):
        """
        @note   points whose orbit overflows stay masked
        """
        xs = np.array([0.5, 100.0])
        last = iterate_jet_list(parse("x^2"), xs, 10, 1)[-1]
        self.assertTrue(last.valid[0])
        self.assertFalse(last.valid[1])
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_fixed_points(unittest.TestCase):

    def test_cubic(self):
        """
        @note   fixed points of x^3 and their stability
        """
        scan = scan_fixed_points(parse("x^3"), interval=(-2, 2), resolution=401)
        self.assertEqual(len(scan.points), 3)
        for point, where in zip(scan.points, (-1.0, 0.0, 1.0)):
            self.assertAlmostEqual(point.location, where, places=9)
        self.assertListEqual([p.stability for p in scan.points],
                             [Stability.REPELLING, Stability.SUPER_ATTRACTING, Stability.REPELLING])
        self.assertTrue(scan.complete)
        self.assertEqual(len(scan.certified_points), 3)

    def test_cosine(self):
        scan = scan_fixed_points(parse("cos(x)"), interval=(-5, 5), resolution=1001)
        self.assertEqual(len(scan.points), 1)
        self.assertAlmostEqual(scan.points[0].location, 0.7390851332, places=8)
        self.assertIs(scan.points[0].stability, Stability.ATTRACTING)

    def test_no_fixed_point(self):
        """
        @note   a translation has none, and nothing hints at one outside the window
        """
        scan = scan_fixed_points(parse("x+1"), interval=(-10, 10), resolution=101)
        self.assertListEqual(scan.points, [])
        self.assertTrue(scan.complete)

    def test_exact_zero_without_sign_change(self):
        """
        @note   exp(x) underflows far to the left, so x+exp(x) == x there although phi has no fixed point. Such grid
                points are tangential, and one warning sums them up
        """
        with self.assertLogs("PyCopDyn.FixedPoints", level="WARNING") as logs:
            scan = scan_fixed_points(parse("x+exp(x)"), interval=(-1000, 10), resolution=5051)
        self.assertGreater(len(scan.points), 1)
        self.assertListEqual(scan.certified_points, [])
        self.assertTrue(all(p.tangential for p in scan.points))
        self.assertLess(scan.points[-1].location, -30.0)
        self.assertEqual(sum("not bracketed" in line for line in logs.output), 1)
        # x+x^2 touches the diagonal at the grid point 0
        with self.assertLogs("PyCopDyn.FixedPoints", level="WARNING"):
            scan = scan_fixed_points(parse("x+x^2"), interval=(-1, 1), resolution=201)
        self.assertEqual(len(scan.points), 1)
        self.assertEqual(scan.points[0].location, 0.0)
        self.assertTrue(scan.points[0].tangential)
        self.assertListEqual(scan.certified_points, [])

    def test_exact_zero_with_sign_change(self):
        scan = scan_fixed_points(parse("2*x"), interval=(-1, 1), resolution=201)
        self.assertEqual(len(scan.points), 1)
        self.assertEqual(scan.points[0].location, 0.0)
        self.assertTrue(scan.points[0].certified)

    def test_window_disclosure(self):
        """
        @note   a root beyond the window is flagged
        """
        scan = scan_fixed_points(parse("0.5*x+50"), interval=(-10, 10), resolution=101)
        self.assertListEqual(scan.points, [])
        self.assertTrue(scan.possible_roots_above)
        self.assertFalse(scan.complete)

    def test_bad_arguments(self):
        self.assertRaises(ValueError, scan_fixed_points, parse("x"), (1, 1))
        self.assertRaises(ValueError, scan_fixed_points, parse("x^2"), (0, 1), 1)
        self.assertRaises(DomainError, scan_fixed_points, parse("log(x)"), (-1, 1), 11)

    def test_monotonicity(self):
        self.assertIs(monotonicity(parse("x^3+x")).kind, Monotonicity.INCREASING)
        self.assertIs(monotonicity(parse("-2*x+1")).kind, Monotonicity.DECREASING)
        result = monotonicity(parse("x^2"))
        self.assertIs(result.kind, Monotonicity.NON_MONOTONE)
        self.assertIsNotNone(result.witness)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_runaway(unittest.TestCase):

    def test_translation(self):
        """
        @note   x+1 leaves [-2, 2] for good from n0 = 5
        """
        result = is_strongly_runaway(parse("x+1"), (-2, 2))
        self.assertTrue(result.runaway)
        self.assertEqual(result.n0, 5)
        self.assertEqual(result.reason, "escapes")

    def test_fixed_point_in_compact(self):
        result = is_strongly_runaway(parse("0.5*x+1"), (0, 4))
        self.assertFalse(result.runaway)
        self.assertEqual(result.reason, "fixed-point-in-or-near-K")
        self.assertAlmostEqual(result.witness["fixed_point"], 2.0)

    def test_tangential_point_in_compact(self):
        """
        @note   x+exp(x) == x in floating point on [-100, -50], which is no proof of a fixed point
        """
        with self.assertLogs("PyCopDyn.FixedPoints", level="WARNING"):
            result = is_strongly_runaway(parse("x+exp(x)"), (-100, -50))
        self.assertIsNone(result.runaway)
        self.assertEqual(result.reason, "tangential-fixed-point-in-K")

    def test_decreasing(self):
        """
        @note   -2x moves [1, 2] away with alternating signs
        """
        result = is_strongly_runaway(parse("-2*x"), (1, 2))
        self.assertTrue(result.runaway)
        self.assertEqual(result.n0, 1)
        result = is_strongly_runaway(parse("-x+1"), (-1, 1))
        self.assertFalse(result.runaway)

    def test_non_monotone(self):
        result = is_strongly_runaway(parse("x^2+1"), (-1, 1))
        self.assertIsNone(result.runaway)
        self.assertEqual(result.reason, "non-monotone")
        self.assertRaises(ValueError, is_strongly_runaway, parse("x+1"), (1, -1))
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
#------------------------------------------------------------------------------
