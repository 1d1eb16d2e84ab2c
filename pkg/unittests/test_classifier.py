# -*- coding: utf-8 -*-
"""
@author:        PyCopDyn developers
@copyright:     Copyright 2026

@license:       GPLv3

@file:          test_classifier.py
@date:          2026-03-22

@note           decision rules, verdicts, settings, full classification and batch runs
                  run ./unittests/test_classifier.py
"""

#------------------------------------------------------------------------------
# Python Libs
import sys        # python path handling
import os         # platform independent paths
import unittest   # performs test

#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from PyCopDyn.classifier.analysis import classify_symbol, is_total, merge_pb_verdicts, symbol_of_space
from PyCopDyn.classifier.batch import BatchClassifier
from PyCopDyn.classifier.citations import CITATIONS, EMPIRICAL, describe
from PyCopDyn.classifier.cyclicity import mixing_classification, supercyclicity_obstructions, symbol_profile
from PyCopDyn.classifier.mean_ergodic import mean_ergodic_necessary, summarize
from PyCopDyn.classifier.polynomial_rules import classify_polynomial, escape_start
from PyCopDyn.classifier.power_bounded import monotone_pb_analysis, power_bounded_empirical
from PyCopDyn.classifier.schwartz import schwartz_pb_check, schwartz_symbol_check
from PyCopDyn.classifier.settings import AnalysisSettings
from PyCopDyn.classifier.verdict import (InvalidSpace, Property, Provenance, SpaceKind, SpaceTag, Status, Verdict,
                                         sorted_verdicts)
from PyCopDyn.symbol.expr_errors import CopDynError, PreconditionViolated
from PyCopDyn.symbol.expr_parser import parse
from PyCopDyn.symbol.family import Affine, General, recognize_family
#------------------------------------------------------------------------------

CINF = SpaceTag.parse("cinf")
C0 = SpaceTag.parse("c0")
OM = SpaceTag.parse("oM")
ALL_SPACES = tuple(SpaceTag.parse(t) for t in ("c0", "c1", "c3", "cinf", "om:0", "om:2", "oM", "schwartz", "analytic"))

# fixed points by sign change, or by an exact polynomial root
PLANTED_FIXED_POINTS = (
    "0.5*x+1", "x^3", "cos(x)", "x^2-x", "x+0.5*sin(x)", "x+tanh(x-3)", "2*x-5", "x-0.1*(x-1)^3", "0.5*x+sin(x)",
    "x+(x-4)*exp(-x^2)", "tanh(x)+x/2", "-x", "10+sin(x)", "x^3-3*x+5",
)
# phi' changes sign, phi(x) - x stays positive
PLANTED_CRITICAL_POINTS = (
    "x^2+1", "x^2+x+1", "x+2+sin(2*x)", "x+3+2*cos(x)", "x^4+2", "x+1+0.5*x^2",
)


#------------------------------------------------------------------------------
class test_verdict(unittest.TestCase):

    def test_space_tags(self):
        """
        @note   command line names of the function spaces
        """
        self.assertEqual(SpaceTag.parse("om:2"), SpaceTag(SpaceKind.OM_ORDER, 2))
        self.assertEqual(SpaceTag.parse("c3"), SpaceTag(SpaceKind.C, 3))
        for text in ("c0", "c1", "c5", "cinf", "om:0", "om:4", "oM", "schwartz", "analytic"):
            self.assertEqual(str(SpaceTag.parse(text)), text)
        for text in ("c-1", "om2", "OM", "", "c"):
            self.assertRaises(InvalidSpace, SpaceTag.parse, text)
        self.assertTrue(C0.is_continuous_functions)
        self.assertFalse(C0.embeds_in_C1)
        self.assertTrue(SpaceTag.parse("c1").embeds_in_C1)
        self.assertFalse(SpaceTag.parse("om:0").embeds_in_C1)
        self.assertTrue(OM.embeds_in_C1)
        self.assertTrue(OM.is_O)
        self.assertTrue(CINF.is_Cm)

    def test_construction_rules(self):
        """
        @note   citations must be known, proven statuses need more than grid evidence
        """
        self.assertRaises(ValueError, Verdict, Property.MIXING, Status.INCONCLUSIVE, "no-such-tag")
        self.assertRaises(ValueError, Verdict, Property.MIXING, Status.PROVEN_TRUE, "translation-mixing")
        self.assertRaises(ValueError, Verdict, Property.MIXING, Status.PROVEN_FALSE, "translation-mixing",
                          provenance=Provenance.GRID)
        v = Verdict(Property.MIXING, Status.PROVEN_TRUE, "translation-mixing", witnesses=(("d", 1.0),),
                    provenance=Provenance.STRUCTURAL, space=OM)
        self.assertEqual(v.witness("d"), 1.0)
        self.assertIsNone(v.witness("missing"))

    def test_dict_form(self):
        v = Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_TRUE, EMPIRICAL, witnesses=(("p", 1), ("x", -2.5)),
                    note="sampled", space=SpaceTag.parse("om:1"))
        data = v.to_dict()
        self.assertEqual(data["property"], "PowerBounded")
        self.assertEqual(data["status"], "EmpiricalTrue")
        self.assertEqual(data["provenance"], "grid")
        self.assertEqual(data["space"], "om:1")
        self.assertListEqual(data["witnesses"], [{"description": "p", "value": 1},
                                                 {"description": "x", "value": -2.5}])
        self.assertEqual(Verdict.from_dict(data), v)

    def test_status_flags(self):
        self.assertTrue(Status.PROVEN_FALSE.proven)
        self.assertFalse(Status.EMPIRICAL_TRUE.proven)
        self.assertTrue(Status.EMPIRICAL_TRUE.positive)
        self.assertTrue(Status.EMPIRICAL_FALSE.negative)
        self.assertFalse(Status.INCONCLUSIVE.positive or Status.INCONCLUSIVE.negative)

    def test_sorting(self):
        verdicts = [Verdict(Property.SYMBOL_FOR, Status.INCONCLUSIVE, EMPIRICAL),
                    Verdict(Property.MIXING, Status.INCONCLUSIVE, EMPIRICAL),
                    Verdict(Property.POWER_BOUNDED, Status.INCONCLUSIVE, EMPIRICAL)]
        self.assertListEqual([v.property for v in sorted_verdicts(verdicts)],
                             [Property.POWER_BOUNDED, Property.MIXING, Property.SYMBOL_FOR])

    def test_citations(self):
        self.assertIn("affine-pb-me", CITATIONS)
        self.assertTrue(describe("sot-convergence"))
        self.assertRaises(KeyError, describe, "no-such-tag")
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_polynomial_rules(unittest.TestCase):

    def test_affine_table(self):
        """
        @note   power bounded and mean ergodic iff |a| < 1, a = -1, or the identity
        """
        for a in (0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0):
            for b in (0.0, 1.0):
                expected = abs(a) < 1.0 or a == -1.0 or (a == 1.0 and b == 0.0)
                verdicts = classify_polynomial(Affine(a, b), OM)
                for v in verdicts[:2]:
                    self.assertEqual(v.status, Status.PROVEN_TRUE if expected else Status.PROVEN_FALSE,
                                     "a=%r b=%r %s" % (a, b, v.property.value))
                    self.assertIs(v.provenance, Provenance.STRUCTURAL)
                self.assertEqual(len(verdicts), 3 if abs(a) < 1.0 else 2)

    def test_iterate_limit(self):
        verdicts = classify_polynomial(Affine(0.5, 1.0))
        self.assertIs(verdicts[2].property, Property.ITERATE_CONVERGENCE)
        self.assertAlmostEqual(verdicts[2].witness("limit"), 2.0)

    def test_higher_degree(self):
        """
        @note   |phi(x)| >= |x| + 1 beyond the escape start
        """
        family = recognize_family(parse("x^2+1"))
        verdicts = classify_polynomial(family)
        self.assertTrue(all(v.status is Status.PROVEN_FALSE for v in verdicts))
        n0 = escape_start(family.coeffs)
        for x in (n0, n0 + 0.5, -n0, 3 * n0):
            self.assertGreaterEqual(abs(x * x + 1), abs(x) + 1)
        self.assertRaises(ValueError, classify_polynomial, General())

    def test_schwartz_not_covered(self):
        verdicts = classify_polynomial(Affine(0.5, 0.0), SpaceTag.parse("schwartz"))
        self.assertTrue(all(v.status is Status.INCONCLUSIVE for v in verdicts))
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_cyclicity(unittest.TestCase):

    def test_exact_profiles(self):
        profile = symbol_profile(parse("x+1"))
        self.assertTrue(profile.exact)
        self.assertTrue(profile.certified_mixing_profile)
        profile = symbol_profile(parse("x^3"))
        self.assertListEqual([round(x, 9) for x in profile.fixed_points], [-1.0, 0.0, 1.0])
        self.assertTrue(profile.has_critical_point)
        profile = symbol_profile(parse("x^2-x"))
        self.assertFalse(profile.injective)
        self.assertIsNotNone(profile.witness("equal_values"))

    def check_witness(self, phi, v):
        fixed = v.witness("fixed_point")
        if fixed is not None:
            self.assertLessEqual(abs(phi.evaluate(fixed) - fixed), 1e-8 * (1.0 + abs(fixed)), str(phi))
        critical = v.witness("critical_point")
        if critical is not None:
            self.assertLessEqual(abs(phi.jet(critical, 1)[1]), 1e-6, str(phi))
        self.assertFalse(fixed is None and critical is None, str(phi))

    def test_obstructions_are_sound(self):
        """
        @note   planted fixed points rule weak supercyclicity out on every space, planted zeros of phi' on the spaces
                of C^1 functions and, through non injectivity, on C(R)
        """
        for text in PLANTED_FIXED_POINTS:
            phi = parse(text)
            profile = symbol_profile(phi)
            for space in ALL_SPACES:
                v = supercyclicity_obstructions(phi, space, profile=profile)[0]
                self.assertIs(v.property, Property.WEAKLY_SUPERCYCLIC)
                self.assertIs(v.status, Status.PROVEN_FALSE, "%s on %s" % (text, space))
                self.assertIsNot(v.provenance, Provenance.GRID)
                self.check_witness(phi, v)
        for text in PLANTED_CRITICAL_POINTS:
            phi = parse(text)
            profile = symbol_profile(phi)
            self.assertIsNot(profile.has_fixed_point, True, text)
            for space in ALL_SPACES:
                v = supercyclicity_obstructions(phi, space, profile=profile)[0]
                if not (space.embeds_in_C1 or space.is_continuous_functions):
                    self.assertIsNot(v.status, Status.PROVEN_FALSE, "%s on %s" % (text, space))
                    continue
                self.assertIs(v.status, Status.PROVEN_FALSE, "%s on %s" % (text, space))
                self.assertIsNot(v.provenance, Provenance.GRID)
                self.check_witness(phi, v)

    def test_no_false_certification(self):
        """
        @note   increasing symbols with phi' > 0 and no fixed point are never ruled out, even where phi(x) - x
                rounds to 0.0 far from the origin
        """
        for text in ("x+1+0.1*tanh(x)", "x+exp(x)", "x+exp(-x^2)"):
            phi = parse(text)
            profile = symbol_profile(phi)
            self.assertIsNot(profile.has_fixed_point, True, text)
            self.assertIsNot(profile.has_critical_point, True, text)
            self.assertListEqual(profile.fixed_points, [], text)
            for space in ALL_SPACES:
                verdicts = supercyclicity_obstructions(phi, space, profile=profile)
                verdicts.append(mixing_classification(phi, space, profile=profile))
                for v in verdicts:
                    self.assertIsNot(v.status, Status.PROVEN_FALSE, "%s on %s: %s" % (text, space, v.property.value))
        self.assertIsNot(mixing_classification(parse("x+exp(x)"), SpaceTag.parse("c1")).status, Status.PROVEN_FALSE)

    def test_critical_point(self):
        """
        @note   x^2+1 has no fixed point, its critical point rules it out on C^1 spaces
        """
        phi = parse("x^2+1")
        v = supercyclicity_obstructions(phi, CINF)[0]
        self.assertIs(v.status, Status.PROVEN_FALSE)
        self.assertAlmostEqual(v.witness("critical_point"), 0.0, places=9)
        v = supercyclicity_obstructions(phi, C0)[0]
        self.assertIs(v.status, Status.PROVEN_FALSE)
        self.assertEqual(v.citation, "supercyclic-increasing-no-fixed-point")

    def test_translation(self):
        """
        @note   x+1 is mixing on O_M and on C^infinity
        """
        self.assertIs(mixing_classification(parse("x+1"), OM).status, Status.PROVEN_TRUE)
        self.assertEqual(mixing_classification(parse("x+1"), OM).citation, "translation-mixing")
        self.assertIs(mixing_classification(parse("x+1"), CINF).status, Status.PROVEN_TRUE)
        verdicts = supercyclicity_obstructions(parse("x+1"), C0)
        self.assertListEqual([v.property for v in verdicts],
                             [Property.WEAKLY_SUPERCYCLIC, Property.SUPERCYCLIC, Property.STRONGLY_RUNAWAY])
        self.assertTrue(all(v.status is Status.PROVEN_TRUE for v in verdicts))

    def test_grid_profile_never_proves_mixing(self):
        """
        @note   without a certificate the mixing question stays open
        """
        phi = parse("x+1+0.5*sin(x)")
        self.assertIs(mixing_classification(phi, CINF).status, Status.INCONCLUSIVE)
        self.assertIs(supercyclicity_obstructions(phi, CINF)[0].status, Status.EMPIRICAL_TRUE)
        self.assertIs(mixing_classification(parse("2*x+1"), OM).status, Status.PROVEN_FALSE)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_mean_ergodic(unittest.TestCase):

    def test_translation_escapes(self):
        verdict = summarize(mean_ergodic_necessary(parse("x+1")))
        self.assertIs(verdict.status, Status.PROVEN_FALSE)

    def test_contraction(self):
        verdict = summarize(mean_ergodic_necessary(parse("0.5*x+1")))
        self.assertIs(verdict.status, Status.EMPIRICAL_TRUE)

    def test_preconditions(self):
        self.assertRaises(PreconditionViolated, mean_ergodic_necessary, parse("x"), None, 5)
        self.assertRaises(ValueError, mean_ergodic_necessary, parse("x"), None, 20, (1, 1))

    def test_summary_order(self):
        """
        @note   proven failures come first, then empirical failures
        """
        battery = [Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_TRUE, "me-iterates-over-n"),
                   Verdict(Property.MEAN_ERGODIC, Status.EMPIRICAL_FALSE, "me-iterates-over-n"),
                   Verdict(Property.MEAN_ERGODIC, Status.PROVEN_FALSE, "me-single-fixed-point",
                           provenance=Provenance.STRUCTURAL)]
        self.assertEqual(summarize(battery).citation, "me-single-fixed-point")
        self.assertIs(summarize(battery[:2]).status, Status.EMPIRICAL_FALSE)
        self.assertIs(summarize(battery[:1]).status, Status.EMPIRICAL_TRUE)
        self.assertIs(summarize([]).status, Status.INCONCLUSIVE)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_power_bounded(unittest.TestCase):

    def test_empirical(self):
        self.assertIs(power_bounded_empirical(parse("0.5*x"), m=1).status, Status.EMPIRICAL_TRUE)
        verdict = power_bounded_empirical(parse("2*x"), m=0, n_max=600)
        self.assertIs(verdict.status, Status.EMPIRICAL_FALSE)
        self.assertRaises(ValueError, power_bounded_empirical, parse("x"), 0, 1)

    def test_monotone_analysis(self):
        """
        @note   an attracting fixed point gives the limit of the iterates
        """
        verdict = monotone_pb_analysis(parse("0.5*x+0.1*sin(x)"))
        self.assertIs(verdict.status, Status.EMPIRICAL_TRUE)
        self.assertAlmostEqual(verdict.witness("limit"), 0.0, places=9)
        self.assertRaises(PreconditionViolated, monotone_pb_analysis, parse("x^2"))
        self.assertRaises(PreconditionViolated, monotone_pb_analysis, parse("-x+3"))
        verdict = monotone_pb_analysis(parse("x+1+0.5*sin(x)"))
        self.assertTrue(verdict.status.negative or verdict.status is Status.INCONCLUSIVE)

    def test_merge(self):
        """
        @note   proven beats empirical, agreement keeps the growth fit, disagreement is inconclusive
        """
        grid_true = Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_TRUE, "iterate-bound-Om", witnesses=(("p", 1),))
        grid_false = Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_FALSE, "iterate-bound-Om")
        inconclusive = Verdict(Property.POWER_BOUNDED, Status.INCONCLUSIVE, "iterate-bound-Om")
        attracting = Verdict(Property.POWER_BOUNDED, Status.EMPIRICAL_TRUE, "monotone-attracting-fixed-point",
                             witnesses=(("limit", 2.0),))
        several = Verdict(Property.POWER_BOUNDED, Status.PROVEN_FALSE, "monotone-attracting-fixed-point",
                          provenance=Provenance.CERTIFIED_WITNESS)
        self.assertIs(merge_pb_verdicts(grid_true, None), grid_true)
        self.assertIs(merge_pb_verdicts(grid_true, several), several)
        self.assertIs(merge_pb_verdicts(inconclusive, attracting), attracting)
        merged = merge_pb_verdicts(grid_true, attracting)
        self.assertIs(merged.status, Status.EMPIRICAL_TRUE)
        self.assertEqual(merged.witness("p"), 1)
        self.assertEqual(merged.witness("limit"), 2.0)
        self.assertIs(merge_pb_verdicts(grid_false, attracting).status, Status.INCONCLUSIVE)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_schwartz(unittest.TestCase):

    def test_symbol_conditions(self):
        self.assertIs(schwartz_symbol_check(parse("x^2+1")).status, Status.EMPIRICAL_TRUE)
        verdict = schwartz_symbol_check(parse("sin(x)"))
        self.assertIs(verdict.status, Status.EMPIRICAL_FALSE)
        self.assertEqual(verdict.witness("condition"), 2)

    def test_power_bounded(self):
        self.assertIs(schwartz_pb_check(parse("0.5*x")).status, Status.EMPIRICAL_FALSE)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_settings(unittest.TestCase):

    def test_environment(self):
        """
        @note   COPDYN_XMAX applies unless x_max is given explicitly
        """
        self.assertEqual(AnalysisSettings.from_environment({"COPDYN_XMAX": "50"}).x_max, 50.0)
        self.assertEqual(AnalysisSettings.from_environment({"COPDYN_XMAX": "50"}, x_max=10.0).x_max, 10.0)
        self.assertEqual(AnalysisSettings.from_environment({}).x_max, 100.0)
        self.assertRaises(CopDynError, AnalysisSettings.from_environment, {"COPDYN_XMAX": "wide"})
        self.assertRaises(CopDynError, AnalysisSettings.from_environment, {"COPDYN_XMAX": "-1"})

    def test_validation(self):
        self.assertRaises(CopDynError, AnalysisSettings, iterations=5)
        self.assertRaises(CopDynError, AnalysisSettings, order=9)

    def test_growth_order(self):
        self.assertEqual(AnalysisSettings(space=SpaceTag.parse("om:2")).growth_order, 2)
        self.assertEqual(AnalysisSettings(space=C0).growth_order, 0)
        self.assertEqual(AnalysisSettings(space=CINF, order=4).growth_order, 4)
        self.assertEqual(AnalysisSettings().with_space(OM).to_dict()["space"], "oM")
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_analysis(unittest.TestCase):

    def test_totality(self):
        self.assertTrue(is_total(parse("sin(x^2)+exp(-x)*x^3").root))
        self.assertFalse(is_total(parse("1/(1+x^2)").root))
        self.assertFalse(is_total(parse("x^(-2)").root))
        self.assertFalse(is_total(parse("log(1+x^2)").root))

    def test_symbol_for(self):
        """
        @note   C_phi acts on C^infinity for every elementary symbol defined everywhere
        """
        v = symbol_of_space(parse("sin(x)"), CINF)
        self.assertIs(v.status, Status.PROVEN_TRUE)
        v = symbol_of_space(parse("1/x"), CINF)
        self.assertIs(v.status, Status.PROVEN_FALSE)
        self.assertEqual(v.witness("undefined_at"), 0.0)
        self.assertIs(symbol_of_space(parse("1/(1+x^2)"), CINF).status, Status.EMPIRICAL_TRUE)
        v = symbol_of_space(parse("x^2+1"), OM)
        self.assertIs(v.status, Status.PROVEN_TRUE)
        self.assertEqual(v.witness("orders"), 8)

    def test_polynomial_battery(self):
        """
        @note   the polynomial rule decides every affine symbol and the classic quadratic and cubic ones
        """
        settings = AnalysisSettings(space=OM)
        for a in (0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0):
            for b in (0.0, 1.0):
                text = "%r*x+%r" % (a, b)
                report = classify_symbol(parse(text), settings)
                expected = abs(a) < 1.0 or a == -1.0 or (a == 1.0 and b == 0.0)
                for prop in ("PowerBounded", "MeanErgodic"):
                    status = report.verdict(prop).status
                    self.assertTrue(status.proven, text)
                    self.assertEqual(status.positive, expected, "%s %s" % (text, prop))
        for text in ("x^2+1", "x^3", "x^2-x"):
            report = classify_symbol(parse(text), settings)
            self.assertIs(report.verdict("PowerBounded").status, Status.PROVEN_FALSE)
            self.assertIs(report.verdict("MeanErgodic").status, Status.PROVEN_FALSE)
            self.assertEqual(report.family["tag"], "Polynomial")

    def test_report(self):
        """
        @note   verdicts come sorted by property and the settings are echoed
        """
        settings = AnalysisSettings(space=OM, iterations=32)
        report = classify_symbol(parse("0.5*x+1"), settings)
        self.assertEqual(report.symbol_text, "0.5*x+1")
        self.assertEqual(report.space, "oM")
        self.assertDictEqual(report.family, {"tag": "Affine", "a": 0.5, "b": 1.0})
        self.assertEqual(report.parameters["iterations"], 32)
        self.assertListEqual(report.verdicts, sorted_verdicts(report.verdicts))
        self.assertIs(report.verdict("Mixing").status, Status.PROVEN_FALSE)
        self.assertAlmostEqual(report.verdict("IterateConvergence").witness("limit"), 2.0)
        for v in report.verdicts:
            if v.status.proven:
                self.assertIsNot(v.provenance, Provenance.GRID)

    def test_general_symbol(self):
        settings = AnalysisSettings(space=SpaceTag.parse("om:1"), iterations=32)
        report = classify_symbol(parse("0.5*x+0.1*sin(x)"), settings)
        self.assertEqual(report.family["tag"], "General")
        self.assertTrue(report.verdict("PowerBounded").status.positive)
        self.assertIsNotNone(report.verdict("MeanErgodic"))
        self.assertIs(report.verdict("WeaklySupercyclic").status, Status.PROVEN_FALSE)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_batch(unittest.TestCase):

    def test_batch(self):
        """
        @note   results keep the input order, failures do not stop the batch
        """
        seen = []
        runner = BatchClassifier(settings=AnalysisSettings(space=OM), parallel_sims=2, callback=seen.append)
        results = runner.classify(["0.5*x+1", "x^^2", "x+1"])
        self.assertListEqual([r.index for r in results], [0, 1, 2])
        self.assertListEqual([r.symbol_text for r in results], ["0.5*x+1", "x^^2", "x+1"])
        self.assertTrue(results[0].ok)
        self.assertFalse(results[1].ok)
        self.assertIn("ExpressionSyntaxError", results[1].error)
        self.assertIs(results[2].report.verdict("Mixing").status, Status.PROVEN_TRUE)
        self.assertEqual((runner.run_count, runner.ok_count, runner.fail_count), (3, 2, 1))
        self.assertEqual(sorted(r.index for r in seen), [0, 1, 2])

    def test_unexpected_errors_are_contained(self):
        """
        @note   an exception outside the PyCopDyn hierarchy is stored, the other symbols still complete
        """
        class NotASymbol:
            def __str__(self):
                return "not a symbol"

        runner = BatchClassifier(settings=AnalysisSettings(space=OM, iterations=16), parallel_sims=2)
        with self.assertLogs("PyCopDyn.BatchClassifier", level="ERROR"):
            results = runner.classify(["0.5*x+1", NotASymbol(), "x+1"])
        self.assertEqual(len(results), 3)
        self.assertTrue(results[0].ok)
        self.assertFalse(results[1].ok)
        self.assertEqual(results[1].symbol_text, "not a symbol")
        self.assertIsNotNone(results[1].error)
        self.assertTrue(results[2].ok)
        self.assertEqual((runner.run_count, runner.ok_count, runner.fail_count), (3, 2, 1))

    def test_callback_errors_are_contained(self):
        def broken(result):
            raise RuntimeError("callback failure")

        results = BatchClassifier(callback=broken, parallel_sims=1).classify(["x+1"])
        self.assertTrue(results[0].ok)

    def test_arguments(self):
        self.assertRaises(ValueError, BatchClassifier, parallel_sims=0)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
#------------------------------------------------------------------------------
