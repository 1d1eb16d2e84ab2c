# -*- coding: utf-8 -*-
"""
@author:        PyCopDyn developers
@copyright:     Copyright 2026

@license:       GPLv3

@file:          test_cli.py
@date:          2026-03-24

@note           exit codes, CSV and JSON output of the copdyn command, golden files
                  run ./unittests/test_cli.py
"""

#------------------------------------------------------------------------------
# Python Libs
import sys        # python path handling
import os         # platform independent paths
import io
import json
import logging
import pkgutil
import importlib
import tempfile
import unittest   # performs test
from contextlib import redirect_stderr, redirect_stdout

#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
import PyCopDyn
from PyCopDyn.cli.copdyn import main
#------------------------------------------------------------------------------

golden_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")

# The documented example invocations
examples = [
    ["classify", "--symbol", "0.5*x+1", "--space", "oM"],
    ["classify", "--symbol", "x+1", "--space", "om:2"],
    ["orbit", "--symbol", "x^2+1", "--x0", "0", "--n", "5"],
    ["cesaro", "--symbol", "x", "--x0", "4", "--n", "3"],
    ["orbit", "--symbol", "2*x", "--x0", "1", "--n", "600"],
    ["seminorm", "--function", "x", "--order", "0", "--weight", "1"],
    ["counterexamples", "--which", "bump", "--p", "1", "--n", "1..8"],
    ["counterexamples", "--which", "sinsq", "--n0", "1", "--k", "1..6"],
]


def run_cli(*argv):
    """Runs the command, returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def read_golden(name):
    with open(os.path.join(golden_dir, name), "r", encoding="utf-8", newline="") as fin:
        return fin.read()


#------------------------------------------------------------------------------
class test_cli_series(unittest.TestCase):

    def test_orbit(self):
        """
        @note   x^2+1 from 0, header row first
        """
        code, out, _ = run_cli("orbit", "--symbol", "x^2+1", "--x0", "0", "--n", "5")
        self.assertEqual(code, 0)
        self.assertEqual(out, read_golden("orbit_x2p1_x0_0_n5.csv"))

    def test_cesaro(self):
        code, out, _ = run_cli("cesaro", "--symbol", "x", "--x0", "4", "--n", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out, read_golden("cesaro_x_x0_4_n3.csv"))

    def test_overflow(self):
        """
        @note   the partial series is written, followed by the overflow comment
        """
        code, out, _ = run_cli("orbit", "--symbol", "2*x", "--x0", "1", "--n", "600")
        self.assertEqual(code, 3)
        lines = out.splitlines()
        self.assertEqual(lines[0], "n,value")
        self.assertEqual(lines[11], "10,1024.0")
        self.assertTrue(lines[-1].startswith("# overflow at n="))
        self.assertNotIn("\r", out)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as folder:
            filename = os.path.join(folder, "orbit.csv")
            code, out, _ = run_cli("orbit", "--symbol", "x^2+1", "--x0", "0", "--n", "5", "--out", filename)
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(filename, "r", encoding="utf-8", newline="") as fin:
                self.assertEqual(fin.read(), read_golden("orbit_x2p1_x0_0_n5.csv"))
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_cli_errors(unittest.TestCase):

    def test_syntax_error(self):
        """
        @note   exit 2 with the 1-based offset
        """
        code, out, err = run_cli("classify", "--symbol", "x^^2")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("copdyn: syntax error at offset 3:"))
        self.assertIn("x^^2", err)

    def test_unknown_identifier(self):
        code, _, err = run_cli("orbit", "--symbol", "x+y", "--x0", "0", "--n", "2")
        self.assertEqual(code, 2)
        self.assertIn("offset 3", err)

    def test_domain_error(self):
        code, _, err = run_cli("orbit", "--symbol", "log(x)", "--x0", "0.5", "--n", "5")
        self.assertEqual(code, 1)
        self.assertTrue(err.startswith("copdyn: "))

    def test_bad_arguments(self):
        """
        @note   argparse exits with 2 on a missing flag
        """
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                main(["orbit", "--symbol", "x"])
        self.assertEqual(cm.exception.code, 2)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_cli_json(unittest.TestCase):

    def test_seminorm(self):
        code, out, _ = run_cli("seminorm", "--function", "1", "--order", "0", "--weight", "1")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["value"], 1.0)
        payload = json.loads(run_cli("seminorm", "--function", "x", "--order", "0", "--weight", "1")[1])
        self.assertAlmostEqual(payload["value"], 0.5, places=9)
        self.assertAlmostEqual(abs(payload["witness_x"]), 1.0, places=6)
        payload = json.loads(run_cli("seminorm", "--function", "exp(x)", "--order", "0", "--weight", "1")[1])
        self.assertEqual(payload["tail"], "non-decaying")

    def test_seminorm_weight_fn(self):
        code, out, _ = run_cli("seminorm", "--function", "x", "--order", "0", "--weight-fn", "exp(-x^2)",
                               "--xmax", "10")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["weight"], "|exp(-x^2)|")

    def test_counterexamples(self):
        code, out, _ = run_cli("counterexamples", "--which", "bump", "--p", "1", "--n", "1..8")
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload["summary"], "pass")
        self.assertListEqual(payload["n"], list(range(1, 9)))
        payload = json.loads(run_cli("counterexamples", "--which", "bump", "--p", "9", "--n", "1..3")[1])
        self.assertEqual(payload["summary"], "no claim in range")
        payload = json.loads(run_cli("counterexamples", "--which", "sinsq", "--n0", "1", "--k", "1..6")[1])
        self.assertEqual(payload["summary"], "pass")
        self.assertEqual(payload["order"], 4)

    def test_classify(self):
        """
        @note   the contraction 0.5x+1 on O_M
        """
        code, out, _ = run_cli("classify", "--symbol", "0.5*x+1", "--space", "oM")
        self.assertIn(code, (0, 4))
        report = json.loads(out)
        self.assertEqual(report["schema_version"], "1.0")
        self.assertEqual(report["space"], "oM")
        status = {v["property"]: v["status"] for v in report["verdicts"]}
        self.assertEqual(status["PowerBounded"], "ProvenTrue")
        self.assertEqual(status["MeanErgodic"], "ProvenTrue")
        self.assertEqual(status["Mixing"], "ProvenFalse")

    def test_classify_translation(self):
        code, out, _ = run_cli("classify", "--symbol", "x+1", "--space", "om:2")
        status = {v["property"]: v["status"] for v in json.loads(out)["verdicts"]}
        self.assertEqual(status["Mixing"], "ProvenTrue")
        self.assertEqual(status["PowerBounded"], "ProvenFalse")

    def test_strict(self):
        """
        @note   --strict turns an Inconclusive verdict into exit 4
        """
        code, out, _ = run_cli("classify", "--symbol", "x+1+0.5*sin(x)", "--space", "c1", "--iterations", "32",
                               "--strict")
        inconclusive = any(v["status"] == "Inconclusive" for v in json.loads(out)["verdicts"])
        self.assertEqual(code, 4 if inconclusive else 0)
        self.assertTrue(inconclusive)

    def test_csv_dir(self):
        with tempfile.TemporaryDirectory() as folder:
            code, out, _ = run_cli("classify", "--symbol", "0.5*x+1", "--space", "om:1", "--iterations", "16",
                                   "--csv-dir", folder)
            refs = json.loads(out)["series_refs"]
            self.assertListEqual([os.path.basename(r) for r in refs], ["orbit.csv", "cesaro.csv", "growth.csv"])
            for ref in refs:
                self.assertTrue(os.path.isfile(ref))
            with open(refs[2], "r", encoding="utf-8") as fin:
                self.assertEqual(fin.readline().strip(), "x,i,magnitude,weighted_magnitude")

    def test_xmax_environment(self):
        os.environ["COPDYN_XMAX"] = "30"
        try:
            _, out, _ = run_cli("classify", "--symbol", "0.5*x+1", "--iterations", "16")
        finally:
            del os.environ["COPDYN_XMAX"]
        self.assertEqual(json.loads(out)["parameters"]["x_max"], 30.0)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_cli_golden(unittest.TestCase):

    def test_determinism(self):
        """
        @note   two consecutive runs of every documented example are byte identical
        """
        for argv in examples:
            first = run_cli(*argv)
            second = run_cli(*argv)
            self.assertEqual(first[0], second[0], " ".join(argv))
            self.assertEqual(first[1], second[1], " ".join(argv))
            self.assertTrue(first[1], " ".join(argv))

    def test_exit_codes(self):
        codes = [run_cli(*argv)[0] for argv in examples[2:]]
        self.assertListEqual(codes, [0, 0, 3, 0, 0, 0])
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_loggers(unittest.TestCase):

    def test_every_logger_is_listed(self):
        """
        @note   set_log_level, add_log_handler and -v reach every module logger
        """
        for module in pkgutil.walk_packages(PyCopDyn.__path__, "PyCopDyn."):
            if not module.name.endswith("__main__"):
                importlib.import_module(module.name)
        used = {name for name in logging.Logger.manager.loggerDict if name.startswith("PyCopDyn.")}
        self.assertTrue(used)
        self.assertSetEqual(used - set(PyCopDyn.all_loggers()), set())
        self.assertEqual(len(PyCopDyn.all_loggers()), len(set(PyCopDyn.all_loggers())))
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
#------------------------------------------------------------------------------
