# -*- coding: utf-8 -*-
"""
@author:        PyCopDyn developers
@copyright:     Copyright 2026

@license:       GPLv3

@file:          test_writers.py
@date:          2026-03-24

@note           JSON report and CSV series writers
                  run ./unittests/test_writers.py
"""

#------------------------------------------------------------------------------
# Python Libs
import sys        # python path handling
import os         # platform independent paths
import json
import math
import tempfile
import unittest   # performs test

import numpy as np

try:
    import jsonschema
except ImportError:
    jsonschema = None

#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from PyCopDyn.classifier.analysis import classify_symbol
from PyCopDyn.classifier.settings import AnalysisSettings
from PyCopDyn.classifier.verdict import SpaceTag
from PyCopDyn.raw.report_write import AnalysisReport, to_jsonable
from PyCopDyn.raw.series_write import SeriesWrite, Trace, format_number
from PyCopDyn.symbol.expr_parser import parse
#------------------------------------------------------------------------------

schema_file = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "doc", "report.schema.json")


def sample_report(text="0.5*x+1", space="oM"):
    settings = AnalysisSettings(space=SpaceTag.parse(space), iterations=16)
    return classify_symbol(parse(text), settings)


#------------------------------------------------------------------------------
class test_report_write(unittest.TestCase):

    def test_round_trip(self):
        """
        @note   serialize, parse and serialize again gives the same bytes
        """
        report = sample_report()
        text = report.to_json()
        self.assertEqual(AnalysisReport.from_json(text).to_json(), text)
        self.assertTrue(text.endswith("\n"))

    def test_save_and_load(self):
        report = sample_report("x^2+1", "om:2")
        with tempfile.TemporaryDirectory() as folder:
            filename = os.path.join(folder, "report.json")
            report.save(filename)
            with open(filename, "rb") as fin:
                raw = fin.read()
            self.assertNotIn(b"\r\n", raw)
            loaded = AnalysisReport.load(filename)
        self.assertEqual(loaded.to_json(), report.to_json())
        self.assertEqual(loaded.verdict("PowerBounded").status, report.verdict("PowerBounded").status)
        self.assertIsNone(loaded.verdict("NoSuchProperty"))

    def test_jsonable(self):
        """
        @note   non finite floats become strings, numpy scalars plain numbers
        """
        payload = to_jsonable({"a": math.inf, "b": -math.inf, "c": math.nan, "d": np.float64(0.1),
                               "e": (np.int64(3), True), 1: None})
        self.assertDictEqual(payload, {"a": "inf", "b": "-inf", "c": "nan", "d": 0.1, "e": [3, True], "1": None})
        json.dumps(payload, allow_nan=False)

    @unittest.skipIf(jsonschema is None, "jsonschema is not installed")
    def test_schema(self):
        """
        @note   reports of every family validate against the shipped schema
        """
        with open(schema_file, "r", encoding="utf-8") as fin:
            schema = json.load(fin)
        for text, space in (("0.5*x+1", "oM"), ("x^3", "cinf"), ("0.5*x+0.1*sin(x)", "om:1"), ("x+1", "c0"),
                            ("2*x", "schwartz")):
            jsonschema.validate(json.loads(sample_report(text, space).to_json()), schema)
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
class test_series_write(unittest.TestCase):

    def test_format(self):
        self.assertEqual(format_number(0.1), "0.1")
        self.assertEqual(format_number(1.0 / 3.0), "0.3333333333333333")
        self.assertEqual(format_number(3), "3")
        self.assertEqual(format_number(np.int32(7)), "7")
        self.assertEqual(format_number(True), "1")
        self.assertEqual(format_number(-math.inf), "-inf")
        self.assertEqual(format_number(math.nan), "nan")

    def test_table(self):
        """
        @note   header row, comma separated rows, trailing comments, LF endings
        """
        series = SeriesWrite()
        series.add_trace(Trace("n", range(3)))
        series.add_trace(Trace("value", [0.5, 1.0, math.inf]))
        series.add_comment("overflow at n=3")
        self.assertListEqual(series.trace_names, ["n", "value"])
        self.assertEqual(series.to_text(), "n,value\n0,0.5\n1,1.0\n2,inf\n# overflow at n=3\n")
        self.assertRaises(IndexError, series.add_trace, Trace("short", [1.0]))

    def test_save(self):
        series = SeriesWrite()
        series.add_trace(Trace("x", [1.0, 2.0]))
        with tempfile.TemporaryDirectory() as folder:
            filename = os.path.join(folder, "x.csv")
            series.save(filename)
            with open(filename, "rb") as fin:
                self.assertEqual(fin.read(), b"x\n1.0\n2.0\n")
#------------------------------------------------------------------------------


#------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
#------------------------------------------------------------------------------
