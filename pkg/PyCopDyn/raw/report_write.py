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
# Name:        report_write.py
# Purpose:     Write and read the JSON analysis reports
#
# Author:      PyCopDyn developers
#
# Created:     17-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
This module writes the outcome of a classification run as a JSON document, and reads it back.

The output is deterministic: keys keep a fixed order, floats are written in their shortest round trip form and the
non finite ones as the strings ``"inf"``, ``"-inf"`` and ``"nan"``, so that the document stays valid JSON. Reading a
report and writing it again gives the same bytes. ::

    report = classify_symbol(parse("0.5*x+1"))
    report.save("report.json")
    assert AnalysisReport.load("report.json").to_json() == report.to_json()

The layout is described by ``doc/report.schema.json``.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Union

import numpy as np

from ..classifier.verdict import Verdict

_logger = logging.getLogger("PyCopDyn.ReportWrite")

__all__ = ['AnalysisReport', 'to_jsonable', 'SCHEMA_VERSION']

SCHEMA_VERSION = "1.0"


def to_jsonable(value):
    """Plain JSON types out of numpy scalars, tuples and non finite floats."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if value is None or isinstance(value, str):
        return value
    return str(value)


@dataclass
class AnalysisReport:
    """
    :ivar symbol_text: the symbol as given
    :ivar family: summary of the recognized family
    :ivar space: the function space tag
    :ivar verdicts: ordered verdicts
    :ivar series_refs: paths of the CSV series written next to the report
    :ivar parameters: echo of the run settings
    :ivar tool_version: version of the package that wrote the report
    """
    symbol_text: str
    family: dict
    space: str
    verdicts: List[Verdict] = field(default_factory=list)
    series_refs: List[str] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)
    tool_version: str = ""

    def verdict(self, prop: str, default=None):
        """First verdict for a property, given by its tag such as ``"PowerBounded"``."""
        for v in self.verdicts:
            if v.property.value == prop:
                return v
        return default

    def to_dict(self) -> dict:
        return to_jsonable({
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "symbol_text": self.symbol_text,
            "family": self.family,
            "space": self.space,
            "parameters": self.parameters,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "series_refs": list(self.series_refs),
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, allow_nan=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        return cls(symbol_text=data["symbol_text"], family=data["family"], space=data["space"],
                   verdicts=[Verdict.from_dict(v) for v in data["verdicts"]],
                   series_refs=list(data.get("series_refs", [])), parameters=data.get("parameters", {}),
                   tool_version=data.get("tool_version", ""))

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def save(self, filename: Union[str, Path]) -> None:
        """Writes the report, UTF-8 with LF line endings."""
        with open(filename, "w", encoding="utf-8", newline="\n") as fout:
            fout.write(self.to_json())
        _logger.info("Report of %s written to %s", self.symbol_text, filename)

    @classmethod
    def load(cls, filename: Union[str, Path]) -> "AnalysisReport":
        with open(filename, "r", encoding="utf-8") as fin:
            return cls.from_json(fin.read())
