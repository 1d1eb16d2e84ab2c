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
# Name:        series_write.py
# Purpose:     Write numeric series as CSV files
#
# Author:      PyCopDyn developers
#
# Created:     17-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
This module writes series (orbits, Cesàro means, seminorm samples, probe deviations) as CSV. A series is a set of
traces of equal length sharing the first one as index. ::

    series = SeriesWrite()
    series.add_trace(Trace("n", range(6)))
    series.add_trace(Trace("value", [0, 1, 2, 5, 26, 677]))
    series.add_comment("overflow at n=6")
    series.save("orbit.csv")

The separator is ``,``, the decimal point ``.`` and lines end with LF. Floats are written in their shortest round
trip form, comments follow the rows as lines starting with ``#``.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import csv
import io
import logging
import math
from pathlib import Path
from typing import Iterable, List, TextIO, Union

import numpy as np

_logger = logging.getLogger("PyCopDyn.SeriesWrite")

__all__ = ['Trace', 'SeriesWrite', 'format_number']


def format_number(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(value)


class Trace:
    """A named column."""

    def __init__(self, name: str, data: Iterable):
        self.name = name
        self.data = list(data)

    def __len__(self):
        return len(self.data)


class SeriesWrite:
    """Collects traces and writes them as one CSV table."""

    def __init__(self):
        self._traces: List[Trace] = []
        self._comments: List[str] = []

    def add_trace(self, trace: Trace) -> None:
        if self._traces and len(trace) != len(self._traces[0]):
            raise IndexError("trace '%s' has %d points, the series has %d" % (trace.name, len(trace),
                                                                              len(self._traces[0])))
        self._traces.append(trace)

    def add_comment(self, text: str) -> None:
        self._comments.append(text)

    @property
    def trace_names(self) -> List[str]:
        return [t.name for t in self._traces]

    def write(self, stream: TextIO) -> None:
        writer = csv.writer(stream, delimiter=",", lineterminator="\n")
        writer.writerow(self.trace_names)
        for row in zip(*(t.data for t in self._traces)):
            writer.writerow([format_number(v) for v in row])
        for comment in self._comments:
            stream.write("# %s\n" % comment)

    def to_text(self) -> str:
        buffer = io.StringIO()
        self.write(buffer)
        return buffer.getvalue()

    def save(self, filename: Union[str, Path]) -> None:
        with open(filename, "w", encoding="utf-8", newline="") as fout:
            self.write(fout)
        _logger.info("Series %s written to %s", ",".join(self.trace_names), filename)
