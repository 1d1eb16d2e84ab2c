# -*- coding: utf-8 -*-
# -------------------------------------------------------------------------------
#    ____        ____            ____
#   |  _ \ _   _/ ___|___  _ __ |  _ \ _   _ _ __
#   | |_) | | | | |   / _ \| '_ \| | | | | | | '_ \
#   |  __/| |_| | |__| (_) | |_) | |_| | |_| | | | |
#   |_|    \__, |\____\___/| .__/|____/ \__, |_| |_|
#          |___/           |_|          |___/
#
# Name:        sweep_iterators.py
# Purpose:     Iterators and grids used for sweeping iteration counts and sample points
#
# Author:      PyCopDyn developers
#
# Created:     06-03-2026
# Licence:     refer to the LICENSE file
#
# -------------------------------------------------------------------------------
"""
Linear and logarithmic sweeps. The linear sweeps accept the start and stop in either order, the direction being given
by the sign of the step (or by the order of start and stop when the step is positive)::

    list(sweep(10))           # [0, 1, ..., 10]
    list(sweep(2, 8, -2))     # [8, 6, 4, 2]
    list(sweep_log(1, 1e3, 10))  # [1, 10.0, 100.0, 1000.0]

The command line tool reads iteration ranges as ``"lo..hi"`` or ``"lo..hi:step"``, see :func:`parse_range`.
"""
import math
import re
from typing import Iterator, List, Union

import numpy as np

__all__ = ['sweep', 'sweep_n', 'sweep_log', 'sweep_log_n', 'parse_range', 'symmetric_log_grid']

Number = Union[int, float]

_RANGE = re.compile(r'^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*(?::\s*(\d+)\s*)?$')


def sweep(start: Number, stop: Number = None, step: Number = 1) -> Iterator[Number]:
    """
    Linear sweep including both ends. With a single argument the sweep goes from 0 to that value.

    :param start: first value
    :param stop: last value
    :param step: increment. A negative step on an increasing pair reverses the sweep.
    :raises ValueError: on a null step
    """
    if stop is None:
        start, stop = 0, start
    if step == 0:
        raise ValueError("the sweep step cannot be zero")
    if step < 0 and start < stop:
        start, stop = stop, start
    step = abs(step)
    if start > stop:
        step = -step
    tolerance = abs(step) * 1e-9
    i = 0
    while True:
        value = start + i * step
        if (step > 0 and value > stop + tolerance) or (step < 0 and value < stop - tolerance):
            return
        yield value
        i += 1


def sweep_n(start: Number, stop: Number, n: int) -> Iterator[float]:
    """n equally spaced values from start to stop, both included."""
    if n < 2:
        yield start
        return
    step = (stop - start) / (n - 1)
    for i in range(n):
        yield start + i * step


def sweep_log(start: Number, stop: Number, step: Number = 10) -> Iterator[float]:
    """
    Geometric sweep. The multiplicative step is inverted when it would move away from stop.

    :raises ValueError: when start and stop do not have the same sign, or when the step is 1 or not positive
    """
    if start * stop <= 0:
        raise ValueError("a logarithmic sweep needs start and stop of the same sign")
    if step <= 0 or step == 1:
        raise ValueError("the logarithmic step must be positive and different from 1")
    if (abs(stop) > abs(start)) != (step > 1):
        step = 1 / step
    value = start
    tolerance = 1e-9
    while (step > 1 and abs(value) <= abs(stop) * (1 + tolerance)) or \
            (step < 1 and abs(value) >= abs(stop) * (1 - tolerance)):
        yield value
        value = value * step


def sweep_log_n(start: Number, stop: Number, n: int) -> Iterator[float]:
    """n geometrically spaced values from start to stop, both included."""
    if start * stop <= 0:
        raise ValueError("a logarithmic sweep needs start and stop of the same sign")
    if n < 2:
        yield start
        return
    ratio = math.log(stop / start) / (n - 1)
    for i in range(n - 1):
        yield start * math.exp(i * ratio)
    yield stop


def parse_range(text: str) -> List[int]:
    """
    Reads an integer range written ``"lo..hi"`` or ``"lo..hi:step"``, both ends included.

    :raises ValueError: when the text does not follow that format
    """
    match = _RANGE.match(text)
    if match is None:
        raise ValueError("'%s' is not a range of the form lo..hi or lo..hi:step" % text)
    lo, hi = int(match.group(1)), int(match.group(2))
    step = int(match.group(3)) if match.group(3) else 1
    if step == 0:
        raise ValueError("the range step cannot be zero")
    return list(sweep(lo, hi, step))


def symmetric_log_grid(x_min: float, x_max: float, n: int) -> np.ndarray:
    """
    Sorted grid symmetric around 0, made of n geometrically spaced magnitudes between x_min and x_max on each side.
    The points 0, -1 and 1 are always included.
    """
    if not 0 < x_min < x_max:
        raise ValueError("the grid needs 0 < x_min < x_max")
    magnitudes = [v for v in sweep_log_n(x_min, x_max, n) if abs(v - 1.0) > 1e-9]
    if x_min <= 1.0 <= x_max:
        magnitudes.append(1.0)
    magnitudes = np.unique(np.array(magnitudes, dtype=float))
    grid = np.concatenate((-magnitudes[::-1], [0.0], magnitudes))
    return grid
