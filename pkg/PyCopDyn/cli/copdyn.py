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
# Name:        copdyn.py
# Purpose:     Command line front end
#
# Author:      PyCopDyn developers
#
# Created:     19-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
The ``copdyn`` command. ::

    copdyn classify --symbol "0.5*x+1" --space oM
    copdyn orbit --symbol "x^2+1" --x0 0 --n 5
    copdyn cesaro --symbol "x" --x0 4 --n 3
    copdyn seminorm --function "x" --order 0 --weight 1
    copdyn counterexamples --which bump --p 1 --n 1..8

JSON reports and CSV series go to stdout unless ``--out`` names a file, log messages go to stderr.

Exit codes:

* 0: success
* 1: any other error of the package
* 2: the expression could not be parsed, the message gives the byte offset
* 3: numeric overflow in a required computation (orbit and Cesàro series are still written up to the overflow)
* 4: ``--strict`` was given and a verdict is Inconclusive

The environment variable COPDYN_XMAX overrides the default window half width of ``classify``.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import argparse
import json
import logging
import math
import os
import sys
from pathlib import Path
from typing import List, Optional, TextIO, Tuple

from .. import add_log_handler, set_log_level
from ..classifier.analysis import classify_symbol
from ..classifier.settings import AnalysisSettings
from ..classifier.verdict import SpaceTag, Status
from ..dynamics.orbits import OrbitTermination, iterate_point
from ..lab.counterexamples import counterexample_bump_sequence, counterexample_sin_x_squared
from ..raw.report_write import AnalysisReport, to_jsonable
from ..raw.series_write import SeriesWrite, Trace
from ..seminorms.seminorm import DEFAULT_X_MAX, seminorm_Omn, seminorm_weighted
from ..symbol.expr_errors import CopDynError, ExpressionSyntaxError, NumericOverflow
from ..symbol.expr_parser import SymbolExpr, parse
from ..utils.sweep_iterators import parse_range
from ..version import __version__

_logger = logging.getLogger("PyCopDyn.CLI")

__all__ = ['main', 'build_parser']

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SYNTAX = 2
EXIT_OVERFLOW = 3
EXIT_INCONCLUSIVE = 4

SPACE_CHOICES = "c0, c1, c<m>, cinf, om:<m>, oM, schwartz, analytic"


def _write_text(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fout:
            fout.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(to_jsonable(payload), indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _orbit_series(phi: SymbolExpr, x0: float, n: int, cesaro: bool) -> Tuple[SeriesWrite, Optional[int]]:
    """``n,value`` rows of the orbit or of its Cesàro means, up to the first overflow."""
    orbit = iterate_point(phi, x0, n)
    values = orbit.values
    if cesaro:
        values = [math.fsum(values[1:k + 1]) / k for k in range(1, len(values))]
        index = range(1, len(values) + 1)
    else:
        index = range(len(values))
    series = SeriesWrite()
    series.add_trace(Trace("n", index))
    series.add_trace(Trace("value", values))
    if orbit.terminated_by is OrbitTermination.OVERFLOW:
        series.add_comment("overflow at n=%d" % orbit.overflow_at)
        return series, orbit.overflow_at
    return series, None


def _growth_series(estimate) -> SeriesWrite:
    """``x,i,magnitude,weighted_magnitude`` rows of a seminorm scan."""
    series = SeriesWrite()
    rows = list(estimate.samples.rows())
    for k, name in enumerate(("x", "i", "magnitude", "weighted_magnitude")):
        series.add_trace(Trace(name, [row[k] for row in rows]))
    return series


def _write_classify_series(phi: SymbolExpr, report: AnalysisReport, settings: AnalysisSettings,
                           csv_dir: str) -> List[str]:
    folder = Path(csv_dir)
    folder.mkdir(parents=True, exist_ok=True)
    x0 = 0.5 * (settings.compact[0] + settings.compact[1])
    refs = []
    for name, cesaro in (("orbit", False), ("cesaro", True)):
        series, _ = _orbit_series(phi, x0, settings.iterations, cesaro)
        path = folder / ("%s.csv" % name)
        series.save(path)
        refs.append(path.as_posix())
    symbol_for = report.verdict("SymbolFor")
    p = symbol_for.witness("p") if symbol_for is not None else None
    p = p if isinstance(p, int) else 0
    estimate = seminorm_Omn(phi, settings.growth_order, p, x_max=settings.x_max)
    path = folder / "growth.csv"
    _growth_series(estimate).save(path)
    refs.append(path.as_posix())
    return refs


def _cmd_classify(args) -> int:
    phi = parse(args.symbol)
    extra = {} if args.xmax is None else {"x_max": args.xmax}
    settings = AnalysisSettings.from_environment(os.environ, space=SpaceTag.parse(args.space), order=args.order,
                                                 iterations=args.iterations, **extra)
    report = classify_symbol(phi, settings)
    if args.csv_dir:
        report.series_refs = _write_classify_series(phi, report, settings, args.csv_dir)
    _write_text(report.to_json(), args.out)
    if args.strict and any(v.status is Status.INCONCLUSIVE for v in report.verdicts):
        _logger.warning("Inconclusive verdicts with --strict")
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_series(args, cesaro: bool) -> int:
    phi = parse(args.symbol)
    series, overflow_at = _orbit_series(phi, args.x0, args.n, cesaro)
    _write_text(series.to_text(), args.out)
    return EXIT_OVERFLOW if overflow_at is not None else EXIT_OK


def _cmd_orbit(args) -> int:
    return _cmd_series(args, cesaro=False)


def _cmd_cesaro(args) -> int:
    return _cmd_series(args, cesaro=True)


def _cmd_seminorm(args) -> int:
    f = parse(args.function)
    if args.weight_fn is not None:
        estimate = seminorm_weighted(f, args.order, parse(args.weight_fn), x_max=args.xmax)
    else:
        estimate = seminorm_Omn(f, args.order, args.weight, x_max=args.xmax)
    if args.csv:
        _growth_series(estimate).save(args.csv)
    _write_text(_json_text(estimate.to_dict()), args.out)
    return EXIT_OK


def _cmd_counterexamples(args) -> int:
    if args.which == "bump":
        series = counterexample_bump_sequence(args.p, args.n)
    else:
        series = counterexample_sin_x_squared(args.n0, args.k)
    if args.csv:
        series.to_series().save(args.csv)
    _write_text(_json_text(series.to_dict()), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="copdyn",
                                     description="Dynamics of composition operators C_φ f = f o φ on spaces of "
                                                 "smooth functions of one real variable.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug log messages on stderr")
    parser.add_argument("--version", action="version", version="copdyn %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify C_φ on a function space")
    p.add_argument("--symbol", required=True, help="the symbol φ, e.g. '0.5*x+1'")
    p.add_argument("--space", default="cinf", help="function space: %s (default cinf)" % SPACE_CHOICES)
    p.add_argument("--order", type=int, default=3, help="derivative order of the growth tests (default 3)")
    p.add_argument("--iterations", type=int, default=64, help="number of iterates (default 64)")
    p.add_argument("--xmax", type=float, default=None,
                   help="half width of the sampling window (default COPDYN_XMAX or %g)" % DEFAULT_X_MAX)
    p.add_argument("--out", help="write the JSON report to this file")
    p.add_argument("--csv-dir", help="write orbit, Cesàro and growth series to this folder")
    p.add_argument("--strict", action="store_true", help="exit with 4 when a verdict is Inconclusive")
    p.set_defaults(func=_cmd_classify)

    for name, func, what in (("orbit", _cmd_orbit, "the orbit φ_n(x0)"),
                             ("cesaro", _cmd_cesaro, "the Cesàro means φ_[n](x0)")):
        p = sub.add_parser(name, help="CSV of %s" % what)
        p.add_argument("--symbol", required=True)
        p.add_argument("--x0", type=float, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--out", help="write the CSV to this file")
        p.set_defaults(func=func)

    p = sub.add_parser("seminorm", help="weighted sup seminorm of a function")
    p.add_argument("--function", required=True)
    p.add_argument("--order", type=int, required=True)
    weight = p.add_mutually_exclusive_group(required=True)
    weight.add_argument("--weight", type=int, help="exponent n of the weight (1+x^2)^-n")
    weight.add_argument("--weight-fn", help="expression v of the weight |v(x)|")
    p.add_argument("--xmax", type=float, default=DEFAULT_X_MAX)
    p.add_argument("--out", help="write the JSON estimate to this file")
    p.add_argument("--csv", help="write the x,i,magnitude,weighted_magnitude samples to this file")
    p.set_defaults(func=_cmd_seminorm)

    p = sub.add_parser("counterexamples", help="bump sequence and sin(x^2) series")
    p.add_argument("--which", choices=("bump", "sinsq"), required=True)
    p.add_argument("--p", type=int, default=1, help="weight exponent of the bump sequence")
    p.add_argument("--n", type=parse_range, default="1..8", help="bump indices, e.g. 1..8")
    p.add_argument("--n0", type=int, default=1, help="weight exponent of the sin(x^2) series")
    p.add_argument("--k", type=parse_range, default="1..6", help="indices k of x_k, e.g. 1..6")
    p.add_argument("--out", help="write the JSON summary to this file")
    p.add_argument("--csv", help="write the series to this file")
    p.set_defaults(func=_cmd_counterexamples)
    return parser


def _enable_verbose(stream: TextIO) -> None:
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    set_log_level(logging.DEBUG)
    add_log_handler(handler)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        _enable_verbose(sys.stderr)
    try:
        return int(args.func(args))
    except ExpressionSyntaxError as err:
        sys.stderr.write("copdyn: syntax error at offset %d: %s\n" % (err.offset, err.message))
        if err.text is not None:
            sys.stderr.write(err.caret_line() + "\n")
        return EXIT_SYNTAX
    except NumericOverflow as err:
        sys.stderr.write("copdyn: %s\n" % err)
        return EXIT_OVERFLOW
    except CopDynError as err:
        sys.stderr.write("copdyn: %s\n" % err)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
