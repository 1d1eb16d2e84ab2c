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
# Name:        batch.py
# Purpose:     Classify many symbols in parallel
#
# Author:      PyCopDyn developers
#
# Created:     18-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Classifies a batch of symbols on a worker pool. ::

    runner = BatchClassifier(settings=AnalysisSettings(space=SpaceTag.parse("om:1")), parallel_sims=8)
    results = runner.classify(["0.5*x+1", "x+1", "x+1+0.1*tanh(x)"])
    for result in results:
        print(result.symbol_text, result.report.verdict("PowerBounded").status.value)

    print("Total: {}".format(runner.run_count))
    print("Successful: {}".format(runner.ok_count))
    print("Failed: {}".format(runner.fail_count))

The results come back in the order of the input, whatever the order of completion.

---------------
Multiprocessing
---------------

By default 4 classifications run at the same time, on threads. The analyses are mostly numpy work and release the
GIL only in part, so for large batches processes may be faster. ::

    runner = BatchClassifier(parallel_sims=8, use_processes=True)

With processes the symbols are sent as text and parsed in the worker.

---------
Callbacks
---------

A callback receives each :class:`BatchResult` as soon as it is ready, in the order of completion. It runs on the
calling thread, so it may write files or update shared state freely. ::

    def store(result):
        if result.ok:
            result.report.save("report_%03d.json" % result.index)

    BatchClassifier(callback=store).classify(symbols)

Errors of a classification (syntax errors and unexpected exceptions included) are caught and stored in the result,
they do not stop the batch. Exceptions raised by the callback are logged and ignored.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Union

from ..raw.report_write import AnalysisReport
from ..symbol.expr_errors import CopDynError
from ..symbol.expr_parser import SymbolExpr, parse
from .analysis import classify_symbol
from .settings import AnalysisSettings

_logger = logging.getLogger("PyCopDyn.BatchClassifier")

__all__ = ['BatchClassifier', 'BatchResult']


@dataclass
class BatchResult:
    """
    :ivar index: position of the symbol in the input
    :ivar symbol_text: the symbol
    :ivar report: the report, None on failure
    :ivar error: the error message, None on success
    """
    index: int
    symbol_text: str
    report: Optional[AnalysisReport] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.report is not None


def _classify_one(index: int, symbol: Union[str, SymbolExpr], settings: AnalysisSettings) -> BatchResult:
    text = str(symbol)
    try:
        phi = parse(symbol) if isinstance(symbol, str) else symbol
        return BatchResult(index, text, report=classify_symbol(phi, settings))
    except CopDynError as err:
        return BatchResult(index, text, error="%s: %s" % (type(err).__name__, err))
    except Exception as err:
        _logger.exception("Unexpected failure on '%s'", text)
        return BatchResult(index, text, error="%s: %s" % (type(err).__name__, err))


class BatchClassifier:
    """
    Runs :func:`~PyCopDyn.classifier.analysis.classify_symbol` over many symbols.

    :param settings: settings shared by every classification
    :param parallel_sims: number of classifications running at the same time
    :param callback: called with each :class:`BatchResult` on completion
    :param use_processes: use a process pool instead of a thread pool
    """

    def __init__(self, *, settings: AnalysisSettings = None, parallel_sims: int = 4,
                 callback: Callable[[BatchResult], None] = None, use_processes: bool = False):
        if parallel_sims < 1:
            raise ValueError("parallel_sims must be at least 1")
        self.settings = settings or AnalysisSettings()
        self.parallel_sims = parallel_sims
        self.callback = callback
        self.use_processes = use_processes
        self.run_count = 0
        self.ok_count = 0
        self.fail_count = 0

    def _executor(self) -> Executor:
        if self.use_processes:
            return ProcessPoolExecutor(max_workers=self.parallel_sims)
        return ThreadPoolExecutor(max_workers=self.parallel_sims, thread_name_prefix="copdyn")

    def _notify(self, result: BatchResult) -> None:
        if self.callback is None:
            return
        try:
            self.callback(result)
        except Exception as err:
            _logger.error("Callback failed on '%s': %s", result.symbol_text, err)

    def classify(self, symbols: Iterable[Union[str, SymbolExpr]]) -> List[BatchResult]:
        """
        Classifies every symbol and waits for completion.

        :return: one result per symbol, in input order
        """
        items = list(symbols)
        if self.use_processes:
            items = [str(s) if isinstance(s, SymbolExpr) and s.text is not None else s for s in items]
        results: List[Optional[BatchResult]] = [None] * len(items)
        _logger.info("Classifying %d symbols with %d workers", len(items), self.parallel_sims)
        with self._executor() as pool:
            futures = {pool.submit(_classify_one, k, s, self.settings): k for k, s in enumerate(items)}
            for future in as_completed(futures):
                k = futures[future]
                try:
                    result = future.result()
                except Exception as err:
                    # the worker itself failed, e.g. a broken process pool
                    result = BatchResult(k, str(items[k]), error="%s: %s" % (type(err).__name__, err))
                results[k] = result
                self.run_count += 1
                if result.ok:
                    self.ok_count += 1
                else:
                    self.fail_count += 1
                    _logger.warning("Classification of '%s' failed: %s", result.symbol_text, result.error)
                self._notify(result)
        return results
