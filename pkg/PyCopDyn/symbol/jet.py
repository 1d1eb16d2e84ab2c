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
# Name:        jet.py
# Purpose:     Truncated derivative vectors and the higher order chain rule
#
# Author:      PyCopDyn developers
#
# Created:     02-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
A *jet* of order m of a function f at a point x is the vector (f(x), f'(x), ..., f^(m)(x)). Jets store the raw
derivative values, the division by factorials needed by the chain rule happens only inside :func:`faa_di_bruno`.

Two representations are used:

* :class:`Jet` is an immutable single-point jet, used at the public API boundary.
* plain numpy arrays of shape (m+1, N) hold the jets of N points at once. All the arithmetic functions of this module
  (:func:`leibniz`, :func:`quotient`, :func:`faa_di_bruno`, ...) work on this array form, which is what grid scans and
  orbit jet chaining use.

Example::

    outer = Jet(0.0, 2, (1.0, 1.0, 1.0))     # exp at 0
    inner = Jet(0.0, 2, (0.0, 2.0, 0.0))     # 2x at 0
    compose_jets(outer, inner).coeffs         # (1.0, 2.0, 4.0), the jet of exp(2x)

The Faà di Bruno partition tables are built once at import time up to :data:`MAX_ORDER`.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from .expr_errors import (MAX_ORDER, OVERFLOW_GUARD, DomainError, NumericOverflow, OrderMismatch,
                          PreconditionViolated, UnsupportedOrder)

_logger = logging.getLogger("PyCopDyn.Jet")

__all__ = ['Jet', 'JetArray', 'JetContext', 'compose_jets', 'faa_di_bruno', 'leibniz', 'quotient', 'constant_jet',
           'identity_jet', 'check_order', 'outer_derivatives', 'power_derivatives', 'overflow_mask',
           'FAA_DI_BRUNO_TABLE']


def _multiplicities(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Yields the partitions of n with parts <= largest, as multiplicity tuples (k_1, ..., k_largest)."""
    if n == 0:
        yield (0,) * largest
        return
    if largest == 0:
        return
    for count in range(n // largest, -1, -1):
        for rest in _multiplicities(n - count * largest, largest - 1):
            yield rest + (count,)


def _build_faa_di_bruno_table(max_order: int) -> List[List[Tuple[int, float, Tuple[Tuple[int, int], ...]]]]:
    table = [[]]
    for n in range(1, max_order + 1):
        entries = []
        for ks in _multiplicities(n, n):
            coef = math.factorial(n)
            for j, kj in enumerate(ks, start=1):
                coef //= math.factorial(kj) * math.factorial(j) ** kj
            powers = tuple((j, kj) for j, kj in enumerate(ks, start=1) if kj)
            entries.append((sum(ks), float(coef), powers))
        table.append(entries)
    return table


#: For each order n, the list of (k, n!/(prod k_j! (j!)^k_j), ((j, k_j), ...)) over the partitions of n.
FAA_DI_BRUNO_TABLE = _build_faa_di_bruno_table(MAX_ORDER)

_BINOMIALS = [[float(math.comb(n, k)) for k in range(n + 1)] for n in range(MAX_ORDER + 1)]


def _build_tanh_polynomials(max_order: int) -> List[Polynomial]:
    # d/dx P(tanh x) = P'(t) (1 - t^2)
    polys = [Polynomial([0.0, 1.0])]
    sech2 = Polynomial([1.0, 0.0, -1.0])
    for _ in range(max_order):
        polys.append(polys[-1].deriv() * sech2)
    return polys


_TANH_POLYNOMIALS = _build_tanh_polynomials(MAX_ORDER)


def check_order(m: int) -> None:
    """Raises :class:`UnsupportedOrder` when the order m cannot be handled by the engine."""
    if not isinstance(m, (int, np.integer)) or m < 0 or m > MAX_ORDER:
        raise UnsupportedOrder(m)


def overflow_mask(coeffs: np.ndarray) -> np.ndarray:
    """Per point mask of jets containing a non-finite entry or an entry above the overflow guard."""
    with np.errstate(invalid='ignore'):
        bad = ~np.isfinite(coeffs) | (np.abs(coeffs) > OVERFLOW_GUARD)
    return bad.any(axis=0)


def constant_jet(value, m: int, shape) -> np.ndarray:
    coeffs = np.zeros((m + 1,) + tuple(shape))
    coeffs[0] = value
    return coeffs


def identity_jet(xs: np.ndarray, m: int) -> np.ndarray:
    """Jet of the variable x itself: (x, 1, 0, ..., 0)."""
    coeffs = np.zeros((m + 1,) + xs.shape)
    coeffs[0] = xs
    if m >= 1:
        coeffs[1] = 1.0
    return coeffs


def leibniz(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Jet of a product by the general Leibniz rule."""
    m = a.shape[0] - 1
    out = np.zeros(np.broadcast(a, b).shape)
    with np.errstate(all='ignore'):
        for n in range(m + 1):
            row = _BINOMIALS[n]
            for k in range(n + 1):
                out[n] += row[k] * a[n - k] * b[k]
    return out


def quotient(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Jet of a/b. Uses a = q*b, so that q^(n) = (a^(n) - sum_{j<n} C(n,j) q^(j) b^(n-j)) / b.
    The caller is responsible for masking the points where b vanishes.
    """
    m = a.shape[0] - 1
    out = np.zeros(np.broadcast(a, b).shape)
    with np.errstate(all='ignore'):
        for n in range(m + 1):
            acc = a[n].copy() if np.ndim(a[n]) else a[n]
            row = _BINOMIALS[n]
            for j in range(n):
                acc = acc - row[j] * out[j] * b[n - j]
            out[n] = acc / b[0]
    return out


def faa_di_bruno(outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """
    Chain rule of any order.

    :param outer: derivatives of the outer function evaluated at inner[0], shape (m+1, ...)
    :param inner: jet of the inner function, shape (m+1, ...)
    :return: jet of outer o inner
    """
    m = outer.shape[0] - 1
    if inner.shape[0] - 1 != m:
        raise OrderMismatch(m, inner.shape[0] - 1)
    check_order(m)
    out = np.zeros(np.broadcast(outer, inner).shape)
    with np.errstate(all='ignore'):
        out[0] = outer[0]
        for n in range(1, m + 1):
            for k, coef, powers in FAA_DI_BRUNO_TABLE[n]:
                term = coef * outer[k]
                for j, kj in powers:
                    term = term * inner[j] ** kj
                out[n] += term
    return out


def outer_derivatives(name: str, u: np.ndarray, m: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Derivatives 0..m of an elementary function evaluated at the values u.

    :param name: one of 'exp', 'log', 'sin', 'cos', 'tanh'
    :return: a tuple (derivatives of shape (m+1,) + u.shape, mask of points outside the domain)
    """
    out = np.zeros((m + 1,) + u.shape)
    bad = np.zeros(u.shape, dtype=bool)
    with np.errstate(all='ignore'):
        if name == 'exp':
            out[:] = np.exp(u)
        elif name == 'sin' or name == 'cos':
            s, c = np.sin(u), np.cos(u)
            cycle = (s, c, -s, -c) if name == 'sin' else (c, -s, -c, s)
            for k in range(m + 1):
                out[k] = cycle[k % 4]
        elif name == 'log':
            bad = ~(u > 0)
            safe = np.where(bad, 1.0, u)
            out[0] = np.log(safe)
            for k in range(1, m + 1):
                out[k] = (-1) ** (k - 1) * math.factorial(k - 1) / safe ** k
        elif name == 'tanh':
            t = np.tanh(u)
            for k in range(m + 1):
                out[k] = _TANH_POLYNOMIALS[k](t)
        else:
            raise ValueError("Unknown function '%s'" % name)
    return out, bad


def power_derivatives(u: np.ndarray, exponent: int, m: int) -> Tuple[np.ndarray, np.ndarray]:
    """Derivatives 0..m of u**exponent for an integer exponent. Negative exponents are undefined at u=0."""
    out = np.zeros((m + 1,) + u.shape)
    bad = (u == 0) if exponent < 0 else np.zeros(u.shape, dtype=bool)
    safe = np.where(bad, 1.0, u)
    falling = 1.0
    with np.errstate(all='ignore'):
        for k in range(m + 1):
            if exponent >= 0 and k > exponent:
                break  # remaining derivatives are exactly zero
            out[k] = falling * np.power(safe, float(exponent - k))
            falling *= exponent - k
    return out, bad


class JetContext:
    """
    Book-keeping of a vectorized jet evaluation. Points that fall outside the domain of a node, or whose intermediate
    values exceed the overflow guard, are masked out rather than raising, so that a grid scan can report them.
    """

    def __init__(self, xs: np.ndarray, m: int):
        check_order(m)
        self.xs = xs
        self.order = m
        self.domain_ok = np.ones(xs.shape, dtype=bool)
        self.overflow = np.zeros(xs.shape, dtype=bool)
        self.domain_node: Optional[str] = None
        self.overflow_node: Optional[str] = None

    def flag_domain(self, bad: np.ndarray, node) -> None:
        newly = bad & self.domain_ok
        if newly.any():
            if self.domain_node is None:
                self.domain_node = str(node)
            self.domain_ok &= ~bad

    def check(self, coeffs: np.ndarray, node) -> np.ndarray:
        """Records the overflowing points of an intermediate result and returns it unchanged."""
        newly = overflow_mask(coeffs) & self.domain_ok & ~self.overflow
        if newly.any():
            if self.overflow_node is None:
                self.overflow_node = str(node)
            self.overflow |= newly
        return coeffs


@dataclass(frozen=True)
class Jet:
    """
    Truncated derivative vector of a function at ``base_point``.

    :param base_point: the abscissa
    :param order: the highest derivative order m
    :param coeffs: m+1 raw derivative values, coeffs[i] = f^(i)(base_point)
    """
    base_point: float
    order: int
    coeffs: Tuple[float, ...]

    def __post_init__(self):
        check_order(self.order)
        if len(self.coeffs) != self.order + 1:
            raise ValueError("A jet of order %d needs %d coefficients, got %d"
                             % (self.order, self.order + 1, len(self.coeffs)))
        if any(not math.isfinite(c) or abs(c) > OVERFLOW_GUARD for c in self.coeffs):
            raise NumericOverflow("jet at x=%r" % self.base_point)

    @classmethod
    def from_array(cls, base_point: float, coeffs) -> "Jet":
        coeffs = tuple(float(c) for c in coeffs)
        return cls(float(base_point), len(coeffs) - 1, coeffs)

    @property
    def value(self) -> float:
        return self.coeffs[0]

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise OrderMismatch(self.order, order)
        return Jet(self.base_point, order, self.coeffs[:order + 1])

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=float)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)


def compose_jets(outer: Jet, inner: Jet) -> Jet:
    """
    Jet of (f o g) at inner.base_point, from the jet of f at g(x) and the jet of g at x.

    :raises OrderMismatch: when the jets are not of the same order
    :raises PreconditionViolated: when outer is not taken at the value of inner
    :raises NumericOverflow: when a coefficient exceeds the overflow guard
    """
    if outer.order != inner.order:
        raise OrderMismatch(outer.order, inner.order)
    if not math.isclose(outer.base_point, inner.coeffs[0], rel_tol=1e-12, abs_tol=1e-300):
        raise PreconditionViolated("outer jet taken at %r but inner value is %r"
                                   % (outer.base_point, inner.coeffs[0]))
    coeffs = faa_di_bruno(outer.as_array(), inner.as_array())
    if overflow_mask(coeffs[:, None])[0]:
        raise NumericOverflow("compose_jets")
    return Jet.from_array(inner.base_point, coeffs)


class JetArray:
    """
    Jets of a function over an array of points, as returned by the vectorized evaluation.

    :ivar xs: the points
    :ivar coeffs: array of shape (m+1, N), entry [i, k] is the i-th derivative at xs[k]
    :ivar domain_ok: False where the function is undefined
    :ivar overflow: True where the overflow guard was exceeded
    """

    def __init__(self, xs: np.ndarray, coeffs: np.ndarray, domain_ok: np.ndarray, overflow: np.ndarray,
                 domain_node: str = None, overflow_node: str = None):
        self.xs = xs
        self.coeffs = coeffs
        self.domain_ok = domain_ok
        self.overflow = overflow & domain_ok
        self.domain_node = domain_node
        self.overflow_node = overflow_node

    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def valid(self) -> np.ndarray:
        return self.domain_ok & ~self.overflow

    def raise_on_failure(self) -> "JetArray":
        """Raises DomainError or NumericOverflow for the first failing point, returns self otherwise."""
        if not self.domain_ok.all():
            x = self.xs[np.argmin(self.domain_ok)]
            raise DomainError(self.domain_node or "expression", float(x))
        if self.overflow.any():
            x = self.xs[np.argmax(self.overflow)]
            raise NumericOverflow("%s at x=%r" % (self.overflow_node or "expression", float(x)))
        return self

    def jet_at(self, k: int) -> Jet:
        return Jet.from_array(self.xs[k], self.coeffs[:, k])
