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
# Name:        verdict.py
# Purpose:     Verdicts, their status and provenance, and the function space tags
#
# Author:      PyCopDyn developers
#
# Created:     10-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
A :class:`Verdict` is the answer of a decision rule about one property of C_φ on one function space. Its status tells
how far it can be trusted:

* ``ProvenTrue`` / ``ProvenFalse``: follows from a cited result applied to a structural certificate (a recognized
  polynomial family, an exactly isolated root, a fixed point bracketed by a sign change);
* ``EmpiricalTrue`` / ``EmpiricalFalse``: grid evidence only;
* ``Inconclusive``: neither.

The provenance field audits the first rule: a Proven status with ``GRID`` provenance is rejected at construction. ::

    v = Verdict(Property.POWER_BOUNDED, Status.PROVEN_TRUE, "affine-pb-me", provenance=Provenance.STRUCTURAL)
    v.to_dict()["status"]          # 'ProvenTrue'

Function spaces are named with :class:`SpaceTag`, parsed from the strings used on the command line::

    SpaceTag.parse("om:2")         # SpaceTag(kind=SpaceKind.OM_ORDER, order=2)
    str(SpaceTag.parse("cinf"))    # 'cinf'
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Optional, Tuple

from ..symbol.expr_errors import CopDynError
from .citations import CITATIONS

__all__ = ['Property', 'Status', 'Provenance', 'SpaceKind', 'SpaceTag', 'InvalidSpace', 'Verdict', 'sorted_verdicts']


class Property(Enum):
    POWER_BOUNDED = "PowerBounded"
    MEAN_ERGODIC = "MeanErgodic"
    WEAKLY_SUPERCYCLIC = "WeaklySupercyclic"
    SUPERCYCLIC = "Supercyclic"
    MIXING = "Mixing"
    STRONGLY_RUNAWAY = "StronglyRunaway"
    ITERATE_CONVERGENCE = "IterateConvergence"
    SYMBOL_FOR = "SymbolFor"


class Status(Enum):
    PROVEN_TRUE = "ProvenTrue"
    PROVEN_FALSE = "ProvenFalse"
    EMPIRICAL_TRUE = "EmpiricalTrue"
    EMPIRICAL_FALSE = "EmpiricalFalse"
    INCONCLUSIVE = "Inconclusive"

    @property
    def proven(self) -> bool:
        return self in (Status.PROVEN_TRUE, Status.PROVEN_FALSE)

    @property
    def positive(self) -> bool:
        return self in (Status.PROVEN_TRUE, Status.EMPIRICAL_TRUE)

    @property
    def negative(self) -> bool:
        return self in (Status.PROVEN_FALSE, Status.EMPIRICAL_FALSE)


class Provenance(Enum):
    STRUCTURAL = "structural"
    CERTIFIED_WITNESS = "certified-witness"
    GRID = "grid"


class SpaceKind(Enum):
    C = "c"
    OM_ORDER = "om"
    OM = "oM"
    SCHWARTZ = "schwartz"
    ANALYTIC = "analytic"


_C_ORDER = re.compile(r'^c(\d+)$')
_OM_ORDER = re.compile(r'^om:(\d+)$')


class InvalidSpace(CopDynError):
    """A space tag string could not be read."""


@dataclass(frozen=True)
class SpaceTag:
    """
    A function space over R.

    :ivar kind: the family of spaces
    :ivar order: m for C^m and O^m, None for C^infinity and for the spaces without order
    """
    kind: SpaceKind
    order: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "SpaceTag":
        """
        Reads ``c0``, ``c1``, ``c<m>``, ``cinf``, ``om:<m>``, ``oM``, ``schwartz`` or ``analytic``.

        :raises InvalidSpace: on any other text
        """
        text = text.strip()
        if text == "cinf":
            return cls(SpaceKind.C)
        if text == "oM":
            return cls(SpaceKind.OM)
        if text == "schwartz":
            return cls(SpaceKind.SCHWARTZ)
        if text == "analytic":
            return cls(SpaceKind.ANALYTIC)
        match = _C_ORDER.match(text)
        if match:
            return cls(SpaceKind.C, int(match.group(1)))
        match = _OM_ORDER.match(text)
        if match:
            return cls(SpaceKind.OM_ORDER, int(match.group(1)))
        raise InvalidSpace("unknown function space '%s' (expected c<m>, cinf, om:<m>, oM, schwartz or analytic)"
                           % text)

    def __str__(self):
        if self.kind is SpaceKind.C:
            return "cinf" if self.order is None else "c%d" % self.order
        if self.kind is SpaceKind.OM_ORDER:
            return "om:%d" % self.order
        return self.kind.value

    @property
    def is_continuous_functions(self) -> bool:
        """True for C(R) = C^0."""
        return self.kind is SpaceKind.C and self.order == 0

    @property
    def is_Cm(self) -> bool:
        return self.kind is SpaceKind.C

    @property
    def is_O(self) -> bool:
        return self.kind in (SpaceKind.OM_ORDER, SpaceKind.OM)

    @property
    def embeds_in_C1(self) -> bool:
        """True when the elements of the space are C^1, so the derivative based rules apply."""
        if self.kind in (SpaceKind.C, SpaceKind.OM_ORDER):
            return self.order is None or self.order >= 1
        return True

    @property
    def derivative_order(self) -> Optional[int]:
        """The m of C^m and O^m, None when every order is involved."""
        return self.order


Witness = Tuple[str, Any]


@dataclass(frozen=True)
class Verdict:
    """
    :ivar property: the property of C_φ being judged
    :ivar status: the judgment
    :ivar citation: tag from :data:`~PyCopDyn.classifier.citations.CITATIONS`
    :ivar witnesses: (description, value) pairs supporting the judgment
    :ivar provenance: what kind of evidence the status rests on
    :ivar note: free text
    :ivar space: the function space, None when the property does not depend on it
    """
    property: Property
    status: Status
    citation: str
    witnesses: Tuple[Witness, ...] = field(default_factory=tuple)
    provenance: Provenance = Provenance.GRID
    note: Optional[str] = None
    space: Optional[SpaceTag] = None

    def __post_init__(self):
        if self.citation not in CITATIONS:
            raise ValueError("unknown citation tag '%s'" % self.citation)
        if self.status.proven and self.provenance is Provenance.GRID:
            raise ValueError("a %s verdict cannot rest on grid evidence only" % self.status.value)
        object.__setattr__(self, "witnesses", tuple((str(d), v) for d, v in self.witnesses))

    def witness(self, description: str, default=None):
        """Value of the first witness with the given description."""
        for d, v in self.witnesses:
            if d == description:
                return v
        return default

    def to_dict(self) -> dict:
        return {
            "property": self.property.value,
            "space": None if self.space is None else str(self.space),
            "status": self.status.value,
            "provenance": self.provenance.value,
            "citation": self.citation,
            "witnesses": [{"description": d, "value": v} for d, v in self.witnesses],
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        return cls(
            property=Property(data["property"]),
            status=Status(data["status"]),
            citation=data["citation"],
            witnesses=tuple((w["description"], w["value"]) for w in data.get("witnesses", [])),
            provenance=Provenance(data.get("provenance", Provenance.GRID.value)),
            note=data.get("note"),
            space=None if data.get("space") is None else SpaceTag.parse(data["space"]),
        )


_PROPERTY_ORDER = {p: i for i, p in enumerate(Property)}


def sorted_verdicts(verdicts: Iterable[Verdict]) -> list:
    """Verdicts ordered by property tag, then space. The sort is stable for equal keys."""
    return sorted(verdicts, key=lambda v: (_PROPERTY_ORDER[v.property], "" if v.space is None else str(v.space)))
