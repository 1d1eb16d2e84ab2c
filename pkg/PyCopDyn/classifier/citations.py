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
# Name:        citations.py
# Purpose:     Fixed table of the results every verdict is justified by
#
# Author:      PyCopDyn developers
#
# Created:     10-03-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Every :class:`~PyCopDyn.classifier.verdict.Verdict` names the mathematical statement it rests on with one of the tags
below. Verdicts obtained from grid evidence only use the tag ``empirical`` or the tag of the necessary condition they
tested.
"""
__author__ = "PyCopDyn developers"
__copyright__ = "Copyright 2026"

__all__ = ['CITATIONS', 'EMPIRICAL', 'describe']

EMPIRICAL = "empirical"

CITATIONS = {
    "affine-pb-me":
        "For a polynomial φ, C_φ is power bounded, and mean ergodic, iff φ(x)=ax+b with |a|<1, a=-1, or a=1 and b=0. "
        "Translations x+b give φ_n(0)=nb, degree >= 2 and |a|>1 give |φ_n| growing beyond any bound.",
    "monotone-attracting-fixed-point":
        "For a monotone φ with φ_2 different from the identity, C_φ is power bounded iff φ has an attracting fixed "
        "point a and C_{φ_n} converges to the evaluation at a. A decreasing φ behaves as φ_2.",
    "iterate-bound-Om":
        "C_φ is power bounded on O^m iff for every i <= m there are C, p with |φ_n^(i)(x)| <= C(1+x^2)^p for all n.",
    "iterate-bound-OM":
        "C_φ is power bounded on O_M iff the iterate bound holds for every derivative order.",
    "wsc-mixing-analytic":
        "On the real analytic functions, C_φ is weakly supercyclic iff it is mixing, for φ surjective without "
        "fixed points.",
    "wsc-mixing-Cm":
        "On C^m with m >= 1, and on C^infinity, C_φ is weakly supercyclic iff it is mixing iff φ is strongly "
        "runaway with φ' > 0 everywhere.",
    "sc-mixing-C0":
        "On C(R), C_φ is supercyclic iff it is mixing iff φ is increasing without fixed points.",
    "fixed-point-or-critical-point":
        "When φ(a)=a or φ'(a)=0 for some a, C_φ is not weakly supercyclic.",
    "supercyclic-increasing-no-fixed-point":
        "A supercyclic C_φ on C(R) needs an injective, increasing φ without fixed points.",
    "wsc-runaway-positive-derivative":
        "A weakly supercyclic C_φ on a space of C^1 functions needs a strongly runaway φ with φ' > 0.",
    "runaway-no-fixed-point":
        "An increasing φ is strongly runaway iff it has no fixed points. A fixed point inside K prevents escape "
        "from K.",
    "me-iterates-over-n":
        "If C_φ is mean ergodic then φ_n/n converges to 0 and the Cesaro means φ_[n] converge.",
    "me-escape-above-diagonal":
        "If φ(x) - x keeps a sign bounded away from 0 beyond some β with φ increasing there, the orbit of β escapes "
        "linearly, φ_n(β) > β + nδ, and C_φ is not mean ergodic.",
    "me-fixed-set-interval":
        "For a non-decreasing φ with C_φ mean ergodic, the fixed point set is a closed interval.",
    "me-single-fixed-point":
        "For an increasing φ different from the identity, C_φ mean ergodic forces exactly one fixed point.",
    "sot-convergence":
        "The iterates C_{φ_n} converge pointwise on the space iff φ_n converges in the space and is equicontinuous.",
    "superposition-continuity":
        "For a smooth f, the superposition φ -> f o φ is continuous on C^m.",
    "translation-mixing":
        "A translation φ(x)=x+d with d != 0 gives a mixing C_φ on O^m and on O_M.",
    "symbol-Om":
        "C_φ maps O^m into itself iff φ belongs to O^m. Polynomials of degree d satisfy the bound with p = ceil(d/2).",
    "symbol-OM":
        "C_φ maps O_M into itself iff φ belongs to O_M.",
    "symbol-Cm":
        "Every smooth φ gives a continuous C_φ on C^m and on C^infinity. Real analytic φ preserve the real analytic "
        "functions.",
    "schwartz-symbol":
        "C_φ maps the Schwartz space into itself iff |φ^(j)(x)| <= C(1+φ(x)^2)^p for every j and there is k with "
        "|φ(x)| >= |x|^(1/k) for |x| >= k.",
    "schwartz-power-bounded":
        "C_φ is power bounded on the Schwartz space iff the two symbol conditions hold uniformly in n for the iterates.",
    "bump-unbounded":
        "The bump sequence f_n equal to n(1+x^2)^n on [n+1/n, n+1-1/n] has |f_n|_{0,p} >= n for n >= p, so it "
        "converges to 0 in every C^m but is unbounded in O^m.",
    "OC-not-closed":
        "O_C is not preserved by composition: with φ(x)=x^2 and f=sin, the weighted derivatives of f o φ at "
        "x_k^2 = π/2+2kπ grow at least like x_k^2.",
    "bounded-sets-Cm-topology":
        "On bounded sets of O^m the topology of O^m coincides with the topology of C^m. Cited, not verified.",
    EMPIRICAL:
        "Grid evidence without a structural certificate.",
}


def describe(tag: str) -> str:
    """Description of a citation tag, raising KeyError for an unknown tag."""
    return CITATIONS[tag]
