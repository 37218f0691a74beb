# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    torusSetup.py
# @author  lamsum developers
# @date    2026-10-18
"""
Builds the generator pair of a one-holed torus from (l, m, theta) and the
input weights, and chooses the base point p0 of all cocycles.

gamma is the boost M(l) whose axis is the geodesic x2 = 0, delta is the
boost M(m) rotated by theta about (1,0,0). The pair is swapped when the
weights violate c >= r(gamma, delta) d, so that the sum engine always starts
from a pair satisfying the ratio condition.
"""
import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import closedForms, cocycle
from .isometry import (CROSSING, HYPERBOLIC, TAU_AXIS, axes_relation, axis, boost, classify,
                       commutator, handedness, rotation)
from .minkowski import GeometryError, cross, normalize_timelike, on_hyperboloid

TAU_BASE = 1e-6
TAU_WEIGHT = 1e-12
TAU_ANGLE = 1e-9
BASE_SCAN_START = 0.1
BASE_SCAN_FACTOR = 1.3
BASE_SCAN_STEPS = 40
SWAP_LETTERS = str.maketrans("gGdD", "dDgG")


class InvalidLength(GeometryError):
    pass


class InvalidAngle(GeometryError):
    pass


class NonHyperbolicBoundary(GeometryError):
    pass


class DegenerateWeights(GeometryError):
    pass


class NoGenericPoint(GeometryError):
    pass


@dataclass(frozen=True, eq=False)
class TorusConfig:
    """Generators, weights and base point of one sum problem.

    l, m, theta, c, d echo the input; after a swap gamma carries the input
    delta and the weights are exchanged, which the length_ and weight_
    fields reflect.
    """
    l: float
    m: float
    theta: float
    c: float
    d: float
    swapped: bool
    gamma: object
    delta: object
    alpha: object
    orientation: int
    word_bound: int
    p0: np.ndarray = None
    table: cocycle.WordTable = field(default=None, repr=False)

    @property
    def length_gamma(self):
        return self.m if self.swapped else self.l

    @property
    def length_delta(self):
        return self.l if self.swapped else self.m

    @property
    def weight_gamma(self):
        return self.d if self.swapped else self.c

    @property
    def weight_delta(self):
        return self.c if self.swapped else self.d

    @property
    def generators(self):
        return {"g": self.gamma, "G": self.gamma.inverse(), "d": self.delta, "D": self.delta.inverse()}

    @property
    def generator_arrays(self):
        return cocycle.generator_matrices(self.gamma, self.delta)

    def input_word(self, word):
        """The word in the letters of the input pair, where g is the curve of length l."""
        if not self.swapped:
            return word
        return word.translate(SWAP_LETTERS)


def _checkInputs(l, m, theta, c, d):
    for name, value in (("l", l), ("m", m)):
        if not (math.isfinite(value) and value > 0):
            raise InvalidLength("%s must be a positive finite length, got %s" % (name, value))
    if not (math.isfinite(theta) and 0 < theta <= math.pi / 2 + TAU_AXIS):
        raise InvalidAngle("theta must lie in (0, pi/2], got %s" % theta)
    for name, value in (("c", c), ("d", d)):
        if not (math.isfinite(value) and value >= 0):
            raise DegenerateWeights("%s must be a non-negative finite weight, got %s" % (name, value))
    if c + d <= 0:
        raise DegenerateWeights("at least one of c, d must be positive")


def build_config(l, m, theta, c, d, word_bound=cocycle.DEFAULT_WORD_BOUND, base=None):
    l, m, theta, c, d = (float(x) for x in (l, m, theta, c, d))
    _checkInputs(l, m, theta, c, d)
    # angles within TAU_AXIS of pi/2 count as right angles
    if abs(theta - math.pi / 2) <= TAU_AXIS:
        theta = math.pi / 2
    if closedForms.kappa(l, m, theta) <= 1.0:
        raise NonHyperbolicBoundary("commutator trace %.17g <= 3 for (l, m, theta) = (%s, %s, %s)" %
                                    (closedForms.commutator_trace(l, m, theta), l, m, theta))
    gamma = boost(l)
    delta = rotation(theta) @ boost(m) @ rotation(-theta)
    alpha = commutator(gamma, delta)
    if classify(alpha) != HYPERBOLIC:
        raise NonHyperbolicBoundary("commutator is %s (trace %.17g)" % (classify(alpha).lower(), alpha.trace))
    relation = axes_relation(gamma, delta)
    if relation.kind != CROSSING or abs(relation.theta - theta) > TAU_ANGLE * max(1.0, l + m):
        raise NonHyperbolicBoundary("axes of gamma and delta do not cross at %s: %r" % (theta, relation))
    tol = TAU_WEIGHT * (c + d)
    swapped = d > 0 and c < closedForms.ratio(l, m, theta) * d - tol
    if swapped:
        gamma, delta = delta, gamma
        alpha = commutator(gamma, delta)
    cfg = TorusConfig(l, m, theta, c, d, swapped, gamma, delta, alpha,
                      handedness(axis(gamma), axis(delta)), word_bound,
                      table=cocycle.WordTable(cocycle.generator_matrices(gamma, delta), word_bound))
    if base is None:
        return replace(cfg, p0=base_point(cfg))
    return with_base_point(cfg, base)


def with_base_point(cfg, p0):
    p0 = np.asarray(p0, dtype=float)
    if p0.shape != (3,) or not on_hyperboloid(p0):
        raise GeometryError("base point %s is not on the hyperboloid" % (p0,))
    return replace(cfg, p0=p0)


def _clearance(cfg, q, word_bound):
    """Smallest |form(u, q)| over the lifts of C, D, C_dg and the boundary curve."""
    worst = math.inf
    for word in cocycle.CURVE_WORDS.values():
        _, axes = cocycle.conjugate_axes(word, cfg, word_bound)
        for _, vectors in axes:
            forms = -vectors[:, 0] * q[0] + vectors[:, 1] * q[1] + vectors[:, 2] * q[2]
            scale = np.maximum(1.0, np.max(np.abs(vectors), axis=1))
            worst = min(worst, float(np.min(np.abs(forms) / scale)))
    return worst


def base_point(cfg, word_bound=None):
    """A point of the hyperboloid just beyond the boundary axis A_alpha.

    The point lies on the perpendicular from the crossing point of A_gamma
    and A_delta to A_alpha, at distance s past the foot; s runs over
    0.1 * 1.3^j until the point is at least TAU_BASE away from every lift of
    the curves involved in the sum.
    """
    bound = cfg.word_bound if word_bound is None else word_bound
    p = normalize_timelike(cross(axis(cfg.gamma), axis(cfg.delta)))
    n = axis(cfg.alpha)
    kappa = float(n[0] * -p[0] + n[1] * p[1] + n[2] * p[2])
    sign = 1.0 if kappa >= 0 else -1.0
    tangent = -sign * (n + kappa * p) / math.sqrt(1.0 + kappa * kappa)
    foot = math.asinh(abs(kappa))
    for j in range(BASE_SCAN_STEPS):
        t = foot + BASE_SCAN_START * BASE_SCAN_FACTOR ** j
        q = math.cosh(t) * p + math.sinh(t) * tangent
        if _clearance(cfg, q, bound) > TAU_BASE:
            return q
    raise NoGenericPoint("no base point beyond the boundary axis clears all lifts up to word length %s" % bound)
