# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    isometry.py
# @author  lamsum developers
# @date    2026-10-18
"""
The identity component of SO(2,1): construction, classification, axes,
translation lengths and the relative position of two axes.
"""
import math

import numpy as np

from .minkowski import G, GeometryError, form, cross, normalize_spacelike

TAU_ORTHO = 1e-9
TAU_TRACE = 1e-9
TAU_AXIS = 1e-9
TAU_EQUAL = 1e-7
# cosh overflows a double slightly above 710
MAX_BOOST = 709.0

HYPERBOLIC = "Hyperbolic"
PARABOLIC = "Parabolic"
ELLIPTIC = "Elliptic"
IDENTITY = "Identity"

CROSSING = "Crossing"
DISJOINT = "Disjoint"
ASYMPTOTIC = "Asymptotic"
EQUAL = "Equal"


class NotIsometry(GeometryError):
    pass


class NotHyperbolic(GeometryError):
    pass


class Overflow(GeometryError):
    pass


def orthogonalityDefect(m):
    """Relative defect |m^T G m - G| / max(1, |m|^2)."""
    scale = max(1.0, float(np.max(np.abs(m))) ** 2)
    return float(np.max(np.abs(m.T @ G @ m - G))) / scale


def _gramSchmidt(m):
    """Re-orthonormalizes the columns of m against the form G."""
    cols = [m[:, i].astype(float) for i in range(3)]
    e0 = cols[0] / math.sqrt(-form(cols[0], cols[0]))
    e1 = cols[1] + form(cols[1], e0) * e0
    e1 = e1 / math.sqrt(form(e1, e1))
    e2 = cols[2] + form(cols[2], e0) * e0 - form(cols[2], e1) * e1
    e2 = e2 / math.sqrt(form(e2, e2))
    return np.column_stack([e0, e1, e2])


class Isometry:
    """An orientation preserving, orthochronous Lorentz transformation.

    Products are re-orthonormalized whenever the orthogonality defect grows
    beyond TAU_ORTHO / 10.
    """
    __slots__ = ("m",)

    def __init__(self, m, validate=True):
        m = np.array(m, dtype=float)
        if m.shape != (3, 3) or not np.all(np.isfinite(m)):
            raise NotIsometry("expected a finite 3x3 matrix, got %s" % (m,))
        if validate:
            if orthogonalityDefect(m) > TAU_ORTHO:
                raise NotIsometry("matrix does not preserve the form (defect %g)" % orthogonalityDefect(m))
            if m[0, 0] <= 0:
                raise NotIsometry("matrix is not orthochronous")
            det = np.linalg.det(m)
            if abs(det - 1.0) > TAU_ORTHO * max(1.0, float(np.max(np.abs(m)))) ** 3:
                raise NotIsometry("determinant %g != 1" % det)
        self.m = m

    def __matmul__(self, other):
        if isinstance(other, Isometry):
            prod = self.m @ other.m
            if orthogonalityDefect(prod) > TAU_ORTHO / 10:
                prod = _gramSchmidt(prod)
            return Isometry(prod, validate=False)
        return self.m @ np.asarray(other, dtype=float)

    def inverse(self):
        return Isometry(G @ self.m.T @ G, validate=False)

    @property
    def trace(self):
        return float(np.trace(self.m))

    def __repr__(self):
        return "Isometry(%s)" % np.array2string(self.m, precision=6)


def identity():
    return Isometry(np.eye(3), validate=False)


def boost(l):
    if not math.isfinite(l):
        raise Overflow("boost length %s is not finite" % l)
    if abs(l) > MAX_BOOST:
        raise Overflow("cosh(%g) exceeds the floating range" % l)
    ch, sh = math.cosh(l), math.sinh(l)
    return Isometry([[ch, sh, 0.0], [sh, ch, 0.0], [0.0, 0.0, 1.0]], validate=False)


def rotation(theta):
    co, si = math.cos(theta), math.sin(theta)
    return Isometry([[1.0, 0.0, 0.0], [0.0, co, -si], [0.0, si, co]], validate=False)


def conjugate(h, g):
    """h g h^-1"""
    return h @ g @ h.inverse()


def commutator(g, h):
    """h^-1 g^-1 h g"""
    return h.inverse() @ g.inverse() @ h @ g


def classify(g):
    m = g.m
    if float(np.max(np.abs(m - np.eye(3)))) <= TAU_TRACE:
        return IDENTITY
    tr = g.trace
    tol = TAU_TRACE * max(1.0, abs(tr))
    if tr > 3.0 + tol:
        return HYPERBOLIC
    if tr < 3.0 - tol:
        return ELLIPTIC
    return PARABOLIC


def axis(g):
    """The unit spacelike vector x0(g) dual to the axis of g.

    The axial vector s of the antisymmetric matrix G(g - g^-1) is fixed by g
    and transforms equivariantly under conjugation; -s points to the side
    that makes the axis run from the repulsive to the attractive fixed point,
    which gives axis(boost(l)) = (0,0,1) for l > 0.
    """
    kind = classify(g)
    if kind != HYPERBOLIC:
        raise NotHyperbolic("axis of a %s element (trace %.17g)" % (kind.lower(), g.trace))
    s = G @ (g.m - g.inverse().m)
    axial = np.array([s[1, 2], -s[0, 2], s[0, 1]])
    return normalize_spacelike(-axial)


def translation_length(g):
    kind = classify(g)
    if kind != HYPERBOLIC:
        raise NotHyperbolic("translation length of a %s element (trace %.17g)" % (kind.lower(), g.trace))
    return math.acosh((g.trace - 1.0) / 2.0)


class AxesRelation:
    """Relative position of two axes; theta is set for crossing axes only."""
    __slots__ = ("kind", "theta", "sin")

    def __init__(self, kind, theta=None, sin=None):
        self.kind = kind
        self.theta = theta
        self.sin = sin

    def __eq__(self, other):
        return isinstance(other, AxesRelation) and (self.kind, self.theta) == (other.kind, other.theta)

    def __repr__(self):
        if self.kind == CROSSING:
            return "Crossing(%.17g)" % self.theta
        return self.kind


def relation_of_duals(u, v):
    """Relative position of the geodesics dual to the unit vectors u and v.

    The angle is taken from atan2 of |u x v| and form(u,v), which keeps
    its relative precision for nearly parallel axes.
    """
    s = form(u, v)
    w = cross(u, v)
    gap = -form(w, w)
    if gap > TAU_AXIS ** 2:
        sin = math.sqrt(gap)
        return AxesRelation(CROSSING, math.atan2(sin, s), sin)
    if gap < -TAU_AXIS:
        return AxesRelation(DISJOINT)
    if min(np.max(np.abs(u - v)), np.max(np.abs(u + v))) <= TAU_EQUAL:
        return AxesRelation(EQUAL)
    return AxesRelation(ASYMPTOTIC)


def axes_relation(g, h):
    return relation_of_duals(axis(g), axis(h))


def handedness(u, v):
    """+1 if the crossing axes dual to u, v are positively oriented.

    The sign is that of the timelike component of the Euclidean cross
    product; the pair (axis(boost(l)), axis(R M R^-1)) in canonical
    coordinates is positive for every angle in (0, pi).
    """
    return 1 if np.cross(u, v)[0] > 0 else -1
