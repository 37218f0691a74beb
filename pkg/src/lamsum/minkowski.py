# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    minkowski.py
# @author  lamsum developers
# @date    2026-10-18
"""
Minkowski 3-space of signature (-,+,+) with index 0 timelike.

Vectors are plain numpy arrays of length 3. The hyperboloid
{form(x,x) = -1, x0 > 0} is the model of the hyperbolic plane; a unit
spacelike vector n is dual to the geodesic {x : form(n,x) = 0}.
"""
import math

import numpy as np

G = np.diag([-1.0, 1.0, 1.0])

TAU_CLASS = 1e-10
TAU_UNIT = 1e-10

TIMELIKE = "timelike"
SPACELIKE = "spacelike"
LIGHTLIKE = "lightlike"


class GeometryError(ValueError):
    """Root of all geometric and numerical errors raised by lamsum."""


class NotSpacelike(GeometryError):
    pass


class Degenerate(GeometryError):
    pass


def vec(x0, x1, x2):
    return np.array([x0, x1, x2], dtype=float)


def form(u, v):
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _scale(*vectors):
    return max(1.0, max(float(np.max(np.abs(v))) for v in vectors))


def causal_type(v):
    q = form(v, v)
    tol = TAU_CLASS * _scale(v) ** 2
    if q < -tol:
        return TIMELIKE
    if q > tol:
        return SPACELIKE
    return LIGHTLIKE


def normalize_spacelike(v):
    """Returns v / sqrt(form(v,v)).

    The vector is rescaled by its largest entry first so that vectors with
    entries beyond 1e154 do not overflow in the form.
    """
    v = np.asarray(v, dtype=float)
    big = float(np.max(np.abs(v)))
    if big == 0.0 or not math.isfinite(big):
        raise NotSpacelike("cannot normalize %s" % (v,))
    u = v / big
    q = form(u, u)
    if q <= TAU_CLASS:
        raise NotSpacelike("form(v,v) = %g is not positive for %s" % (q * big * big, v))
    return u / math.sqrt(q)


def normalize_timelike(v):
    """Returns the future pointing point of the hyperboloid on the ray of v."""
    v = np.asarray(v, dtype=float)
    big = float(np.max(np.abs(v)))
    u = v / big
    q = form(u, u)
    if q >= -TAU_CLASS:
        raise Degenerate("%s is not timelike" % (v,))
    u = u / math.sqrt(-q)
    return u if u[0] > 0 else -u


def on_hyperboloid(p, tol=TAU_UNIT):
    return p[0] > 0 and abs(form(p, p) + 1.0) <= tol * _scale(p) ** 2


def cross(u, v):
    """Minkowski cross product: form(cross(u, v), w) = det[u, v, w] for all w."""
    return G @ np.cross(u, v)


def separates(u, p, q):
    """True iff the geodesic dual to u separates the points p and q."""
    fp = form(u, p)
    fq = form(u, q)
    scale = _scale(u) * _scale(p, q)
    if abs(fp) < TAU_CLASS * scale or abs(fq) < TAU_CLASS * scale:
        raise Degenerate("segment endpoint on the geodesic dual to %s" % (u,))
    return fp * fq < 0


def hyperboloid_point(t, phi=0.0):
    """The point at distance t from (1,0,0) in direction phi."""
    return vec(math.cosh(t), math.sinh(t) * math.cos(phi), math.sinh(t) * math.sin(phi))


def to_disk(p):
    """Projection of the hyperboloid to the Poincare disk."""
    return np.array([p[1], p[2]]) / (1.0 + p[0])


def ideal_endpoints(n):
    """The two ideal endpoints on the unit circle of the geodesic dual to n.

    The geodesic is the set of disk points whose boundary directions e
    satisfy n1*e1 + n2*e2 = n0; the endpoints are returned in increasing
    angle order around the dual direction.
    """
    n = normalize_spacelike(n)
    rho = math.hypot(n[1], n[2])
    psi = math.atan2(n[2], n[1])
    spread = math.acos(max(-1.0, min(1.0, n[0] / rho)))
    return (np.array([math.cos(psi - spread), math.sin(psi - spread)]),
            np.array([math.cos(psi + spread), math.sin(psi + spread)]))


def geodesic_circle(n, tol=1e-9):
    """Center and radius of the Euclidean circle carrying the geodesic dual to n.

    Returns None when the geodesic is a diameter.
    """
    n = normalize_spacelike(n)
    if abs(n[0]) <= tol:
        return None
    return np.array([n[1], n[2]]) / n[0], 1.0 / abs(n[0])
