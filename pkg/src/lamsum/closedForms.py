# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    closedForms.py
# @author  lamsum developers
# @date    2026-10-18
"""
Closed forms in the canonical coordinates gamma = M(l), delta = R_t M(m) R_-t.

The functions here are evaluated from (l, m, theta) directly and serve two
purposes: ground truth for the matrix based code in tests, and a well
conditioned evaluation of the sum system for long curves, where products
of boost matrices lose all relative precision.

Half-angle quantities are used throughout (ch l - 1 = 2 sh^2(l/2),
sh l = 2 sh(l/2) ch(l/2)) so that no difference of large numbers occurs.
"""
import math
from dataclasses import dataclass

import numpy as np

from .isometry import NotHyperbolic, boost, rotation
from .minkowski import vec


def lemma_gamma(l):
    return boost(l)


def lemma_delta(m, theta):
    return rotation(theta) @ boost(m) @ rotation(-theta)


def _cosh_sinh(l):
    return math.cosh(l), math.sinh(l)


def lemma_w(l, m, theta):
    """Generator of ker(delta gamma - 1), a positive multiple of x0(delta gamma)."""
    Cl, Sl = _cosh_sinh(l)
    Cm, Sm = _cosh_sinh(m)
    s, c = math.sin(theta), math.cos(theta)
    return vec(s * (Cm - 1) * Sl,
               -s * (Cm - 1) * (Cl + 1),
               Sl * Sm + c * (Cl + 1) * (Cm - 1))


def lemma_v(l, m, theta):
    """Generator of ker(alpha - 1), a negative multiple of x0(alpha)."""
    Cl, Sl = _cosh_sinh(l)
    Cm, Sm = _cosh_sinh(m)
    s, c = math.sin(theta), math.cos(theta)
    return vec(Sl * Sm + (Cl - 1) * (Cm - 1) * c,
               -Sm * (Cl - 1) - Sl * (Cm - 1) * c,
               -s * Sl * (Cm - 1))


def lemma_v_minus_delta_v(l, m, theta):
    Cl, Sl = _cosh_sinh(l)
    Cm = math.cosh(m)
    s, c = math.sin(theta), math.cos(theta)
    return 2 * (Cm - 1) * vec((Cl - 1) * c, -Sl * c, -Sl * s)


def lemma_det_check(l, m, theta):
    """Determinant of the rows x0(gamma), w, v - delta v; vanishes identically."""
    rows = np.array([[0.0, 0.0, 1.0], lemma_w(l, m, theta), lemma_v_minus_delta_v(l, m, theta)])
    return float(np.linalg.det(rows))


@dataclass(frozen=True)
class LemmaVectors:
    w: np.ndarray
    v: np.ndarray
    v_minus_delta_v: np.ndarray


def lemma_vectors(l, m, theta):
    return LemmaVectors(lemma_w(l, m, theta), lemma_v(l, m, theta), lemma_v_minus_delta_v(l, m, theta))


def kappa(l, m, theta):
    """sin(theta) sh(l/2) sh(m/2), which equals ch(length(alpha)/4) when > 1."""
    return math.sin(theta) * math.sinh(l / 2) * math.sinh(m / 2)


def commutator_trace(l, m, theta):
    k = kappa(l, m, theta)
    return 4 * (2 * k * k - 1) ** 2 - 1


def fricke_trace(l, m, theta):
    """The same trace through the SL(2,R) character x^2+y^2+z^2-xyz-2."""
    x = 2 * math.cosh(l / 2)
    y = 2 * math.cosh(m / 2)
    z = 2 * (math.cosh(l / 2) * math.cosh(m / 2) + math.sinh(l / 2) * math.sinh(m / 2) * math.cos(theta))
    t = x * x + y * y + z * z - x * y * z - 2
    return t * t - 1


def boundary_length(l, m, theta):
    k = kappa(l, m, theta)
    if k <= 1.0:
        raise NotHyperbolic("(l, m, theta) = (%s, %s, %s) does not bound a hyperbolic one-holed torus" % (l, m, theta))
    return 4 * math.acosh(k)


def product_length(l, m, theta):
    return 2 * math.acosh(math.cosh(l / 2) * math.cosh(m / 2)
                          + math.sinh(l / 2) * math.sinh(m / 2) * math.cos(theta))


def product_angles(l, m, theta):
    """(theta(delta gamma, gamma), theta(delta gamma, delta))."""
    chl, shl = math.cosh(l / 2), math.sinh(l / 2)
    chm, shm = math.cosh(m / 2), math.sinh(m / 2)
    s, c = math.sin(theta), math.cos(theta)
    return (math.atan2(s * shm, shl * chm + c * chl * shm),
            math.atan2(s * shl, shm * chl + c * shl * chm))


def ratio(l, m, theta):
    tl, tm = math.tanh(l / 2), math.tanh(m / 2)
    c = math.cos(theta)
    return (tm + c * tl) / (tl + c * tm)


def sum_weights(l, m, theta, d):
    """Explicit weights (a, b) of (C, r d) + (D, d) = (C_alpha, a) + (C_dg, b)."""
    chl, shl = math.cosh(l / 2), math.sinh(l / 2)
    chm, shm = math.cosh(m / 2), math.sinh(m / 2)
    s, c = math.sin(theta), math.cos(theta)
    x = shm * chl + c * shl * chm
    cw = ratio(l, m, theta) * d
    shAlpha = math.sinh(boundary_length(l, m, theta) / 4)
    shProduct = math.sinh(product_length(l, m, theta) / 2)
    return cw * s * shAlpha / (2 * x), cw * c * shProduct / x


@dataclass(frozen=True)
class LemmaFrame:
    """Every vector of the sum system, in the canonical coordinates."""
    x_gamma: np.ndarray
    x_delta: np.ndarray
    x_alpha: np.ndarray
    x_dg: np.ndarray
    gamma_x_dg: np.ndarray
    one_minus_gamma_x_alpha: np.ndarray
    one_minus_delta_x_alpha: np.ndarray
    one_minus_dg_x_alpha: np.ndarray


def lemma_frame(l, m, theta):
    chl, shl = math.cosh(l / 2), math.sinh(l / 2)
    chm, shm = math.cosh(m / 2), math.sinh(m / 2)
    s, c = math.sin(theta), math.cos(theta)
    # ch l - 1, sh l, ch l + 1 and the same for m
    Kl, Sl, Pl = 2 * shl * shl, 2 * shl * chl, 2 * chl * chl
    Km, Sm = 2 * shm * shm, 2 * shm * chm
    k = s * shl * shm
    if k <= 1.0:
        raise NotHyperbolic("(l, m, theta) = (%s, %s, %s) does not bound a hyperbolic one-holed torus" % (l, m, theta))
    vNorm = 4 * shl * shm * math.sqrt((k - 1) * (k + 1))
    v = vec(Sl * Sm + Kl * Km * c, -Sm * Kl - Sl * Km * c, -s * Sl * Km)
    chProduct = chl * chm + shl * shm * c
    wNorm = 4 * shm * chl * math.sqrt((chProduct - 1) * (chProduct + 1))
    w = vec(s * Km * Sl, -s * Km * Pl, Sl * Sm + c * Pl * Km)
    return LemmaFrame(
        x_gamma=vec(0.0, 0.0, 1.0),
        x_delta=vec(0.0, -s, c),
        x_alpha=-v / vNorm,
        x_dg=w / wNorm,
        gamma_x_dg=vec(-w[0], w[1], w[2]) / wNorm,
        one_minus_gamma_x_alpha=-2 * Kl * vec(Km * c, -Sm, 0.0) / vNorm,
        one_minus_delta_x_alpha=-2 * Km * vec(Kl * c, -Sl * c, -Sl * s) / vNorm,
        one_minus_dg_x_alpha=vec(0.0, 2 * Km * Sl * c + 2 * Kl * Sm, 2 * Km * Sl * s) / vNorm)
