# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    test_isometry.py
# @author  lamsum developers
# @date    2026-10-18
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from lamsum import closedForms
from lamsum.isometry import (CROSSING, DISJOINT, ELLIPTIC, EQUAL, HYPERBOLIC, IDENTITY, Isometry,
                             NotHyperbolic, NotIsometry, Overflow, axes_relation, axis, boost, classify,
                             commutator, conjugate, handedness, identity, orthogonalityDefect, relation_of_duals,
                             rotation, translation_length)
from lamsum.minkowski import vec

from conftest import generic_triples


def delta_of(m, theta):
    return rotation(theta) @ boost(m) @ rotation(-theta)


def test_boost():
    assert_allclose(boost(0).m, np.eye(3))
    assert_allclose((boost(2) @ boost(3)).m, boost(5).m, rtol=1e-12)
    assert_allclose(boost(2) @ vec(1, 0, 0), [math.cosh(2), math.sinh(2), 0])
    with pytest.raises(Overflow):
        boost(800)
    with pytest.raises(Overflow):
        boost(float("inf"))


def test_rotation():
    assert_allclose(rotation(0).m, np.eye(3))
    assert_allclose(rotation(math.pi / 2) @ vec(0, 1, 0), [0, 0, 1], atol=1e-15)
    assert_allclose((rotation(0.7) @ rotation(-0.7)).m, np.eye(3), atol=1e-15)


def test_validation():
    with pytest.raises(NotIsometry):
        Isometry(np.ones((3, 3)))
    with pytest.raises(NotIsometry):
        Isometry(-np.eye(3))
    Isometry(boost(1.5).m)


def test_inverse():
    g = delta_of(2.0, 1.0)
    assert_allclose((g @ g.inverse()).m, np.eye(3), atol=1e-12)


def test_classify():
    assert classify(boost(2)) == HYPERBOLIC
    assert classify(rotation(1)) == ELLIPTIC
    assert classify(identity()) == IDENTITY


def test_axis():
    assert_allclose(axis(boost(2)), [0, 0, 1])
    theta = 1.0
    assert_allclose(axis(delta_of(2.0, theta)), [0, -math.sin(theta), math.cos(theta)], atol=1e-12)
    g = delta_of(3.0, 0.4)
    assert_allclose(axis(g.inverse()), -axis(g), atol=1e-12)
    with pytest.raises(NotHyperbolic):
        axis(rotation(1.0))


def test_axis_is_equivariant():
    g = delta_of(2.0, 1.0)
    h = boost(1.3) @ rotation(0.4)
    assert_allclose(axis(conjugate(h, g)), h @ axis(g), atol=1e-10)


def test_axis_is_equivariant_on_random_pairs():
    # conjugation by h amplifies rounding by up to |h|^2
    rng = np.random.default_rng(20261018)
    worst = 0.0
    for _ in range(1000):
        phi, l = rng.uniform(0, 2 * math.pi), rng.uniform(0.5, 3.0)
        g = rotation(phi) @ boost(l) @ rotation(-phi)
        a, b, c = rng.uniform(0, 2 * math.pi), rng.uniform(0, 1.5), rng.uniform(0, 2 * math.pi)
        h = rotation(a) @ boost(b) @ rotation(c)
        err = float(np.max(np.abs(axis(conjugate(h, g)) - h @ axis(g))))
        worst = max(worst, err / max(1.0, float(np.max(np.abs(h.m)))) ** 2)
    assert worst <= 1e-12


def test_translation_length():
    assert translation_length(boost(2)) == pytest.approx(2.0, rel=1e-12)
    g = delta_of(2.5, 0.8)
    h = rotation(0.3) @ boost(0.9)
    assert translation_length(conjugate(h, g)) == pytest.approx(2.5, rel=1e-10)
    with pytest.raises(NotHyperbolic):
        translation_length(rotation(0.5))


def test_relation_crossing():
    relation = axes_relation(boost(2), delta_of(2, 1.0))
    assert relation.kind == CROSSING
    assert relation.theta == pytest.approx(1.0, abs=1e-12)


def test_relation_disjoint_and_equal():
    u = vec(0, 0, 1)
    v = vec(math.sinh(1), 0, math.cosh(1))
    assert relation_of_duals(u, v).kind == DISJOINT
    assert relation_of_duals(u, u).kind == EQUAL
    assert relation_of_duals(u, -u).kind == EQUAL


def test_handedness():
    x_gamma = axis(boost(2))
    x_delta = axis(delta_of(2, 1.0))
    assert handedness(x_gamma, x_delta) == 1
    assert handedness(x_delta, x_gamma) == -1


@given(generic_triples)
@settings(max_examples=30, deadline=None)
def test_commutator_trace_matches_closed_form(triple):
    l, m, theta = triple
    alpha = commutator(boost(l), delta_of(m, theta))
    assert classify(alpha) == HYPERBOLIC
    assert alpha.trace == pytest.approx(closedForms.commutator_trace(l, m, theta), rel=1e-9)


@given(st.floats(0.1, 5), st.floats(0.1, 5), st.floats(0.05, math.pi / 2))
@settings(max_examples=50, deadline=None)
def test_products_stay_isometries(l, m, theta):
    g = boost(l) @ delta_of(m, theta) @ boost(l).inverse()
    assert orthogonalityDefect(g.m) < 1e-9


@given(generic_triples)
@settings(max_examples=30, deadline=None)
def test_product_axis_cosines_agree_under_conjugation(triple):
    l, m, theta = triple
    gamma, delta = boost(l), delta_of(m, theta)
    x_gd, x_dg = axis(gamma @ delta), axis(delta @ gamma)
    xg, xd = axis(gamma), axis(delta)
    assert -x_gd[0] * xg[0] + x_gd[1] * xg[1] + x_gd[2] * xg[2] == pytest.approx(
        -x_dg[0] * xg[0] + x_dg[1] * xg[1] + x_dg[2] * xg[2], rel=1e-9)
    assert -x_gd[0] * xd[0] + x_gd[1] * xd[1] + x_gd[2] * xd[2] == pytest.approx(
        -x_dg[0] * xd[0] + x_dg[1] * xd[1] + x_dg[2] * xd[2], rel=1e-9)
