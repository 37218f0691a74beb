# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    test_closedForms.py
# @author  lamsum developers
# @date    2026-10-18
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_allclose

from lamsum import closedForms, sumEngine
from lamsum.isometry import NotHyperbolic, axes_relation, axis, commutator, translation_length
from lamsum.minkowski import normalize_spacelike

from conftest import RIGHT, generic_triples, small_triples

GRID = list(itertools.product([0.7, 1.3, 2.0, 3.0], [0.7, 1.3, 2.0, 3.0], [0.4, 1.0, RIGHT]))


def _pair(l, m, theta):
    return closedForms.lemma_gamma(l), closedForms.lemma_delta(m, theta)


def _assert_kernel(g, v):
    scale = float(np.max(np.abs(g.m))) * float(np.max(np.abs(v)))
    assert np.max(np.abs(g @ v - v)) <= 1e-9 * scale


@pytest.mark.parametrize("l,m,theta", GRID)
def test_lemma_w_is_fixed_by_product(l, m, theta):
    gamma, delta = _pair(l, m, theta)
    _assert_kernel(delta @ gamma, closedForms.lemma_w(l, m, theta))


@pytest.mark.parametrize("l,m,theta", GRID)
def test_lemma_v_is_fixed_by_commutator(l, m, theta):
    gamma, delta = _pair(l, m, theta)
    v = closedForms.lemma_v(l, m, theta)
    _assert_kernel(commutator(gamma, delta), v)
    # ker(alpha - 1) = ker(delta gamma - gamma delta)
    diff = (delta @ gamma).m - (gamma @ delta).m
    assert np.max(np.abs(diff @ v)) <= 1e-9 * float(np.max(np.abs((delta @ gamma).m))) * np.max(np.abs(v))


@pytest.mark.parametrize("l,m,theta", GRID)
def test_v_minus_delta_v(l, m, theta):
    _, delta = _pair(l, m, theta)
    v = closedForms.lemma_v(l, m, theta)
    expected = closedForms.lemma_v_minus_delta_v(l, m, theta)
    assert_allclose(v - delta @ v, expected, atol=1e-9 * max(1.0, float(np.max(np.abs(expected)))))


@pytest.mark.parametrize("l,m,theta", [(2, 2, 1.0), (0.7, 1.3, 0.4)] + GRID)
def test_determinant_vanishes(l, m, theta):
    vectors = closedForms.lemma_vectors(l, m, theta)
    scale = max(1.0, float(np.max(np.abs(vectors.w))), float(np.max(np.abs(vectors.v_minus_delta_v))))
    assert abs(closedForms.lemma_det_check(l, m, theta)) <= 1e-9 * scale ** 3


def test_lemma_vectors_are_axes():
    l, m, theta = 2.0, 2.0, 1.0
    gamma, delta = _pair(l, m, theta)
    assert_allclose(normalize_spacelike(closedForms.lemma_w(l, m, theta)), axis(delta @ gamma), atol=1e-10)
    assert_allclose(-normalize_spacelike(closedForms.lemma_v(l, m, theta)), axis(commutator(gamma, delta)),
                    atol=1e-10)


def test_right_angle_w():
    w = closedForms.lemma_w(2.0, 3.0, RIGHT)
    assert w[2] == pytest.approx(math.sinh(2) * math.sinh(3), rel=1e-12)


@given(generic_triples)
@settings(max_examples=30, deadline=None)
def test_traces(triple):
    l, m, theta = triple
    assert closedForms.commutator_trace(l, m, theta) == pytest.approx(closedForms.fricke_trace(l, m, theta),
                                                                     rel=1e-9)
    alpha = commutator(*_pair(l, m, theta))
    assert translation_length(alpha) == pytest.approx(closedForms.boundary_length(l, m, theta), rel=1e-8)


def test_boundary_length_needs_hyperbolic_commutator():
    with pytest.raises(NotHyperbolic):
        closedForms.boundary_length(1.0, 1.0, 0.5)
    with pytest.raises(NotHyperbolic):
        closedForms.lemma_frame(1.0, 1.0, 0.5)


@given(generic_triples)
@settings(max_examples=30, deadline=None)
def test_product_length_and_angles(triple):
    l, m, theta = triple
    gamma, delta = _pair(l, m, theta)
    product = delta @ gamma
    assert translation_length(product) == pytest.approx(closedForms.product_length(l, m, theta), rel=1e-9)
    withGamma, withDelta = closedForms.product_angles(l, m, theta)
    assert axes_relation(product, gamma).theta == pytest.approx(withGamma, abs=1e-9)
    assert axes_relation(product, delta).theta == pytest.approx(withDelta, abs=1e-9)
    assert withGamma < theta


@given(generic_triples)
@settings(max_examples=30, deadline=None)
def test_ratio_matches_axes(triple):
    l, m, theta = triple
    assert closedForms.ratio(l, m, theta) == pytest.approx(sumEngine.ratio(*_pair(l, m, theta)), rel=1e-9)
    assert closedForms.ratio(m, l, theta) == pytest.approx(1 / closedForms.ratio(l, m, theta), rel=1e-12)


def test_ratio_at_right_angle():
    assert closedForms.ratio(2.0, 2.0, RIGHT) == pytest.approx(1.0, rel=1e-15)
    assert closedForms.ratio(2.0, 3.0, RIGHT) == pytest.approx(math.tanh(1.5) / math.tanh(1.0), rel=1e-12)


@given(generic_triples)
@settings(max_examples=30, deadline=None)
def test_sum_weights_match_system(triple):
    l, m, theta = triple
    d = 0.7
    a, b = closedForms.sum_weights(l, m, theta, d)
    solution = sumEngine.prop_solve_canonical(l, m, theta, closedForms.ratio(l, m, theta) * d, d)
    assert solution.a == pytest.approx(a, rel=1e-9)
    assert solution.b == pytest.approx(b, rel=1e-9, abs=1e-15)


@given(small_triples)
@settings(max_examples=30, deadline=None)
def test_frame_matches_matrices(triple):
    l, m, theta = triple
    gamma, delta = _pair(l, m, theta)
    frame = closedForms.lemma_frame(l, m, theta)
    xa = axis(commutator(gamma, delta))
    xdg = axis(delta @ gamma)
    tol = dict(rtol=1e-7, atol=1e-7 * max(1.0, float(np.max(np.abs(xa)))))
    assert_allclose(frame.x_gamma, axis(gamma), **tol)
    assert_allclose(frame.x_delta, axis(delta), **tol)
    assert_allclose(frame.x_alpha, xa, **tol)
    assert_allclose(frame.x_dg, xdg, **tol)
    assert_allclose(frame.gamma_x_dg, gamma @ xdg, **tol)
    assert_allclose(frame.one_minus_gamma_x_alpha, xa - gamma @ xa, **tol)
    assert_allclose(frame.one_minus_delta_x_alpha, xa - delta @ xa, **tol)
    assert_allclose(frame.one_minus_dg_x_alpha, xa - (delta @ gamma) @ xa, **tol)


@given(generic_triples)
@settings(max_examples=30, deadline=None)
def test_boundary_invariant_is_preserved_by_the_split(triple):
    l, m, theta = triple
    product = closedForms.product_length(l, m, theta)
    angle = closedForms.product_angles(l, m, theta)[0]
    assert closedForms.kappa(product, l, angle) == pytest.approx(closedForms.kappa(l, m, theta), rel=1e-12)
