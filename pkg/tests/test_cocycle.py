# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    test_cocycle.py
# @author  lamsum developers
# @date    2026-10-18
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from lamsum import cocycle, words
from lamsum.cocycle import (BasePointOnAxis, BoundTooSmall, GeneratorCocycle, WeightedCurve, class_difference,
                            coboundary, crossing_count, curve_cocycle_table, evaluate, matrix_of,
                            multicurve_length, oracle_cocycle)
from lamsum.isometry import axis
from lamsum.minkowski import GeometryError, hyperboloid_point, vec
from lamsum.torusSetup import with_base_point

reduced_words = st.text(alphabet=words.LETTERS, max_size=6)


def _tau(seed):
    rng = np.random.default_rng(seed)
    return GeneratorCocycle(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))


def test_cocycle_rule(generic_cfg):
    cfg = generic_cfg
    tau = _tau(1)
    assert_allclose(evaluate(tau, "gd", cfg), tau.on_gamma + cfg.gamma @ tau.on_delta)
    assert_allclose(evaluate(tau, "gG", cfg), np.zeros(3), atol=1e-12)
    assert_allclose(evaluate(tau, "", cfg), np.zeros(3))


@given(reduced_words, reduced_words)
@settings(max_examples=50, deadline=None)
def test_evaluation_respects_products(generic_cfg, u, v):
    cfg = generic_cfg
    tau = _tau(2)
    lhs = evaluate(tau, u + v, cfg)
    rhs = evaluate(tau, u, cfg) + matrix_of(u, cfg) @ evaluate(tau, v, cfg)
    reduced = evaluate(tau, words.reduce_word(u + v), cfg)
    scale = max(1.0, float(np.max(np.abs(lhs))))
    assert np.max(np.abs(lhs - rhs)) <= 1e-9 * scale
    assert np.max(np.abs(lhs - reduced)) <= 1e-9 * scale


def test_coboundary_values(generic_cfg):
    w = vec(0.3, -0.2, 0.5)
    tau = coboundary(w, generic_cfg)
    g = matrix_of("gdG", generic_cfg)
    assert_allclose(evaluate(tau, "gdG", generic_cfg), g @ w - w, atol=1e-10)


def test_class_difference_recovers_coboundaries(generic_cfg):
    rng = np.random.default_rng(7)
    for _ in range(1000):
        t1 = _tau(rng.integers(1 << 30))
        w = rng.uniform(-1, 1, 3)
        result = class_difference(t1, t1 + coboundary(w, generic_cfg), generic_cfg)
        assert result.is_coboundary
        assert_allclose(result.w, w, atol=1e-10)


def test_distinct_classes(generic_cfg):
    c = curve_cocycle_table(generic_cfg, cocycle.CURVE_C)
    d = curve_cocycle_table(generic_cfg, cocycle.CURVE_D)
    assert class_difference(c, d, generic_cfg).kind == cocycle.DISTINCT


def test_table_entries(generic_cfg):
    cfg = generic_cfg
    c = curve_cocycle_table(cfg, cocycle.CURVE_C)
    assert_allclose(c.on_gamma, 0)
    assert_allclose(c.on_delta, [0, 0, 1])
    d = curve_cocycle_table(cfg, cocycle.CURVE_D)
    assert_allclose(d.on_gamma, [0, math.sin(1.0), -math.cos(1.0)], atol=1e-12)
    with pytest.raises(ValueError):
        curve_cocycle_table(cfg, "E")


@pytest.mark.parametrize("name", sorted(cocycle.CURVE_WORDS))
@pytest.mark.parametrize("cfgName", ["right_cfg", "generic_cfg", "skew_cfg", "swapped_cfg"])
def test_oracle_reproduces_table(request, name, cfgName):
    cfg = request.getfixturevalue(cfgName)
    expected = curve_cocycle_table(cfg, name)
    found = oracle_cocycle(WeightedCurve(cocycle.CURVE_WORDS[name], 1.0), cfg, 6)
    assert_allclose(found.on_gamma, expected.on_gamma, atol=1e-9)
    assert_allclose(found.on_delta, expected.on_delta, atol=1e-9)


def test_oracle_is_linear_in_weight(generic_cfg):
    one = oracle_cocycle(WeightedCurve("gd", 1.0), generic_cfg)
    three = oracle_cocycle(WeightedCurve("gd", 3.0), generic_cfg)
    assert_allclose(three.on_gamma, 3 * one.on_gamma)
    assert oracle_cocycle(WeightedCurve("gd", 0.0), generic_cfg).norm() == 0


def test_crossing_count(generic_cfg):
    assert crossing_count("g", "d", generic_cfg) == 1
    assert crossing_count("d", "g", generic_cfg) == 1
    assert crossing_count("g", "g", generic_cfg) == 0


def test_bound_too_small(generic_cfg):
    with pytest.raises(BoundTooSmall):
        cocycle.crossing_cocycle_oracle(WeightedCurve("g", 1.0), "d", generic_cfg, word_bound=0)


def test_base_point_on_axis(generic_cfg):
    with pytest.raises(BasePointOnAxis):
        cocycle.crossing_normals("g", "d", generic_cfg, base=vec(1, 0, 0))


def test_identity_has_no_axis(generic_cfg):
    with pytest.raises(GeometryError):
        cocycle.conjugate_axes("gG", generic_cfg)


def test_weighted_curve_validation():
    with pytest.raises(GeometryError):
        WeightedCurve("g", -1.0)
    with pytest.raises(words.WordError):
        WeightedCurve("gx", 1.0)


def test_multicurve_length(generic_cfg):
    curves = [WeightedCurve("g", 2.0), WeightedCurve("d", 1.0), WeightedCurve("gd", 0.0)]
    assert multicurve_length(curves, generic_cfg) == pytest.approx(6.0, rel=1e-12)
    assert cocycle.curve_length("dgD", generic_cfg) == pytest.approx(2.0, rel=1e-12)


def test_word_table(generic_cfg):
    table = generic_cfg.table
    assert len(table) == 1457
    index = table.words.index("gdG")
    assert_allclose(table.matrices[index], matrix_of("gdG", generic_cfg).m, rtol=1e-12, atol=1e-12)
    assert_allclose(axis(matrix_of("g", generic_cfg)), [0, 0, 1])
    assert table.words == list(words.reduced_words(6))
    assert all(len(w) == n for w, n in zip(table.words, table.lengths))


@pytest.mark.parametrize("name", sorted(cocycle.CURVE_WORDS))
def test_base_point_change_is_a_coboundary(generic_cfg, name):
    moved = with_base_point(generic_cfg, hyperboloid_point(0.37, 2.1))
    curve = WeightedCurve(cocycle.CURVE_WORDS[name], 1.0)
    here = oracle_cocycle(curve, generic_cfg)
    there = oracle_cocycle(curve, moved)
    assert class_difference(here, there, generic_cfg).kind == cocycle.COBOUNDARY
