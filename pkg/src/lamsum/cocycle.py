# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    cocycle.py
# @author  lamsum developers
# @date    2026-10-18
"""
Cocycles of the free group F(gamma, delta) with values in Minkowski space.

A cocycle satisfies tau(xy) = tau(x) + x tau(y) and is stored by its values
on the two generators. The cocycle of a weighted multicurve is the sum of
the unit normals of the lifts crossing the segment [p0, beta p0]; the
crossing oracle below computes it by brute force over conjugate axes and is
the independent check for the closed-form table of the sum system.
"""
from dataclasses import dataclass

import numpy as np

from . import words
from .isometry import axis, identity, translation_length
from .minkowski import Degenerate, GeometryError, TAU_CLASS

TAU_CLS = 1e-8
DEFAULT_WORD_BOUND = 6

CURVE_C = "C"
CURVE_D = "D"
CURVE_ALPHA = "Alpha"
CURVE_DELTA_GAMMA = "DeltaGamma"
CURVE_WORDS = {
    CURVE_C: "g",
    CURVE_D: "d",
    CURVE_ALPHA: words.commutator_word("g", "d"),
    CURVE_DELTA_GAMMA: "dg",
}

COBOUNDARY = "Coboundary"
DISTINCT = "Distinct"


class BasePointOnAxis(Degenerate):
    pass


class BoundTooSmall(GeometryError):
    pass


@dataclass(frozen=True, eq=False)
class GeneratorCocycle:
    on_gamma: np.ndarray
    on_delta: np.ndarray

    @classmethod
    def zero(cls):
        return cls(np.zeros(3), np.zeros(3))

    def __add__(self, other):
        return GeneratorCocycle(self.on_gamma + other.on_gamma, self.on_delta + other.on_delta)

    def __sub__(self, other):
        return GeneratorCocycle(self.on_gamma - other.on_gamma, self.on_delta - other.on_delta)

    def __neg__(self):
        return GeneratorCocycle(-self.on_gamma, -self.on_delta)

    def __mul__(self, weight):
        return GeneratorCocycle(weight * self.on_gamma, weight * self.on_delta)

    __rmul__ = __mul__

    def norm(self):
        return float(max(np.max(np.abs(self.on_gamma)), np.max(np.abs(self.on_delta))))

    def __repr__(self):
        return "GeneratorCocycle(gamma=%s, delta=%s)" % (self.on_gamma, self.on_delta)


@dataclass(frozen=True)
class WeightedCurve:
    word: str
    weight: float

    def __post_init__(self):
        words.check_word(self.word)
        if not self.weight >= 0:
            raise GeometryError("weight of %r must be non-negative, got %s" % (self.word, self.weight))


class WordTable:
    """Matrices of all reduced words up to a length bound, in enumeration order."""

    def __init__(self, generators, bound):
        self.bound = bound
        self.words = list(words.reduced_words(bound))
        self.matrices = np.empty((words.count_reduced_words(bound), 3, 3))
        index = {}
        for i, word in enumerate(self.words):
            index[word] = i
            # the prefix of a reduced word is enumerated before the word
            self.matrices[i] = self.matrices[index[word[:-1]]] @ generators[word[-1]] if word else np.eye(3)
        self.lengths = np.array([len(w) for w in self.words])

    def __len__(self):
        return len(self.words)


def generator_matrices(gamma, delta):
    return {"g": gamma.m, "G": gamma.inverse().m, "d": delta.m, "D": delta.inverse().m}


def matrix_of(word, cfg):
    """The isometry named by a word, as a left to right product."""
    result = identity()
    gens = cfg.generators
    for letter in words.check_word(word):
        result = result @ gens[letter]
    return result


def _letter_value(tau, letter, cfg):
    if letter == "g":
        return tau.on_gamma
    if letter == "d":
        return tau.on_delta
    if letter == "G":
        return -(cfg.generators["G"] @ tau.on_gamma)
    return -(cfg.generators["D"] @ tau.on_delta)


def evaluate(tau, word, cfg):
    """Left fold of the cocycle rule over the letters of word."""
    value = np.zeros(3)
    prefix = np.eye(3)
    gens = cfg.generators
    for letter in words.check_word(word):
        value = value + prefix @ _letter_value(tau, letter, cfg)
        prefix = prefix @ gens[letter].m
    return value


def coboundary(w, cfg):
    w = np.asarray(w, dtype=float)
    return GeneratorCocycle(cfg.gamma @ w - w, cfg.delta @ w - w)


def curve_cocycle_table(cfg, which):
    """Unit-weight cocycle of C, D, the boundary curve or C_(delta gamma).

    Values hold for a base point beyond the boundary axis A_alpha and a
    positively oriented generator pair; a negatively oriented pair flips
    every sign.
    """
    gamma, delta = cfg.gamma, cfg.delta
    sign = cfg.orientation
    if which == CURVE_C:
        tau = GeneratorCocycle(np.zeros(3), axis(gamma))
    elif which == CURVE_D:
        tau = GeneratorCocycle(-axis(delta), np.zeros(3))
    elif which == CURVE_ALPHA:
        xa = axis(cfg.alpha)
        tau = GeneratorCocycle(xa - gamma @ xa, xa - delta @ xa)
    elif which == CURVE_DELTA_GAMMA:
        xdg = axis(delta @ gamma)
        tau = GeneratorCocycle(-(gamma @ xdg), xdg)
    else:
        raise ValueError("unknown curve %r" % which)
    return sign * tau


@dataclass(frozen=True, eq=False)
class ClassDifference:
    kind: str
    w: np.ndarray
    residual: float

    @property
    def is_coboundary(self):
        return self.kind == COBOUNDARY


def class_difference(t1, t2, cfg):
    """Least squares solution of (gamma-1)w = t2(gamma)-t1(gamma), (delta-1)w = t2(delta)-t1(delta)."""
    lhs = np.vstack([cfg.gamma.m - np.eye(3), cfg.delta.m - np.eye(3)])
    rhs = np.concatenate([t2.on_gamma - t1.on_gamma, t2.on_delta - t1.on_delta])
    w = np.linalg.lstsq(lhs, rhs, rcond=None)[0]
    residual = float(np.max(np.abs(lhs @ w - rhs)))
    scale = max(t1.norm(), t2.norm())
    if residual <= TAU_CLS * scale:
        return ClassDifference(COBOUNDARY, w, residual)
    return ClassDifference(DISTINCT, w, residual)


def _table_for(cfg, word_bound):
    if word_bound == cfg.table.bound:
        return cfg.table
    return WordTable(cfg.generator_arrays, word_bound)


def conjugate_axes(eta, cfg, word_bound=None):
    """Dual vectors of the axes of all conjugates w eta' w^-1, |w| <= word_bound.

    eta' runs over the cyclic rotations of the cyclically reduced form of
    eta. Returns a list of (rotation, vectors) with one row of vectors per
    entry of the word table.
    """
    table = _table_for(cfg, cfg.word_bound if word_bound is None else word_bound)
    _, core = words.cyclic_reduce(eta)
    if not core:
        raise GeometryError("the identity has no axis")
    coreAxis = axis(matrix_of(core, cfg))
    result = []
    for prefix, rotation in words.cyclic_rotations(core):
        rotationAxis = matrix_of(words.inverse(prefix), cfg) @ coreAxis
        result.append((rotation, np.einsum("nij,j->ni", table.matrices, rotationAxis)))
    return table, result


def _forms(vectors, p):
    return -vectors[:, 0] * p[0] + vectors[:, 1] * p[1] + vectors[:, 2] * p[2]


def crossing_normals(eta, target, cfg, word_bound=None, base=None):
    """Oriented unit normals of the lifts of C_eta crossing [p0, beta p0].

    Returns a list of (conjugate word, normal, |w|) with one entry per
    distinct lift, the normal oriented from p0 towards beta p0.
    """
    p = cfg.p0 if base is None else np.asarray(base, dtype=float)
    q = matrix_of(target, cfg) @ p
    table, axes = conjugate_axes(eta, cfg, word_bound)
    pointScale = max(1.0, float(np.max(np.abs(p))), float(np.max(np.abs(q))))
    found = {}
    for rotation, vectors in axes:
        fp = _forms(vectors, p)
        fq = _forms(vectors, q)
        tol = TAU_CLASS * pointScale * np.maximum(1.0, np.max(np.abs(vectors), axis=1))
        onAxis = (np.abs(fp) < tol) | (np.abs(fq) < tol)
        if np.any(onAxis):
            index = int(np.flatnonzero(onAxis)[0])
            raise BasePointOnAxis("segment endpoint on the axis of %s" %
                                  words.multiply(table.words[index], rotation, words.inverse(table.words[index])))
        for index in np.flatnonzero(fp * fq < 0):
            conj = words.multiply(table.words[index], rotation, words.inverse(table.words[index]))
            depth = int(table.lengths[index])
            if conj in found and found[conj][1] <= depth:
                continue
            normal = vectors[index] if fp[index] < 0 else -vectors[index]
            found[conj] = (normal, depth)
    return [(conj, normal, depth) for conj, (normal, depth) in sorted(found.items())]


def crossing_cocycle_oracle(curve, target, cfg, word_bound=None, base=None, strict=True):
    """Cocycle value of a weighted curve on target, by enumeration of crossings."""
    bound = cfg.word_bound if word_bound is None else word_bound
    if curve.weight == 0 or not target:
        return np.zeros(3)
    normals = crossing_normals(curve.word, target, cfg, bound, base)
    if strict and any(depth >= bound for _, _, depth in normals):
        raise BoundTooSmall("a lift of %s crossing [p0, %s p0] was found at the word bound %s" %
                            (curve.word, target, bound))
    total = np.zeros(3)
    for _, normal, _ in normals:
        total = total + normal
    return curve.weight * total


def crossing_count(curve_word, target, cfg, word_bound=None, base=None):
    return len(crossing_normals(curve_word, target, cfg, word_bound, base))


def oracle_cocycle(curve, cfg, word_bound=None, base=None):
    return GeneratorCocycle(crossing_cocycle_oracle(curve, "g", cfg, word_bound, base),
                            crossing_cocycle_oracle(curve, "d", cfg, word_bound, base))


def curve_length(word, cfg):
    _, core = words.cyclic_reduce(word)
    return translation_length(matrix_of(core, cfg))


def multicurve_length(curves, cfg):
    """Length of a weighted multicurve: the weighted sum of translation lengths."""
    return sum(curve.weight * curve_length(curve.word, cfg) for curve in curves if curve.weight > 0)
