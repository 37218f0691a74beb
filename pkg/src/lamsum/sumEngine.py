# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    sumEngine.py
# @author  lamsum developers
# @date    2026-10-18
"""
The sum of (C, c) and (D, d) by repeated splitting.

Each step rewrites the pair (gamma_k, delta_k) with weights (c_k, d_k),
c_k >= r_k d_k, as

    (C_k, c_k) + (D_k, d_k) = (C_alpha, a) + (C_k, c_k - r_k d_k) + (C_(gamma_k delta_k), b)

and continues with the two surviving curves. The boundary weight a
accumulates; the recursion stops once one of the two weights vanishes.

Numerics run in the canonical coordinates (l_k, m_k, theta_k) of each pair,
in which every vector of the sum system has a closed form; the words of the
pair are carried along as the source of truth for the curves.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from . import closedForms, cocycle, words
from .cocycle import WeightedCurve
from .isometry import (CROSSING, Overflow, axes_relation, axis, handedness, translation_length)
from .minkowski import GeometryError, form

TAU_WEIGHT_REL = 1e-12
TAU_RATIO_MATCH = 1e-9
TAU_RATIO = 1e-12
TAU_AXIS = 1e-9
MAX_LENGTH = 650.0
DEFAULT_MAX_ITER = 200
VERBOSE = False

ALPHA_WORD = cocycle.CURVE_WORDS[cocycle.CURVE_ALPHA]

INITIAL = "initial"
B_VANISHES = "b-vanishes"
C_EXHAUSTED = "c-exhausted"
PRODUCT_FIRST = "product-first"
PRODUCT_SECOND = "product-second"

TERMINATED_EXACT = "TerminatedExact"
MAX_ITERATIONS = "MaxIterations"
OVERFLOW = "Overflow"
NUMERICAL_BREAKDOWN = "NumericalBreakdown"


class IllConditioned(GeometryError):
    pass


class RatioMismatch(GeometryError):
    pass


class NegativeWeight(GeometryError):
    pass


class AngleCollapse(GeometryError):
    pass


@dataclass(frozen=True)
class PropSolution:
    a: float
    b: float
    residual: float
    b_spread: float
    ratio: float


def ratio(g, h):
    """form(x0(gh), x0(h)) / form(x0(gh), x0(g)) for crossing axes."""
    xgh = axis(g @ h)
    cg = form(xgh, axis(g))
    ch = form(xgh, axis(h))
    if cg < TAU_RATIO or ch < TAU_RATIO:
        raise IllConditioned("ratio undefined: form values %g, %g" % (cg, ch))
    return ch / cg


def canonical_parameters(g, h):
    """(length(g), length(h), angle, handedness) of a pair with crossing axes."""
    relation = axes_relation(g, h)
    if relation.kind != CROSSING:
        raise IllConditioned("axes are %s, not crossing" % relation.kind.lower())
    return translation_length(g), translation_length(h), relation.theta, handedness(axis(g), axis(h))


def prop_solve(g, h, c, d):
    l, m, theta, _ = canonical_parameters(g, h)
    return prop_solve_canonical(l, m, theta, c, d)


def prop_solve_canonical(l, m, theta, c, d, check_ratio=True):
    """Solves the sum system for the pair (M(l), R M(m) R^-1) and weights c = r d.

    b is computed from both projections of the system and the one with the
    larger denominator is kept; their difference is reported as b_spread.
    """
    if not d > 0:
        raise RatioMismatch("the sum system needs d > 0, got %s" % d)
    frame = closedForms.lemma_frame(l, m, theta)
    denDelta = form(frame.x_dg, frame.x_delta)
    denGamma = form(frame.x_dg, frame.x_gamma)
    if denGamma < TAU_RATIO or denDelta < TAU_RATIO:
        raise IllConditioned("ratio undefined for (%s, %s, %s)" % (l, m, theta))
    r = denDelta / denGamma
    if check_ratio and abs(c / d - r) > TAU_RATIO_MATCH * r:
        raise RatioMismatch("c/d = %.17g but r = %.17g" % (c / d, r))
    cos = form(frame.x_gamma, frame.x_delta)
    b1 = c * cos / denDelta
    b2 = d * cos / denGamma
    b = b1 if abs(denDelta) >= abs(denGamma) else b2
    a = ((c * form(frame.x_gamma, frame.x_alpha) - d * form(frame.x_delta, frame.x_alpha))
         / form(frame.one_minus_dg_x_alpha, frame.x_alpha))
    tol = TAU_WEIGHT_REL * (c + d)
    if not a > 0 or b < -tol:
        raise NegativeWeight("sum system gives a = %g, b = %g" % (a, b))
    b = max(b, 0.0)
    e1 = a * frame.one_minus_delta_x_alpha + b * frame.x_dg - c * frame.x_gamma
    e2 = a * frame.one_minus_gamma_x_alpha - b * frame.gamma_x_dg + d * frame.x_delta
    spread = abs(b1 - b2)
    residual = max(float(np.max(np.abs(e1))), float(np.max(np.abs(e2)))) + spread
    return PropSolution(a, b, residual, spread, r)


@dataclass(frozen=True)
class StepState:
    """One row of the recursion trace.

    Terminal rows (d = 0) carry no delta curve: delta_word is empty and the
    pair quantities len_delta, theta, r and commutator_trace are None.
    """
    k: int
    gamma_word: str
    delta_word: str
    len_gamma: float
    len_delta: float
    theta: float
    orientation: int
    a: float
    c: float
    d: float
    r: float
    residual: float = 0.0
    b_spread: float = 0.0
    branch: str = INITIAL
    commutator_core: str = None
    commutator_trace: float = None
    kappa: float = None

    @property
    def terminal(self):
        return not self.delta_word

    @property
    def intersection(self):
        return self.c * self.d


@dataclass(frozen=True)
class StopReason:
    kind: str
    step: int = None
    reason: str = ""

    def __str__(self):
        if self.kind == TERMINATED_EXACT:
            return "%s(%s)" % (self.kind, self.step)
        if self.reason:
            return "%s(%s)" % (self.kind, self.reason)
        return self.kind


@dataclass(frozen=True)
class SumDecomposition:
    components: list
    stop: StopReason
    trace: list
    tail: dict = field(default=None)

    @property
    def last(self):
        return self.trace[-1]


def _pair_state(k, gammaWord, deltaWord, l, m, theta, orientation, a, c, d, cfg, **kwargs):
    core = words.cyclic_reduce(words.commutator_word(gammaWord, deltaWord))[1]
    trace = cocycle.matrix_of(core, cfg).trace
    return StepState(k, gammaWord, deltaWord, l, m, theta, orientation, a, c, d,
                     closedForms.ratio(l, m, theta), commutator_core=core, commutator_trace=trace,
                     kappa=closedForms.kappa(l, m, theta), **kwargs)


def _terminal_state(k, word, length, a, c, **kwargs):
    return StepState(k, word, "", length, None, None, 0, a, c, 0.0, None, **kwargs)


def initial_state(cfg):
    if cfg.weight_delta == 0:
        return _terminal_state(0, "g", cfg.length_gamma, 0.0, cfg.weight_gamma)
    return _pair_state(0, "g", "d", cfg.length_gamma, cfg.length_delta, cfg.theta, cfg.orientation,
                       0.0, cfg.weight_gamma, cfg.weight_delta, cfg)


def recursion_step(state, cfg, tol=TAU_WEIGHT_REL):
    """One splitting of the current pair; see the module docstring."""
    tauWeight = tol * (cfg.c + cfg.d)
    if state.terminal or state.d <= tauWeight:
        raise GeometryError("step %s has no second curve to split" % state.k)
    excess = state.c - state.r * state.d
    if excess < -tauWeight:
        raise NegativeWeight("c - r d = %g at step %s" % (excess, state.k))
    excess = max(excess, 0.0)
    solution = prop_solve_canonical(state.len_gamma, state.len_delta, state.theta,
                                    state.r * state.d, state.d, check_ratio=False)
    k = state.k + 1
    a = state.a + solution.a
    diag = dict(residual=solution.residual, b_spread=solution.b_spread)
    product = words.multiply(state.gamma_word, state.delta_word)
    productLength = closedForms.product_length(state.len_gamma, state.len_delta, state.theta)
    if excess <= tauWeight:
        return _terminal_state(k, product, productLength, a, solution.b, branch=C_EXHAUSTED, **diag)
    if solution.b <= tauWeight:
        return _terminal_state(k, state.gamma_word, state.len_gamma, a, excess, branch=B_VANISHES, **diag)
    theta = closedForms.product_angles(state.len_gamma, state.len_delta, state.theta)[0]
    if theta >= state.theta + TAU_AXIS:
        raise AngleCollapse("angle grew from %.17g to %.17g at step %s" % (state.theta, theta, k))
    if productLength + state.len_gamma > MAX_LENGTH:
        raise Overflow("curve lengths %g + %g exceed %g at step %s" %
                       (productLength, state.len_gamma, MAX_LENGTH, k))
    if solution.b / excess >= closedForms.ratio(productLength, state.len_gamma, theta):
        return _pair_state(k, product, state.gamma_word, productLength, state.len_gamma, theta,
                           -state.orientation, a, solution.b, excess, cfg, branch=PRODUCT_FIRST, **diag)
    return _pair_state(k, state.gamma_word, product, state.len_gamma, productLength, theta,
                       state.orientation, a, excess, solution.b, cfg, branch=PRODUCT_SECOND, **diag)


def _components(state, tauWeight):
    result = []
    if state.a > 0:
        result.append(WeightedCurve(ALPHA_WORD, state.a))
    if state.c > tauWeight:
        result.append(WeightedCurve(state.gamma_word, state.c))
    return result


def run_sum(cfg, max_iter=DEFAULT_MAX_ITER, tol=None):
    """Runs the recursion until one weight vanishes, max_iter steps pass or numerics fail."""
    tol = TAU_WEIGHT_REL if tol is None else tol
    tauWeight = tol * (cfg.c + cfg.d)
    state = initial_state(cfg)
    trace = [state]
    while True:
        if state.terminal or state.d <= tauWeight:
            stop = StopReason(TERMINATED_EXACT, state.k)
            break
        if state.k >= max_iter:
            stop = StopReason(MAX_ITERATIONS, state.k)
            break
        try:
            state = recursion_step(state, cfg, tol)
        except Overflow as e:
            stop = StopReason(OVERFLOW, state.k, str(e))
            break
        except GeometryError as e:
            stop = StopReason(NUMERICAL_BREAKDOWN, state.k, "%s: %s" % (type(e).__name__, e))
            break
        trace.append(state)
        if VERBOSE:
            print("k=%s branch=%s a=%.17g c=%.17g d=%.17g" % (state.k, state.branch, state.a, state.c, state.d))
    if stop.kind == TERMINATED_EXACT:
        return SumDecomposition(_components(state, tauWeight), stop, trace)
    tail = {"alpha_weight": state.a, "c": state.c, "d": state.d,
            "gamma_word": state.gamma_word, "delta_word": state.delta_word}
    return SumDecomposition([], stop, trace, tail)


def residual_ledger(dec):
    """Per step (k, residual, growth factor, contribution) for verify_decomposition.

    The growth factor of step k is the longest word of the pair the system
    was solved on, in letters.
    """
    result = []
    for previous, state in zip(dec.trace, dec.trace[1:]):
        growth = max(len(previous.gamma_word), len(previous.delta_word))
        result.append((state.k, state.residual, growth, state.residual * growth))
    return result


def verify_decomposition(dec, cfg):
    return sum(entry[3] for entry in residual_ledger(dec))


def _check(passed, worst):
    return {"passed": bool(passed), "worst": float(worst)}


def _isSimpleWord(word):
    """Reduced, and its cyclic core is not a proper power."""
    core = words.cyclic_reduce(word)[1]
    return words.is_reduced(word) and words.power_root(core) == core


def invariant_checks(dec, cfg, tol=TAU_WEIGHT_REL):
    trace = dec.trace
    scale = cfg.c + cfg.d
    tauWeight = tol * scale
    pairs = [s for s in trace if not s.terminal]
    steps = list(zip(trace, trace[1:]))
    checks = {}
    growth = [b.theta - a.theta for a, b in zip(pairs, pairs[1:])]
    checks["angle_decrease"] = _check(all(g < 0 for g in growth), max(growth, default=0.0))
    gains = [b.a - a.a for a, b in steps]
    checks["alpha_weight_monotone"] = _check(all(g >= 0 for g in gains), min(gains, default=0.0))
    checks["alpha_weight_positive"] = _check(len(trace) == 1 or trace[-1].a > 0, trace[-1].a)
    excess = [(s.c - s.r * s.d) / scale for s in pairs if s.d > tauWeight]
    checks["ratio_condition"] = _check(all(e >= -tol for e in excess), min(excess, default=0.0))
    start = max(trace[0].c, trace[0].d)
    bound = max(max(s.c, s.d) for s in trace) / start
    checks["weight_bound"] = _check(bound <= 1 + 1e-12, bound)
    traces = [s.commutator_trace for s in pairs]
    drift = max(abs(t - traces[0]) / traces[0] for t in traces) if traces else 0.0
    checks["commutator_trace"] = _check(drift <= 1e-8, drift)
    alphaWords = (ALPHA_WORD, words.inverse(ALPHA_WORD))
    bad = sum(1 for s in pairs if not any(words.is_cyclic_permutation(s.commutator_core, w) for w in alphaWords))
    checks["commutator_word"] = _check(bad == 0, bad)
    kappas = [s.kappa for s in pairs]
    kDrift = max(abs(k - kappas[0]) / kappas[0] for k in kappas) if kappas else 0.0
    checks["boundary_invariant"] = _check(kDrift <= 1e-9, kDrift)
    residual = max((s.residual for s in trace), default=0.0) / scale
    checks["residual"] = _check(residual <= 1e-9, residual)
    ratios = [s.r for s in pairs]
    checks["ratio_defined"] = _check(all(r > 0 and math.isfinite(r) for r in ratios), min(ratios, default=1.0))
    drops = [b.intersection - a.intersection for a, b in steps]
    checks["intersection_decrease"] = _check(all(x <= tauWeight * scale for x in drops), max(drops, default=0.0))
    bad = sum(1 for s in trace for w in (s.gamma_word, s.delta_word) if w and not _isSimpleWord(w))
    # curves meeting once have homology classes spanning a basis
    dets = [abs(a[0] * b[1] - a[1] * b[0])
            for a, b in ((words.exponent_sums(s.gamma_word), words.exponent_sums(s.delta_word)) for s in pairs)]
    bad += sum(1 for x in dets if x != 1)
    checks["simple_words"] = _check(bad == 0, bad)
    return checks


def _oracle_sum(curves, cfg, word_bound):
    total = cocycle.GeneratorCocycle.zero()
    for curve in curves:
        if curve.weight > 0 and curve.word:
            total = total + cocycle.oracle_cocycle(curve, cfg, word_bound)
    return total


def oracle_defect(dec, cfg, k, word_bound=None):
    """Class defect of (C,c)+(D,d) against the state k decomposition, by the crossing oracle.

    Both sides are evaluated at p0 and compared up to a coboundary, since the
    cocycle of the step k sum is exact only for base points beyond the
    boundary axis of the step k pair.
    """
    state = dec.trace[k]
    lhs = _oracle_sum([WeightedCurve("g", cfg.weight_gamma), WeightedCurve("d", cfg.weight_delta)],
                      cfg, word_bound)
    rhsCurves = [WeightedCurve(ALPHA_WORD, state.a), WeightedCurve(state.gamma_word, state.c)]
    if not state.terminal:
        rhsCurves.append(WeightedCurve(state.delta_word, state.d))
    rhs = _oracle_sum(rhsCurves, cfg, word_bound)
    return cocycle.class_difference(lhs, rhs, cfg).residual


def compactness_ledger(dec, cfg, k, word_bound=None):
    """(c_k N_k, d_k M_k): weighted crossings of the delta segment by C_gamma_k and of the gamma segment by C_delta_k."""
    state = dec.trace[k]
    crossGamma = cocycle.crossing_count(state.gamma_word, "d", cfg, word_bound) if state.c > 0 else 0
    crossDelta = cocycle.crossing_count(state.delta_word, "g", cfg, word_bound) if not state.terminal else 0
    return state.c * crossGamma, state.d * crossDelta


def cocycle_defect(dec, cfg):
    """Table based check of the first split: max norm of (C,c)+(D,d) - (C_alpha,a_1) - rest."""
    if len(dec.trace) < 2:
        return 0.0
    state = dec.trace[1]
    table = {name: cocycle.curve_cocycle_table(cfg, name) for name in cocycle.CURVE_WORDS}
    lhs = cfg.weight_gamma * table[cocycle.CURVE_C] + cfg.weight_delta * table[cocycle.CURVE_D]
    rhs = state.a * table[cocycle.CURVE_ALPHA]
    for word, weight in ((state.gamma_word, state.c), (state.delta_word, state.d)):
        if word == "g":
            rhs = rhs + weight * table[cocycle.CURVE_C]
        elif word == "gd":
            rhs = rhs + weight * table[cocycle.CURVE_DELTA_GAMMA]
    return (lhs - rhs).norm()
