# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    report.py
# @author  lamsum developers
# @date    2026-10-18
"""
The run report: a plain dict written as JSON, and an SVG drawing of the
axes of every recursion step in the Poincare disk.

JSON output is deterministic: keys are sorted and floats are written with
the shortest repr that round-trips. SVG output is deterministic for a
fixed matplotlib version.
"""
import io
import json
import math

import matplotlib.patches as Patch
import matplotlib.pyplot as plt

from . import VERSION, cocycle, sumEngine, tools
from .isometry import axis
from .minkowski import geodesic_circle, ideal_endpoints

# axes of longer curves hug the boundary circle and lose precision
SVG_AXIS_MAX_LENGTH = 60.0
SVG_INCHES = 6
SVG_MARGIN = 1.05


def _axisOf(word, length, cfg):
    if not word or length is None or length > SVG_AXIS_MAX_LENGTH:
        return None
    return tools.toList(axis(cocycle.matrix_of(word, cfg)))


def _stateEntry(state, cfg):
    return {
        "k": state.k,
        "branch": state.branch,
        "gamma_word": state.gamma_word,
        "delta_word": state.delta_word,
        "len_gamma": state.len_gamma,
        "len_delta": state.len_delta,
        "theta": state.theta,
        "orientation": state.orientation,
        "a": state.a,
        "c": state.c,
        "d": state.d,
        "r": state.r,
        "intersection": state.intersection,
        "residual": state.residual,
        "b_spread": state.b_spread,
        "commutator_trace": state.commutator_trace,
        "kappa": state.kappa,
        "axis_gamma": _axisOf(state.gamma_word, state.len_gamma, cfg),
        "axis_delta": _axisOf(state.delta_word, state.len_delta, cfg),
    }


def build_report(cfg, dec, tol=None, max_iter=None, oracle=None):
    """Collects configuration, trace, decomposition and checks of one run."""
    checks = sumEngine.invariant_checks(dec, cfg, sumEngine.TAU_WEIGHT_REL if tol is None else tol)
    return {
        "tool": "lamsum",
        "version": VERSION,
        "config": {
            "l": cfg.l, "m": cfg.m, "theta": cfg.theta, "c": cfg.c, "d": cfg.d,
            "swapped": cfg.swapped,
            "orientation": cfg.orientation,
            "tol": sumEngine.TAU_WEIGHT_REL if tol is None else tol,
            "max_iter": sumEngine.DEFAULT_MAX_ITER if max_iter is None else max_iter,
            "word_bound": cfg.word_bound,
            "base_point": tools.toList(cfg.p0),
        },
        "axes": {
            "gamma": tools.toList(axis(cfg.gamma)),
            "delta": tools.toList(axis(cfg.delta)),
            "alpha": tools.toList(axis(cfg.alpha)),
        },
        "alpha_word": sumEngine.ALPHA_WORD,
        "stop": {"kind": dec.stop.kind, "step": dec.stop.step, "reason": dec.stop.reason},
        "components": [{"word": curve.word, "input_word": cfg.input_word(curve.word), "weight": curve.weight}
                       for curve in dec.components],
        "tail": dec.tail,
        "trace": [_stateEntry(state, cfg) for state in dec.trace],
        "verification": {
            "bound": sumEngine.verify_decomposition(dec, cfg),
            "steps": [{"k": k, "residual": residual, "growth": growth, "contribution": contribution}
                      for k, residual, growth, contribution in sumEngine.residual_ledger(dec)],
            "cocycle_defect": sumEngine.cocycle_defect(dec, cfg),
        },
        "invariants": checks,
        "oracle": oracle,
    }


@tools.benchmark
def oracle_section(dec, cfg, word_bound):
    """Oracle based checks of the first split and of the crossing ledger at k = 0.

    The defect is recomputed with one more letter; crossing lifts just past
    word_bound are invisible to the first pass, so a changed defect or a
    BoundTooSmall there marks the result unstable.
    """
    k = min(1, len(dec.trace) - 1)
    defect = sumEngine.oracle_defect(dec, cfg, k, word_bound)
    try:
        wider = sumEngine.oracle_defect(dec, cfg, k, word_bound + 1)
    except cocycle.BoundTooSmall:
        wider = None
    return {
        "word_bound": word_bound,
        "k": k,
        "defect": defect,
        "defect_wider": wider,
        "stable": wider is not None and abs(wider - defect) <= cocycle.TAU_CLS * (cfg.c + cfg.d),
        "compactness": list(sumEngine.compactness_ledger(dec, cfg, 0, word_bound)),
    }


def to_json(report):
    return json.dumps(report, indent=1, sort_keys=True, allow_nan=False) + "\n"


def write_json(report, filename):
    with open(filename, "w") as f:
        f.write(to_json(report))


def geodesic_shape(n):
    """Geometry of the geodesic dual to n in the unit disk.

    Returns ("line", e1, e2) for a diameter and ("arc", center, radius,
    theta1, theta2) otherwise, the arc running counterclockwise from theta1
    to theta2 (degrees) through the inside of the disk.
    """
    e1, e2 = ideal_endpoints(n)
    circle = geodesic_circle(n)
    if circle is None:
        return "line", e1, e2
    center, radius = circle
    a1 = math.degrees(math.atan2(e1[1] - center[1], e1[0] - center[0]))
    a2 = math.degrees(math.atan2(e2[1] - center[1], e2[0] - center[0]))
    # the inner arc spans less than a half turn
    span = (a2 - a1) % 360.0
    if span <= 180.0:
        return "arc", center, radius, a1, a1 + span
    return "arc", center, radius, a2, a2 + 360.0 - span


def _drawGeodesic(ax, n, color, width, gid):
    shape = geodesic_shape(n)
    if shape[0] == "line":
        _, e1, e2 = shape
        artist, = ax.plot([e1[0], e2[0]], [e1[1], e2[1]], color=color, linewidth=width)
    else:
        _, center, radius, theta1, theta2 = shape
        artist = ax.add_patch(Patch.Arc(tuple(center), 2 * radius, 2 * radius, theta1=theta1, theta2=theta2,
                                        color=color, linewidth=width))
    artist.set_gid(gid)
    return artist


def render_svg(report):
    """The unit disk with the boundary axis in black and the axes of each step colored by step."""
    plt.rcParams["svg.hashsalt"] = "lamsum"
    fig, ax = plt.subplots(figsize=(SVG_INCHES, SVG_INCHES))
    ax.add_patch(Patch.Circle((0, 0), 1.0, fill=False, color="#000000", linewidth=1.0))
    _drawGeodesic(ax, report["axes"]["alpha"], "#000000", 2.0, "alpha")
    trace = report["trace"]
    for entry in trace:
        color = tools.stepColor(entry["k"], len(trace))
        for key, name in (("axis_gamma", "gamma"), ("axis_delta", "delta")):
            if entry[key] is not None:
                _drawGeodesic(ax, entry[key], color, 1.5, "step-%s-%s" % (entry["k"], name))
    ax.set_xlim(-SVG_MARGIN, SVG_MARGIN)
    ax.set_ylim(-SVG_MARGIN, SVG_MARGIN)
    ax.set_aspect("equal")
    ax.axis("off")
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def write_svg(report, filename):
    with open(filename, "w") as f:
        f.write(render_svg(report))
