# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    step.py
# @author  lamsum developers
# @date    2026-10-18
"""
Helper functions for single steps of a sum run.
"""
import traceback
from datetime import datetime

from . import setting
from .minkowski import GeometryError


def _checkOutput(lastTime, failed):
    """Prints the status and the total time of a step."""
    print("step#%s" % setting.step, end=' ')
    print("failed," if failed else "ok,")
    print("...needed %s" % (datetime.now() - lastTime))
    setting.step += 1
    print("- " * 39)


def _describe(arg):
    if isinstance(arg, float):
        return "%.17g" % arg
    text = repr(arg)
    return text if len(text) < 60 else type(arg).__name__


def pythonStep(comment, function, args):
    """Executes a step which is a python function call; exceptions are re-raised."""
    lastTime = datetime.now()
    print("step#%s" % setting.step)
    print(" (%s)" % comment)
    print(" Call: %s(%s)" % (function.__name__, ", ".join(_describe(a) for a in args)))
    try:
        result = function(*args)
    except (GeometryError, ValueError) as e:
        print("Error! %s: %s" % (type(e).__name__, e))
        _checkOutput(lastTime, True)
        raise
    except:
        print("Exception caught!")
        traceback.print_exc()
        _checkOutput(lastTime, True)
        raise
    _checkOutput(lastTime, False)
    return result
