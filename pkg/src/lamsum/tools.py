# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    tools.py
# @author  lamsum developers
# @date    2026-10-18
"""
Helper classes and functions for runs and reports.
"""
import os
import sys
import time

import numpy as np


class TeeFile:
    """A helper class which allows simultaneous writes to several files"""
    def __init__(self, *files):
        self.files = files
    def write(self, txt):
        """Writes the text to all files"""
        for fp in self.files:
            fp.write(txt)
    def flush(self):
        """flushes all file contents to disc"""
        for fp in self.files:
            fp.flush()
            if fp in (sys.__stdout__, sys.__stderr__):
                continue
            try:
                os.fsync(fp.fileno())
            except (OSError, ValueError):
                pass


def warn(message):
    print("Warning! %s" % message, file=sys.stderr)


# decorator for timing a function
def benchmark(func):
    def benchmark_wrapper(*args, **kwargs):
        started = time.time()
        print('function %s called' % func.__name__)
        sys.stdout.flush()
        result = func(*args, **kwargs)
        print('function %s finished after %f seconds' % (func.__name__, time.time() - started))
        sys.stdout.flush()
        return result
    benchmark_wrapper.__name__ = func.__name__
    benchmark_wrapper.__doc__ = func.__doc__
    return benchmark_wrapper


def toList(v):
    """Plain python floats for JSON output; None stays None."""
    if v is None:
        return None
    return [float(x) for x in np.asarray(v, dtype=float)]


def stepColor(k, count):
    """Blue for the first step fading to red for the last one."""
    t = k / max(1, count - 1)
    return "#%02x%02x%02x" % (int(round(220 * t)), 40, int(round(220 * (1 - t))))


def gridName(path, index):
    """<stem>_<index><ext> for grid runs."""
    stem, ext = os.path.splitext(path)
    return "%s_%s%s" % (stem, index, ext)
