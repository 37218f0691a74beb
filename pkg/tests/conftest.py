# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    conftest.py
# @author  lamsum developers
# @date    2026-10-18
import math
import os

import pytest
from hypothesis import strategies as st

from lamsum import setting, sumEngine, torusSetup

RIGHT = math.pi / 2
REPO_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_CONFIG = os.path.join(REPO_DIR, "default.cfg")

# every combination has sin(theta) sh(l/2) sh(m/2) > 1
LENGTHS = [2.5, 3.0, 3.5, 4.0, 4.5]
ANGLES = [0.7, 0.9, 1.1, 1.3, 1.5]
generic_triples = st.tuples(st.sampled_from(LENGTHS), st.sampled_from(LENGTHS), st.sampled_from(ANGLES))
# shorter curves for comparisons against long matrix products
small_triples = st.tuples(st.sampled_from([2.0, 2.5, 3.0]), st.sampled_from([2.0, 2.5, 3.0]),
                          st.sampled_from([0.9, 1.1, 1.3, 1.5]))


@pytest.fixture(scope="session")
def right_cfg():
    return torusSetup.build_config(2.0, 2.0, RIGHT, 1.0, 1.0)


@pytest.fixture(scope="session")
def generic_cfg():
    return torusSetup.build_config(2.0, 2.0, 1.0, 1.0, 0.3)


@pytest.fixture(scope="session")
def skew_cfg():
    return torusSetup.build_config(3.0, 2.5, 1.2, 2.0, 1.0)


@pytest.fixture(scope="session")
def swapped_cfg():
    return torusSetup.build_config(2.0, 3.0, RIGHT, 0.1, 1.0)


@pytest.fixture(autouse=True)
def fresh_setting():
    setting.init()
    setting.step = 1
    yield
    setting.init()
    sumEngine.VERBOSE = False
