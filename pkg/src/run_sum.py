#!/usr/bin/env python
# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    run_sum.py
# @author  lamsum developers
# @date    2026-10-18

"""
Launcher for lamsum with the repository's default.cfg.
"""
import os
import sys

from lamsum.main import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:], os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "default.cfg")))
