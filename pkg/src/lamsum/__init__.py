# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    __init__.py
# @author  lamsum developers
# @date    2026-10-18

VERSION = "0.1.0"
