# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    setting.py
# @author  lamsum developers
# @date    2026-10-18
"""
Configuration interface for sum runs.

Options live in a module level ConfigParser. An option "name.<profile>"
overrides "name" while the profile is selected.
"""
import json
import math
import os
from configparser import ConfigParser, Error

DEFAULTS = {
    "Torus": {"l": "2.0", "m": "2.0", "theta": "1.5707963267948966", "c": "1.0", "d": "1.0"},
    "Engine": {"tol": "1e-12", "max_iter": "200", "oracle_bound": "0", "word_bound": "6", "verbose": "false"},
    "Output": {"json": "", "svg": "", "log": ""},
}
JSON_FIELDS = {"l": "Torus", "m": "Torus", "theta": "Torus", "c": "Torus", "d": "Torus",
               "tol": "Engine", "max_iter": "Engine", "oracle_bound": "Engine", "word_bound": "Engine"}
INT_FIELDS = ("max_iter", "oracle_bound", "word_bound")

_CONFIG = ConfigParser()

# global variables
step = 1
profile = None
configFile = None


class ConfigError(ValueError):
    def __init__(self, field, message):
        ValueError.__init__(self, "%s: %s" % (field, message))
        self.field = field


def init(filename=None):
    global configFile
    global profile
    for section in _CONFIG.sections():
        _CONFIG.remove_section(section)
    _CONFIG.read_dict(DEFAULTS)
    profile = None
    configFile = filename
    if filename:
        read(filename)


def read(filename):
    """Reads an INI file on top of the current options."""
    if not os.path.isfile(filename):
        raise ConfigError("confFile", "cannot read %s" % filename)
    try:
        with open(filename) as f:
            _CONFIG.read_file(f)
    except Error as e:
        raise ConfigError("confFile", "malformed %s (%s)" % (filename, e))


def loadJson(filename):
    """Reads a flat JSON object of torus and engine fields on top of the current options."""
    try:
        with open(filename) as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise ConfigError("confFile", "cannot read %s (%s)" % (filename, e))
    if not isinstance(data, dict):
        raise ConfigError("confFile", "%s does not hold a JSON object" % filename)
    for key, value in data.items():
        if key not in JSON_FIELDS:
            raise ConfigError(key, "unknown field")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(key, "must be a number, got %r" % (value,))
        if key in INT_FIELDS and not isinstance(value, int):
            raise ConfigError(key, "must be an integer, got %r" % (value,))
        _CONFIG.set(JSON_FIELDS[key], key, repr(value))


def _checkSubOption(section, option):
    if profile:
        subOption = option + "." + profile
        if _CONFIG.has_option(section, subOption):
            return subOption
    return option


def hasOption(section, option):
    return _CONFIG.has_option(section, _checkSubOption(section, option))


def getOption(section, option):
    if not hasOption(section, option):
        return ""
    return _CONFIG.get(section, _checkSubOption(section, option))


def getOptionInt(section, option):
    try:
        return int(getOption(section, option))
    except ValueError:
        raise ConfigError(option, "expected an integer, got %r" % getOption(section, option))


def getOptionFloat(section, option):
    value = getOption(section, option)
    try:
        result = float(value)
    except ValueError:
        raise ConfigError(option, "expected a number, got %r" % value)
    if math.isnan(result):
        raise ConfigError(option, "expected a number, got %r" % value)
    return result


def getOptionBool(section, option):
    value = getOption(section, option)
    if value.lower() not in ConfigParser.BOOLEAN_STATES:
        raise ConfigError(option, "expected a boolean, got %r" % value)
    return ConfigParser.BOOLEAN_STATES[value.lower()]


def setProfile(name):
    global profile
    profile = name


def getTorusOption(option):
    return getOptionFloat("Torus", option)


def getEngineOptionFloat(option):
    return getOptionFloat("Engine", option)


def getEngineOptionInt(option):
    return getOptionInt("Engine", option)


def getEngineOptionBool(option):
    return getOptionBool("Engine", option)


def getOutputOption(option):
    return getOption("Output", option)
