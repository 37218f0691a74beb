# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    main.py
# @author  lamsum developers
# @date    2026-10-18

"""
Main entry point: reads the configuration, runs the sum and writes the
JSON report and the SVG figure.

Exit codes: 0 success, 1 usage error, 2 invalid configuration or input,
3 numerical breakdown of the recursion.
"""

import optparse
import sys

from . import VERSION, cocycle, report, setting, step, sumEngine, tools, torusSetup
from .minkowski import GeometryError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_BREAKDOWN = 3

TORUS_FIELDS = ("l", "m", "theta", "c", "d")


class UsageError(Exception):
    pass


class _OptionParser(optparse.OptionParser):
    def error(self, msg):
        raise UsageError(msg)


def _parser():
    optParser = _OptionParser(usage="%prog [options]", version=VERSION)
    optParser.add_option("-c", "--confFile", dest="confFile", type="string",
                         help="INI or JSON config FILE on top of the defaults", metavar="FILE")
    optParser.add_option("-p", "--profile", dest="profile", type="string",
                         help="select option.PROFILE overrides of the config")
    for name in TORUS_FIELDS:
        optParser.add_option("--" + name, dest=name, type="float", help="torus parameter %s" % name)
    optParser.add_option("--tol", dest="tol", type="float", help="relative weight tolerance")
    optParser.add_option("--max-iter", dest="max_iter", type="int", help="maximal number of splittings")
    optParser.add_option("--word-bound", dest="word_bound", type="int",
                         help="word length bound for the base point clearance")
    optParser.add_option("--oracle-bound", dest="oracle_bound", type="int",
                         help="run the crossing oracle up to this word length (0 disables it)")
    optParser.add_option("--json", dest="json", help="write the report to FILE", metavar="FILE")
    optParser.add_option("--svg", dest="svg", help="write the disk figure to FILE", metavar="FILE")
    optParser.add_option("-v", "--verbose", dest="verbose", action="store_true", default=False,
                         help="print every step of the recursion")
    optParser.add_option("-l", "--log", dest="log", help="write log to FILE", metavar="FILE")
    optParser.add_option("--grid", dest="grid", metavar="FILE",
                         help="run every 'l m theta c d' line of FILE")
    return optParser


def _init(argv, defaultConfig):
    optParser = _parser()
    (options, args) = optParser.parse_args(argv)
    if args:
        raise UsageError("invalid argument %s" % " ".join(args))
    setting.init(defaultConfig)
    if options.confFile:
        if options.confFile.endswith(".json"):
            setting.loadJson(options.confFile)
        else:
            setting.read(options.confFile)
    if options.profile:
        setting.setProfile(options.profile)
    params = {}
    for name in TORUS_FIELDS:
        value = getattr(options, name)
        params[name] = setting.getTorusOption(name) if value is None else value
    engine = {
        "tol": setting.getEngineOptionFloat("tol") if options.tol is None else options.tol,
        "max_iter": setting.getEngineOptionInt("max_iter") if options.max_iter is None else options.max_iter,
        "word_bound": setting.getEngineOptionInt("word_bound") if options.word_bound is None else options.word_bound,
        "oracle_bound": (setting.getEngineOptionInt("oracle_bound") if options.oracle_bound is None
                         else options.oracle_bound),
        "verbose": options.verbose or setting.getEngineOptionBool("verbose"),
    }
    if not engine["tol"] > 0:
        raise setting.ConfigError("tol", "must be positive, got %s" % engine["tol"])
    if engine["max_iter"] < 0:
        raise setting.ConfigError("max_iter", "must not be negative, got %s" % engine["max_iter"])
    if engine["word_bound"] < 1:
        raise setting.ConfigError("word_bound", "must be positive, got %s" % engine["word_bound"])
    for name in ("json", "svg", "log"):
        if getattr(options, name) is None:
            setattr(options, name, setting.getOutputOption(name))
    return options, params, engine


def _readGrid(filename):
    tuples = []
    with open(filename) as f:
        for lineNo, line in enumerate(f, 1):
            line = line.split("#")[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != len(TORUS_FIELDS):
                raise setting.ConfigError("grid", "line %s needs %s numbers" % (lineNo, len(TORUS_FIELDS)))
            try:
                tuples.append(dict(zip(TORUS_FIELDS, [float(x) for x in fields])))
            except ValueError:
                raise setting.ConfigError("grid", "line %s is not numeric" % lineNo)
    return tuples


def runOne(params, engine, jsonFile=None, svgFile=None):
    """Builds the configuration, runs the sum and writes the outputs; returns the exit code."""
    try:
        cfg = step.pythonStep("build torus configuration", torusSetup.build_config,
                              tuple(params[name] for name in TORUS_FIELDS) + (engine["word_bound"],))
    except GeometryError as e:
        print("Error! %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return EXIT_INVALID
    if cfg.swapped:
        tools.warn("weights violate c >= r d, the generators have been swapped")
    sumEngine.VERBOSE = engine["verbose"]
    dec = step.pythonStep("run the sum", sumEngine.run_sum, (cfg, engine["max_iter"], engine["tol"]))
    oracle = None
    if engine["oracle_bound"] > 0:
        try:
            oracle = step.pythonStep("crossing oracle", report.oracle_section,
                                     (dec, cfg, engine["oracle_bound"]))
            if not oracle["stable"]:
                tools.warn("oracle defect changes at word bound %s, raise --oracle-bound" %
                           (engine["oracle_bound"] + 1))
        except (cocycle.BoundTooSmall, cocycle.BasePointOnAxis) as e:
            tools.warn("oracle check skipped: %s" % e)
            oracle = {"word_bound": engine["oracle_bound"], "error": "%s: %s" % (type(e).__name__, e)}
    result = step.pythonStep("build report", report.build_report,
                             (cfg, dec, engine["tol"], engine["max_iter"], oracle))
    for name, check in sorted(result["invariants"].items()):
        if not check["passed"]:
            tools.warn("invariant %s failed (worst %g)" % (name, check["worst"]))
    print("stop: %s" % dec.stop)
    for curve in dec.components:
        print(" %s (input %s) weight %.17g" % (curve.word, cfg.input_word(curve.word), curve.weight))
    print("verification bound: %.17g" % result["verification"]["bound"])
    if jsonFile:
        report.write_json(result, jsonFile)
    if svgFile:
        report.write_svg(result, svgFile)
    if dec.stop.kind == sumEngine.NUMERICAL_BREAKDOWN:
        return EXIT_BREAKDOWN
    return EXIT_OK


def _run(options, params, engine):
    if not options.grid:
        return runOne(params, engine, options.json, options.svg)
    code = EXIT_OK
    for index, gridParams in enumerate(_readGrid(options.grid)):
        print("grid run %s: %s" % (index, " ".join("%s=%s" % (k, gridParams[k]) for k in TORUS_FIELDS)))
        code = max(code, runOne(gridParams, engine,
                                tools.gridName(options.json, index) if options.json else None,
                                tools.gridName(options.svg, index) if options.svg else None))
    return code


def main(argv=None, defaultConfig=None):
    """
    Parses the flags, runs and returns the exit code.
    """
    try:
        options, params, engine = _init(sys.argv[1:] if argv is None else argv, defaultConfig)
    except UsageError as e:
        print("Error! %s" % e, file=sys.stderr)
        _parser().print_help(sys.stderr)
        return EXIT_USAGE
    except setting.ConfigError as e:
        print("Error! invalid configuration field %s" % e, file=sys.stderr)
        return EXIT_INVALID
    stdout = sys.stdout
    logFile = None
    if options.log:
        logFile = open(options.log, "w")
        sys.stdout = tools.TeeFile(stdout, logFile)
        print("Log file: %s" % options.log)
    try:
        return _run(options, params, engine)
    except setting.ConfigError as e:
        print("Error! invalid configuration field %s" % e, file=sys.stderr)
        return EXIT_INVALID
    finally:
        if logFile:
            sys.stdout = stdout
            logFile.close()


if __name__ == "__main__":
    print("This is a library not meant for stand-alone execution. Call the main function from a script instead")
