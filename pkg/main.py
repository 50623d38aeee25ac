#!/usr/bin/env python3
"""
Max-Algebra Toolkit - Main Entry Point
Command line front end: stochasticity checks, spectral data, majorization
witnesses and regions, extreme points and brute-force oracles
"""

import argparse
import logging
import sys

import numpy as np

from algebra_config import AlgebraConfig
from errors import ClassificationError, MaxAlgebraError, NotMajorizedError
from logger_config import log_system_info, set_console_level, setup_logger
from matrix_io import (
    Verdict,
    dumps,
    load_matrix,
    load_vector,
    matrix_document,
    region_csv,
)
import extreme
import majorization
import oracles
import spectral
import stochastic

# Setup logging
logger = setup_logger()

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_ERROR = 2

CHECK_KINDS = ("row", "column", "doubly", "unital", "trace")


class UsageError(MaxAlgebraError):
    """The arguments are well-formed but cannot be combined"""


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help="comparison tolerance (default 1e-9 or $MAXALG_TOLERANCE)")
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS,
                        help="output format; csv is only available for region data")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized helpers")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="log progress to stderr")
    return common


def build_parser():
    """Argument parser with one verb per library capability"""
    common = _common_options()
    parser = argparse.ArgumentParser(prog="maxalg", parents=[common],
                                     description="Max-times linear algebra toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    def matrix_argument(p):
        p.add_argument("matrix", help="matrix file (text or JSON), '-' for stdin")
        p.add_argument("--input-format", choices=("auto", "json", "text"), default="auto")

    check = commands.add_parser("check", parents=[common], help="stochasticity predicates")
    check.add_argument("--kind", choices=CHECK_KINDS, default="doubly")
    matrix_argument(check)

    spec = commands.add_parser("spectral", parents=[common], help="radius, norm, local radii")
    matrix_argument(spec)
    spec.add_argument("--x", help="vector for a local spectral radius, e.g. 1,0,0")

    generate = commands.add_parser("generate", parents=[common], help="random max-doubly stochastic matrix")
    generate.add_argument("n", type=int)
    generate.add_argument("--density", type=float, default=0.5)

    major = commands.add_parser("majorize", parents=[common], help="max-majorization")
    major_commands = major.add_subparsers(dest="action", required=True)
    for name in ("check", "witness"):
        p = major_commands.add_parser(name, parents=[common])
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)
    hull = major_commands.add_parser("hull", parents=[common])
    hull.add_argument("--y", required=True)
    hull.add_argument("--x", help="also report hull coefficients for this vector")
    region = major_commands.add_parser("region", parents=[common])
    region.add_argument("--y", required=True)
    region.add_argument("--step", type=float)
    region.add_argument("--lo", type=float)
    region.add_argument("--hi", type=float)

    ext = commands.add_parser("extreme", parents=[common], help="max-extreme points of MDS_n")
    ext_commands = ext.add_subparsers(dest="action", required=True)
    matrix_argument(ext_commands.add_parser("check", parents=[common]))
    ext_commands.add_parser("enumerate", parents=[common]).add_argument("n", type=int)
    matrix_argument(ext_commands.add_parser("decompose", parents=[common]))

    orc = commands.add_parser("oracle", parents=[common], help="brute-force reference answers")
    orc_commands = orc.add_subparsers(dest="action", required=True)
    matrix_argument(orc_commands.add_parser("cycle", parents=[common]))
    orc_commands.add_parser("extreme", parents=[common]).add_argument("n", type=int)
    orc_major = orc_commands.add_parser("majorize", parents=[common])
    orc_major.add_argument("--x", required=True)
    orc_major.add_argument("--y", required=True)

    return parser


class MaxAlgebraCLI:
    def __init__(self, args, out=None):
        """Bind parsed arguments to an effective configuration"""
        self.args = args
        self.out = out or sys.stdout
        self.config = AlgebraConfig(
            tolerance=getattr(args, "tolerance", None),
            seed=getattr(args, "seed", None),
        )
        self.output_format = getattr(args, "format", "json")

    def run(self):
        """Validate configuration, dispatch the subcommand and return its exit code"""
        if not self.config.validate():
            raise UsageError("invalid configuration")
        self.tol = self.config.tolerance_policy()
        self.config.log_config()

        handler = getattr(self, f"cmd_{self.args.command}")
        if self.output_format == "csv" and not (
                self.args.command == "majorize" and self.args.action == "region"):
            raise UsageError("--format csv is only available for 'majorize region'")
        return handler()

    # --- output helpers --------------------------------------------------

    def emit(self, payload):
        self.out.write(dumps(payload) + "\n")

    def verdict(self, predicate, holds, details):
        self.emit(Verdict(predicate, holds, details).as_dict())
        return EXIT_HOLDS if holds else EXIT_FAILS

    def matrix(self):
        return load_matrix(self.args.matrix, self.args.input_format)

    # --- subcommands -----------------------------------------------------

    def cmd_check(self):
        A = self.matrix()
        kind = self.args.kind
        if kind in ("row", "column", "doubly"):
            result = stochastic.classify(A, self.tol)
            axes = {"row": ("row",), "column": ("column",), "doubly": ("row", "column")}[kind]
            holds = {"row": result.row, "column": result.column, "doubly": result.doubly}[kind]
            violations = [v.as_dict() for v in result.violations if v.axis.value in axes]
            return self.verdict(f"max-{kind} stochastic", holds, {"violations": violations})
        if kind == "unital":
            product = A.data.max(axis=1).tolist()
            holds = stochastic.is_unital_preserving(A, self.tol)
            return self.verdict("max-unital preserving", holds, {"product": product})
        column_maxima = A.data.max(axis=0, initial=0.0).tolist()
        holds = stochastic.is_trace_preserving(A, self.tol)
        return self.verdict("max-trace preserving", holds, {"column_maxima": column_maxima})

    def cmd_spectral(self):
        A = self.matrix()
        payload = spectral.analyze(A).as_dict()
        if self.args.x:
            payload["local_radius"] = spectral.local_spectral_radius(A, load_vector(self.args.x))
        self.emit(payload)
        return EXIT_HOLDS

    def cmd_generate(self):
        D = stochastic.random_mds(self.args.n, self.config.seed, self.args.density)
        self.emit(matrix_document(D))
        return EXIT_HOLDS

    def cmd_majorize(self):
        return getattr(self, f"majorize_{self.args.action}")()

    def _pair(self):
        return load_vector(self.args.x), load_vector(self.args.y)

    def majorize_check(self):
        x, y = self._pair()
        holds = majorization.majorizes_check(x, y, self.tol)
        details = {
            "max_x": float(np.max(x.data)), "max_y": float(np.max(y.data)),
            "min_x": float(np.min(x.data)), "min_y": float(np.min(y.data)),
        }
        return self.verdict("x max-majorized by y", holds, details)

    def majorize_witness(self):
        x, y = self._pair()
        try:
            w = majorization.witness(x, y, self.tol)
        except NotMajorizedError as e:
            return self.verdict("x max-majorized by y", False, {"reason": str(e)})
        self.emit({"witness": w.as_dict(), "verified": w.certifies(x, y, self.tol)})
        return EXIT_HOLDS

    def majorize_hull(self):
        y = load_vector(self.args.y)
        payload = majorization.hull(y).as_dict()
        code = EXIT_HOLDS
        if self.args.x:
            coefficients = majorization.hull_membership(load_vector(self.args.x), y, self.tol)
            payload["coefficients"] = list(coefficients) if coefficients is not None else None
            code = EXIT_HOLDS if coefficients is not None else EXIT_FAILS
        self.emit(payload)
        return code

    def majorize_region(self):
        y = load_vector(self.args.y)
        needs_default = self.args.step is None or self.args.lo is None or self.args.hi is None
        default_step, default_bounds = (
            majorization.default_region_window(y) if needs_default else (None, None))
        step = self.args.step if self.args.step is not None else default_step
        lo = self.args.lo if self.args.lo is not None else default_bounds[0][0]
        hi = self.args.hi if self.args.hi is not None else default_bounds[0][1]
        sample = majorization.region_sample(y, step, [(lo, hi)] * y.dim, self.tol)
        if self.output_format == "csv":
            self.out.write(region_csv(sample))
        else:
            self.emit({
                "y": y.to_lists(),
                "step": sample.step,
                "bounds": [list(b) for b in sample.bounds],
                "points": [p.to_lists() for p in sample.grid_points],
                "inside": [int(label) for label in sample.labels],
            })
        return EXIT_HOLDS

    def cmd_extreme(self):
        return getattr(self, f"extreme_{self.args.action}")()

    def _not_extreme_details(self, A):
        result = stochastic.classify(A, self.tol)
        if not result.doubly:
            return {"reason": "not max-doubly stochastic",
                    "violations": [v.as_dict() for v in result.violations]}
        try:
            profile = extreme.singleton_profile(A, self.tol)
        except ClassificationError as e:
            details = {"reason": str(e)}
        else:
            non_singleton = sorted(p for p, kind in profile.items()
                                   if kind is extreme.EntryClass.NON_SINGLETON)
            details = {"non_singleton": [[i + 1, j + 1] for i, j in non_singleton]}
        pair = extreme.non_extremality_witness(A, self.tol)
        if pair is not None:
            details["witness"] = pair.as_dict()
        return details

    def extreme_check(self):
        A = self.matrix()
        holds = extreme.is_max_extreme(A, self.tol)
        return self.verdict("max-extreme point of MDS_n", holds, self._not_extreme_details(A))

    def extreme_enumerate(self):
        points = extreme.enumerate_extreme(self.args.n, self.config.extreme_bound)
        self.emit([matrix_document(E) for E in points])
        return EXIT_HOLDS

    def extreme_decompose(self):
        A = self.matrix()
        if not extreme.is_max_extreme(A, self.tol):
            return self.verdict("max-extreme point of MDS_n", False, self._not_extreme_details(A))
        self.emit(extreme.decompose_extreme(A, self.tol).as_dict())
        return EXIT_HOLDS

    def cmd_oracle(self):
        budget = self.config.oracle_budget()
        action = self.args.action
        if action == "cycle":
            self.emit({"radius": oracles.brute_cycle_radius(self.matrix(), budget)})
            return EXIT_HOLDS
        if action == "extreme":
            self.emit([matrix_document(E) for E in oracles.brute_extreme_points(self.args.n, budget)])
            return EXIT_HOLDS
        x, y = self._pair()
        found = oracles.brute_majorization_witness(x, y, self.tol, budget)
        if found is None:
            return self.verdict("MDS witness exists", False, {"reason": "no candidate matrix maps y to x"})
        self.emit({"witness": found.to_lists()})
        return EXIT_HOLDS


def main(argv=None):
    """Main entry point; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    if getattr(args, "verbose", False):
        set_console_level(logging.INFO)
        log_system_info()

    try:
        return MaxAlgebraCLI(args).run()
    except MaxAlgebraError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
