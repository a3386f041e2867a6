""" The ``cohom1`` command line tool.

Sub-commands::

    cohom1 catalog --dim 3
    cohom1 classify subalgebra.yaml
    cohom1 orbit --action SO21 --point 0,0,1 --samples 500 --out orbit.csv
    cohom1 cohomogeneity --action AN
    cohom1 verify --suite identities

Everything written to stdout is a function of the command line and the seed
alone; logging goes to stderr.
"""
from __future__ import absolute_import, print_function

import argparse
import collections
import logging
import os
import sys

import numpy as np

from cohom1.actions import (
    DESCRIPTIONS, ActionClass, KPrime, catalog_list, make_spec, orbit_label,
    orbit_sample, principal_point,
)
from cohom1.classification import CLASSIFY_TOL, Verdict, classify
from cohom1.errors import Cohom1Error, SubalgebraFileError
from cohom1.io import PointCloud, SubalgebraFile, write_point_cloud
from cohom1.verify import SUITES, run_suite


logger = logging.getLogger(__name__)

SEED_ENV = "COHOM1_SEED"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_COHOMOGENEITY_ONE = 3
EXIT_NOT_A_SUBALGEBRA = 4
EXIT_UNWRITABLE = 5
EXIT_VERIFY_FAILED = 1

_VERDICT_EXIT_CODES = {
    Verdict.classified: EXIT_OK,
    Verdict.not_cohomogeneity_one: EXIT_NOT_COHOMOGENEITY_ONE,
    Verdict.not_a_subalgebra: EXIT_NOT_A_SUBALGEBRA,
}

_PARAMETERS = {
    ActionClass.ALambdaEll: "lambda>=0",
    ActionClass.KprimeAN: "K'=Trivial|Full|Block(m)",
}


def _format_number(value):
    return "{0:.12g}".format(value + 0.0)


def _format_row(values):
    return "[" + " ".join("{0:>16}".format(_format_number(v))
                          for v in values) + "]"


def _parse_point(text):
    try:
        return np.array([float(x) for x in text.split(",")])
    except ValueError:
        raise ValueError(
            "--point expects comma-separated reals, got {0!r}".format(text))


def _default_seed():
    value = os.environ.get(SEED_ENV, "0")
    try:
        return int(value)
    except ValueError:
        raise ValueError("{0} must be an integer, got {1!r}".format(
            SEED_ENV, value))


def _spec_from_args(ns):
    kprime = None if ns.kprime is None else KPrime.from_string(ns.kprime)
    return make_spec(ns.action, ns.dim, ns.lam, kprime)


def catalog_rows(dim):
    """ One row (name, parameters, generators, description) per action
    class on M^{dim}.
    """
    if dim < 2:
        raise ValueError(
            "Minkowski space needs dimension >= 2, got {0}".format(dim))
    counts = collections.OrderedDict()
    for spec in catalog_list(dim, lambdas=(1.0,)):
        counts.setdefault(spec.action_class, set()).add(spec.group_dim)
    rows = []
    for action_class, sizes in counts.items():
        low, high = min(sizes), max(sizes)
        generators = str(low) if low == high else "{0}-{1}".format(low, high)
        rows.append((action_class.value, _PARAMETERS.get(action_class, "-"),
                     generators, DESCRIPTIONS[action_class]))
    return rows


def cmd_catalog(ns):
    rows = catalog_rows(ns.dim)
    header = ("class", "parameters", "generators", "description")
    widths = [max(len(row[i]) for row in rows + [header]) for i in range(3)]
    template = "{0:<%d}  {1:<%d}  {2:>%d}  {3}" % tuple(widths)
    print(template.format(*header))
    for row in rows:
        print(template.format(*row))
    return EXIT_OK


def format_classification(result):
    """ The classify report, as a list of lines. """
    if not result.is_classified:
        return ["{0} (residual {1:.3e})".format(
            result.verdict.value, result.residual)]

    headline = "{0}: {1}".format(result.verdict.value,
                                 result.spec.action_class.value)
    if result.lam is not None:
        headline += " lambda={0}".format(_format_number(result.lam))
    lines = [headline]
    lines.append("representative: {0}".format(result.spec.name))
    lines.append("reflected: {0}".format("yes" if result.reflected else "no"))
    lines.append("residual: {0:.3e}".format(result.residual))
    lines.append("conjugators: {0}".format(len(result.conjugators)))
    for i, g in enumerate(result.conjugators, 1):
        lines.append("  g{0} linear:".format(i))
        lines.extend("    " + _format_row(row) for row in g.linear)
        lines.append("  g{0} translation:".format(i))
        lines.append("    " + _format_row(g.trans))
    return lines


def cmd_classify(ns):
    try:
        h = SubalgebraFile.from_yaml(ns.path).to_subalgebra()
    except SubalgebraFileError as e:
        print(e.pretty, file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print("Cannot read {0}: {1}".format(ns.path, e), file=sys.stderr)
        return EXIT_USAGE

    result = classify(h, ns.tol, ns.seed)
    for line in format_classification(result):
        print(line)
    return _VERDICT_EXIT_CODES[result.verdict]


def cmd_orbit(ns):
    spec = _spec_from_args(ns)
    p = _parse_point(ns.point)
    points = orbit_sample(spec, p, ns.samples, ns.seed)
    labels = [str(orbit_label(spec, q)) for q in points]
    cloud = PointCloud(points, labels, spec.ambient_dim)
    comment = "{0} orbit through {1}, seed {2}".format(
        spec.name, ns.point, ns.seed)
    try:
        write_point_cloud(cloud, ns.out, ns.format, comment)
    except OSError as e:
        print("Cannot write {0}: {1}".format(ns.out, e), file=sys.stderr)
        return EXIT_UNWRITABLE
    print("Wrote {0} points of the {1} orbit through {2} to {3}".format(
        len(cloud), spec.name, ns.point, ns.out))
    return EXIT_OK


def cmd_cohomogeneity(ns):
    spec = _spec_from_args(ns)
    rank, point = principal_point(spec, ns.trials, ns.seed)
    print("{0}: cohomogeneity {1}".format(
        spec.name, spec.ambient_dim - rank))
    print("principal orbit dimension {0} at {1}".format(
        rank, _format_row(point)))
    return EXIT_OK


def cmd_verify(ns):
    reports = run_suite(ns.suite, ns.seed, ns.lambdas)
    if not reports:
        print("SKIP {0}: no applicable checks".format(ns.suite))
    for report in reports:
        print(report)
    failed = sum(1 for report in reports if not report.passed)
    print("{0} checks, {1} failed".format(len(reports), failed))
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _add_action_arguments(p):
    p.add_argument("--action", required=True,
                   help="Catalog action, e.g. SO21, AN or ALambdaEll.")
    p.add_argument("--dim", type=int, default=None,
                   help="Ambient dimension n+1, needed for SOn1/KprimeAN.")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="Parameter of ALambdaEll and N1xEll.")
    p.add_argument("--kprime", default=None,
                   help="K' of KprimeAN: Trivial, Full or Block(m).")


def build_parser(seed):
    p = argparse.ArgumentParser(prog="cohom1")
    p.add_argument("-d", "--debug", default=0, action="count")
    sub = p.add_subparsers(dest="command")
    sub.required = True

    catalog = sub.add_parser("catalog", help="List the catalog actions.")
    catalog.add_argument("--dim", type=int, required=True)
    catalog.set_defaults(func=cmd_catalog)

    classify_parser = sub.add_parser(
        "classify", help="Classify a subalgebra file.")
    classify_parser.add_argument(
        "path", help="Path to the YAML subalgebra file.")
    classify_parser.add_argument("--tol", type=float, default=CLASSIFY_TOL)
    classify_parser.add_argument("--seed", type=int, default=seed)
    classify_parser.set_defaults(func=cmd_classify)

    orbit = sub.add_parser("orbit", help="Export a sampled orbit.")
    _add_action_arguments(orbit)
    orbit.add_argument("--point", required=True,
                       help="Comma-separated coordinates of the base point.")
    orbit.add_argument("--samples", type=int, default=1000)
    orbit.add_argument("--seed", type=int, default=seed)
    orbit.add_argument("--out", required=True)
    orbit.add_argument("--format", choices=("csv", "ply"), default="csv")
    orbit.set_defaults(func=cmd_orbit)

    cohom = sub.add_parser("cohomogeneity",
                           help="Estimate the cohomogeneity of an action.")
    _add_action_arguments(cohom)
    cohom.add_argument("--trials", type=int, default=10000)
    cohom.add_argument("--seed", type=int, default=seed)
    cohom.set_defaults(func=cmd_cohomogeneity)

    verify = sub.add_parser("verify", help="Run a verification suite.")
    verify.add_argument("--suite", choices=SUITES, default="all")
    verify.add_argument("--seed", type=int, default=seed)
    verify.add_argument("--lambda", dest="lambdas", type=float,
                        action="append", default=None,
                        help="Lambda values; may be repeated.")
    verify.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    try:
        seed = _default_seed()
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    p = build_parser(seed)
    try:
        ns = p.parse_args(argv)
    except SystemExit as e:
        return e.code

    logging.basicConfig(
        format=('%(asctime)s %(levelname)-8.8s [%(name)s:%(lineno)s]'
                ' %(message)s'),
        datefmt='%Y-%m-%d %H:%M:%S',
        level=('WARNING', 'INFO', 'DEBUG')[min(ns.debug, 2)])

    logger.debug("Running %s with %s", ns.command, vars(ns))
    try:
        return ns.func(ns)
    except (Cohom1Error, ValueError) as e:
        print("error: {0}".format(e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
