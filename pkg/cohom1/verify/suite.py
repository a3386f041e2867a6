"""
The verification suites run by ``cohom1 verify``.
"""
from __future__ import absolute_import

import itertools
import logging

from cohom1.actions import catalog_list
from .equivalence import (
    dense_open_experiment, nonequivalence_witness, orbit_count_experiment,
)
from .identities import (
    an_orbit_parametrization_check, catalog_isometry_check,
    commuting_identity_check, generic_orbit_congruence_check,
    p_lambda_congruence_check,
)


logger = logging.getLogger(__name__)

SUITES = ("all", "identities", "equivalence", "denseopen", "counts")

DEFAULT_LAMBDAS = (0.5, 1.0, 2.0, 4.0)
COMMUTING_LAMBDAS = (0.1, 0.5, 1.0, 2.0, 10.0)
DENSE_OPEN_RADII = (0.5, 1.0, 2.0)


def _identities(seed, lambdas):
    commuting = COMMUTING_LAMBDAS if lambdas is None else lambdas
    lambdas = DEFAULT_LAMBDAS if lambdas is None else lambdas
    reports = [commuting_identity_check(lam, 10000, seed)
               for lam in commuting]
    reports.extend(p_lambda_congruence_check(lam, mu, 1000, seed)
                   for lam, mu in itertools.product(lambdas, repeat=2))
    reports.extend(generic_orbit_congruence_check(lam, 1000, seed)
                   for lam in lambdas)
    reports.extend(an_orbit_parametrization_check(n, 1.0, 1000, seed)
                   for n in (2, 3))
    return reports


def _equivalence(seed, lambdas):
    lambdas = DEFAULT_LAMBDAS if lambdas is None else lambdas
    pairs = [(lam, mu) for lam, mu in itertools.product(lambdas, repeat=2)
             if lam != mu]
    if not pairs:
        logger.warning("No pair with lambda != mu; equivalence skipped")
    return [nonequivalence_witness(lam, mu) for lam, mu in pairs]


def _dense_open(seed, lambdas):
    return [dense_open_experiment(r, 1000, seed) for r in DENSE_OPEN_RADII]


def _counts(seed, lambdas):
    lambdas = DEFAULT_LAMBDAS if lambdas is None else lambdas
    reports = []
    for ambient_dim in (2, 3, 4):
        reports.extend(orbit_count_experiment(spec, 1000, seed)
                       for spec in catalog_list(ambient_dim, lambdas))
        reports.append(catalog_isometry_check(ambient_dim, 100, seed))
    return reports


_RUNNERS = {
    "identities": _identities,
    "equivalence": _equivalence,
    "denseopen": _dense_open,
    "counts": _counts,
}


def run_suite(name, seed=0, lambdas=None):
    """ Run one of SUITES and return its VerificationReports in order.

    Parameters
    ----------
    name : str
        The suite; "all" runs every suite.
    seed : int
        Seed of every check in the suite.
    lambdas : sequence of float, optional
        λ values for the screw-family checks, replacing the defaults.
    """
    if name not in SUITES:
        raise ValueError("Unknown suite {0!r}, expected one of {1}".format(
            name, ", ".join(SUITES)))
    if lambdas is not None:
        lambdas = tuple(float(lam) for lam in lambdas)
    names = SUITES[1:] if name == "all" else (name,)
    reports = []
    for suite in names:
        logger.info("Running suite %s", suite)
        reports.extend(_RUNNERS[suite](seed, lambdas))
    return reports
