# flake8: noqa
from __future__ import absolute_import

from .report import Status, VerificationReport, Witness
from .identities import (
    an_orbit_parametrization_check, an_orbit_point, catalog_isometry_check,
    check_isometry, commuting_identity_check, commuting_identity_residual,
    generic_orbit_congruence_check, interval_defect,
    p_lambda_congruence_check,
)
from .equivalence import (
    WITNESS_THRESHOLD, dense_open_experiment, expected_inventory,
    nonequivalence_witness, orbit_count_experiment, orbit_inventory,
)
from .suite import SUITES, run_suite
