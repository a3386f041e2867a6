# flake8: noqa
from __future__ import absolute_import

from .catalog import (
    DEFAULT_LAMBDAS, DESCRIPTIONS, TRANSLATION_CLASSES, ActionClass,
    ActionSpec, KPrime, KPrimeKind, catalog_list, group_element, make_spec,
)
from .labels import (
    OrbitLabel, OrbitStratum, i_invariant, j_invariant, log_i_invariant,
    orbit_label,
)
from .orbits import (
    DEFAULT_SCALE, cohomogeneity, fundamental_fields, orbit_dimension,
    orbit_sample, principal_point,
)
