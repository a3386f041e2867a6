# flake8: noqa
from __future__ import absolute_import

from .minkowski import (
    DEFAULT_TOL, CausalClass, basis_vector, causal_class, is_light_like,
    lorentz_inner, lorentz_norm_sq, metric, minkowski_vector, time_reversal,
    w0,
)
from .strata import (
    RegionLabel, Stratum, in_cylinder, in_w_subspace, quadric_label,
    quadric_label_2d,
)
