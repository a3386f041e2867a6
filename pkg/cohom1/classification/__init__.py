# flake8: noqa
from __future__ import absolute_import

from cohom1.errors import UnsupportedAction

from .alignment import (
    METRIC_TOL, MetricType, align_line_m2, align_line_m3, conjugate,
    gram_signature, lorentz_normal, metric_type,
)
from .m2 import classify_m2
from .m3 import CLASSIFY_TOL, classify_m3, extract_lambda, pi1_to_standard
from .normal_forms import ConjugatorChain, strip_translations
from .results import ClassificationResult, Verdict


def classify(h, tol=CLASSIFY_TOL, seed=0):
    """ Classify a subalgebra of iso(M^2) or iso(M^3). """
    if h.ambient_dim == 2:
        return classify_m2(h, tol)
    if h.ambient_dim == 3:
        return classify_m3(h, tol, seed)
    raise UnsupportedAction(
        "No classification on M^{0}; only M^2 and M^3 are supported".format(
            h.ambient_dim))
