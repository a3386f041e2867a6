"""
Classification of cohomogeneity-one subalgebras of iso(M^2).
"""
from __future__ import absolute_import

import logging

from cohom1.actions import ActionClass, make_spec
from cohom1.errors import DimensionMismatch
from cohom1.lie import Y_SO11, closure_residual, translation_part
from .alignment import MetricType, align_line_m2
from .m3 import CLASSIFY_TOL
from .normal_forms import ConjugatorChain, strip_translations
from .results import Verdict, classified_result, rejected_result


logger = logging.getLogger(__name__)

_LINE_CLASSES = {
    MetricType.spacelike: ActionClass.R1,
    MetricType.timelike: ActionClass.M1,
    MetricType.lightlike: ActionClass.W1,
}


def classify_m2(h, tol=CLASSIFY_TOL):
    """ Classify the action of the connected subgroup with Lie algebra h.

    A line of translations is moved onto Re1, Re2 or R w0 by a boost; a
    one-dimensional h without translations is R(Y + v), which the
    translation (I, Y v) conjugates onto so(1,1).
    """
    if h.ambient_dim != 2:
        raise DimensionMismatch(2, h.ambient_dim)
    closure = closure_residual(h) if h.dim > 1 else 0.0
    if closure > tol:
        return rejected_result(Verdict.not_a_subalgebra, h, closure,
                               "not closed under the bracket")

    d_t, t_basis = translation_part(h)
    d_p = h.dim - d_t
    logger.info("dim h = %d, dim h ∩ M^2 = %d, dim pi1(h) = %d",
                h.dim, d_t, d_p)
    if h.dim == 0 or d_t == 2:
        return rejected_result(Verdict.not_cohomogeneity_one, h,
                               reason="trivial or transitive action")

    chain = ConjugatorChain(h)
    if d_t == 1:
        if d_p > 0:
            # SO°(1,1) ⋉ W^1 has only three orbits
            return rejected_result(
                Verdict.not_cohomogeneity_one, h,
                reason="boosts together with null translations")
        kind, g, reflected = align_line_m2(t_basis[0], tol)
        chain.push(g, reflection=reflected)
        return classified_result(chain, make_spec(_LINE_CLASSES[kind]))

    c, _, residual = strip_translations(h, [Y_SO11], (), tol)
    if residual > tol:
        return rejected_result(Verdict.not_a_subalgebra, h, residual,
                               "translation part cannot be stripped")
    chain.push_translation(c)
    return classified_result(chain, make_spec(ActionClass.SO11))
