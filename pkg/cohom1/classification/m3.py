"""
Classification of cohomogeneity-one subalgebras of iso(M^3).

The decision procedure branches on the dimension of the translation part
h ∩ M^3 and of the projection π₁(h) to so(2,1):

* dim h ∩ M^3 = 2: the orbits are the translates of a plane, classified by
  its metric type (R2, M2, W2),
* dim h ∩ M^3 = 1 and dim π₁(h) = 1: the line is normalized by π₁(h); a
  space-like line gives AxRe1, a time-like line KxRe3 and a light-like one
  one of the screw families,
* dim h ∩ M^3 = 0: π₁(h) is so(2,1) (SO21) or conjugate to a + n (AN).

Everything else has orbits of dimension 3 or at most 1.
"""
from __future__ import absolute_import, division

import logging
import math

import numpy as np
import scipy.linalg

from cohom1.actions import ActionClass, cohomogeneity, make_spec
from cohom1.errors import (
    DimensionMismatch, NoInvariantNullLine, NotNormalForm,
)
from cohom1.geometry import w0
from cohom1.lie import (
    IsoElement, LieElement, Subalgebra, Y_A, Y_K, Y_N, boost_a,
    closure_residual, nilpotent_n, pi1, reflection, subalgebra_span_residual,
    translation_part,
)
from .alignment import (
    MetricType, align_line_m3, lorentz_normal, metric_type,
)
from .normal_forms import ConjugatorChain, strip_translations
from .results import Verdict, classified_result, rejected_result


logger = logging.getLogger(__name__)

CLASSIFY_TOL = 1e-8

# Trials of the orbit-rank search used where the case analysis alone does
# not decide the cohomogeneity.
RANK_TRIALS = 2000

E1 = np.array([1.0, 0.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])
ELL = w0(3)

_PLANE_CLASSES = {
    MetricType.riemannian: ActionClass.R2,
    MetricType.lorentzian: ActionClass.M2,
    MetricType.degenerate: ActionClass.W2,
}


def pi1_to_standard(s, tol=CLASSIFY_TOL):
    """ g in SO°(2,1) with Ad(g)(s) = a + n.

    s is a 2-dimensional subalgebra of so(2,1). Its derived algebra is
    spanned by a nilpotent element whose kernel is the null line left
    invariant by all of s; g moves that line onto l = R w0, whose stabilizer
    is a + n.

    Raises
    ------
    NoInvariantNullLine
        If s has no common invariant null line.
    """
    if s.ambient_dim != 3:
        raise DimensionMismatch(3, s.ambient_dim)
    if s.dim != 2:
        raise NoInvariantNullLine(
            "Expected a 2-dimensional subalgebra, got dimension {0}"
            .format(s.dim))
    x1, x2 = (e.linear for e in s.basis)
    derived = x1.dot(x2) - x2.dot(x1)
    scale = np.linalg.norm(x1) * np.linalg.norm(x2)
    if np.linalg.norm(derived) <= tol * scale:
        raise NoInvariantNullLine("Abelian 2-dimensional subalgebra")

    kernel = scipy.linalg.null_space(derived, rcond=math.sqrt(tol))
    if kernel.shape[1] != 1:
        raise NoInvariantNullLine(
            "Derived algebra has a {0}-dimensional kernel".format(
                kernel.shape[1]))
    v = kernel[:, 0]
    if metric_type(v, tol) is not MetricType.lightlike:
        raise NoInvariantNullLine("Invariant line R{0} is not null".format(v))
    for x in (x1, x2):
        image = x.dot(v)
        off_line = image - image.dot(v) * v
        if np.linalg.norm(off_line) > math.sqrt(tol) * np.linalg.norm(x):
            raise NoInvariantNullLine(
                "Null line R{0} is not invariant".format(v))

    _, g = align_line_m3(v, tol)
    return g


def _lorentz_part_of_screw(x):
    """ Write x = a Y_a + b Y_n; returns (a, b, relative residual). """
    basis = np.array([Y_A.ravel(), Y_N.ravel()]).T
    coefficients, _, _, _ = np.linalg.lstsq(basis, x.ravel(), rcond=None)
    residual = np.linalg.norm(basis.dot(coefficients) - x.ravel())
    return (coefficients[0], coefficients[1],
            residual / max(1.0, np.linalg.norm(x)))


def _screw_lambda(h, tol):
    """ λ of R(Y + v) + l for Y = Y_a (λ = v1) or Y_n (λ = v2 + v3).

    Returns
    -------
    family : ActionClass
        ALambdaEll or N1xEll, the latter standing for the whole N family.
    lam : float
        The signed coefficient.
    c : ndarray
        The translation stripping v down to λ e1 or λ e3.
    """
    x = pi1(h).basis[0].linear
    a, b, residual = _lorentz_part_of_screw(x)
    if residual > tol:
        raise NotNormalForm(
            "Linear part is not in a + n (residual {0:.3e})".format(residual))
    if abs(a) > tol * math.hypot(a, b):
        if abs(b) > tol * abs(a):
            raise NotNormalForm("Linear part is not a multiple of Y_a")
        c, remainders, residual = strip_translations(
            h, [Y_A], [ELL, E1], tol)
        family = ActionClass.ALambdaEll
    else:
        c, remainders, residual = strip_translations(
            h, [Y_N], [ELL, E3], tol)
        family = ActionClass.N1xEll
    if residual > tol:
        raise NotNormalForm(
            "Translation parts cannot be stripped (residual {0:.3e})"
            .format(residual))
    return family, float(remainders[0, 1]), c


def extract_lambda(h, tol=CLASSIFY_TOL):
    """ λ >= 0 of a subalgebra R(Y_a + v) + l or R(Y_n + v) + l.

    The screw part is stripped by a translation to λ e1 (the a family, λ =
    |v1|) or λ e3 (the n family, λ = |v2 + v3|); negative values are
    reflected away.

    Raises
    ------
    NotNormalForm
        If h is not of one of the two forms.
    """
    if h.ambient_dim != 3:
        raise DimensionMismatch(3, h.ambient_dim)
    d_t, t_basis = translation_part(h)
    if h.dim != 2 or d_t != 1:
        raise NotNormalForm(
            "Expected R(Y + v) + l, got dim {0} with {1} translations"
            .format(h.dim, d_t))
    line = Subalgebra.spanned_by([LieElement.translation(t_basis[0])], 3)
    if subalgebra_span_residual(line, Subalgebra.spanned_by(
            [LieElement.translation(ELL)], 3)) > tol:
        raise NotNormalForm("Translation part is not l = R(e2 - e3)")
    _, lam, _ = _screw_lambda(h, tol)
    return abs(lam)


def _classify_plane(h, t_basis, d_p, tol, seed):
    kind = metric_type(t_basis, tol)
    _, g = align_line_m3(lorentz_normal(t_basis), tol)
    chain = ConjugatorChain(h)
    chain.push(g)
    spec = make_spec(_PLANE_CLASSES[kind])
    if d_p == 0:
        return classified_result(chain, spec)
    value = cohomogeneity(h, RANK_TRIALS, seed)
    if value != 1:
        reason = ("{0} plane with a linear part of dimension {1} has "
                  "cohomogeneity {2}".format(kind.value, d_p, value))
        return rejected_result(Verdict.not_cohomogeneity_one, h,
                               reason=reason)
    return classified_result(chain, spec, contains_only=True)


def _classify_lorentz(h, tol):
    chain = ConjugatorChain(h)
    c, _, residual = strip_translations(h, [Y_K, Y_A, Y_N], (), tol)
    if residual > tol:
        return rejected_result(Verdict.not_a_subalgebra, h, residual,
                               "so(2,1) cocycle is not a coboundary")
    chain.push_translation(c)
    return classified_result(chain, make_spec(ActionClass.SO21))


def _classify_solvable(h, tol):
    chain = ConjugatorChain(h)
    try:
        g = pi1_to_standard(pi1(h), tol)
    except NoInvariantNullLine as e:
        return rejected_result(Verdict.not_a_subalgebra, h, reason=str(e))
    chain.push(g)
    c, _, residual = strip_translations(chain.current, [Y_A, Y_N], (), tol)
    if residual > tol:
        return rejected_result(Verdict.not_a_subalgebra, h, residual,
                               "a + n cocycle is not a coboundary")
    chain.push_translation(c)
    return classified_result(chain, make_spec(ActionClass.AN))


def _classify_screw(chain, tol):
    h = chain.current
    a, b, _ = _lorentz_part_of_screw(pi1(h).basis[0].linear)
    if abs(a) > tol * math.hypot(a, b) and abs(b) > tol * abs(a):
        # Ad(n_s) Y_a = Y_a - s Y_n
        chain.push(IsoElement.linear_map(nilpotent_n([b / a])))

    family, lam, c = _screw_lambda(chain.current, tol)
    chain.push_translation(c)
    if abs(lam) <= tol * max(1.0, abs(lam)):
        lam = 0.0
    if lam < 0:
        # e3 -> -e3 sends l = R w0 to R(e2 + e3); e1 -> -e1 keeps l and
        # flips the sign of λ in both families.
        chain.push(reflection(3, 1), reflection=True)
        lam = -lam

    if family is ActionClass.ALambdaEll:
        return classified_result(chain, make_spec(family, lam=lam), lam)
    if lam == 0.0:
        return classified_result(chain, make_spec(ActionClass.NxEll), 0.0)
    # Ad(a_u)(Y_n + λ e3) = e^u (Y_n + λ e^{-2u} e3) modulo l
    chain.push(IsoElement.linear_map(boost_a(0.5 * math.log(lam))))
    return classified_result(chain, make_spec(ActionClass.N1xEll), lam)


def _classify_line(h, t, tol):
    kind, g = align_line_m3(t, tol)
    chain = ConjugatorChain(h)
    chain.push(g)
    if kind is MetricType.lightlike:
        try:
            return _classify_screw(chain, tol)
        except NotNormalForm as e:
            return rejected_result(Verdict.not_a_subalgebra, h,
                                   reason=str(e))

    if kind is MetricType.spacelike:
        linear, line, action_class = Y_A, E1, ActionClass.AxRe1
    else:
        linear, line, action_class = Y_K, E3, ActionClass.KxRe3
    try:
        c, _, residual = strip_translations(
            chain.current, [linear], [line], tol)
    except NotNormalForm as e:
        return rejected_result(Verdict.not_a_subalgebra, h, reason=str(e))
    if residual > tol:
        return rejected_result(Verdict.not_a_subalgebra, h, residual,
                               "translation parts cannot be stripped")
    chain.push_translation(c)
    return classified_result(chain, make_spec(action_class))


def classify_m3(h, tol=CLASSIFY_TOL, seed=0):
    """ Classify the action of the connected subgroup with Lie algebra h.

    Parameters
    ----------
    h : Subalgebra
        A subalgebra of iso(M^3).
    tol : float
        Relative tolerance of the closure test and the normal forms.
    seed : int
        Seed of the orbit-rank search, used for translation planes with a
        non-trivial linear part.

    Returns
    -------
    ClassificationResult
    """
    if h.ambient_dim != 3:
        raise DimensionMismatch(3, h.ambient_dim)
    closure = closure_residual(h) if h.dim > 1 else 0.0
    if closure > tol:
        return rejected_result(Verdict.not_a_subalgebra, h, closure,
                               "not closed under the bracket")

    d_t, t_basis = translation_part(h)
    d_p = h.dim - d_t
    logger.info("dim h = %d, dim h ∩ M^3 = %d, dim pi1(h) = %d",
                h.dim, d_t, d_p)

    if h.dim <= 1:
        return rejected_result(Verdict.not_cohomogeneity_one, h,
                               reason="orbits of dimension at most 1")
    if d_t == 3:
        return rejected_result(Verdict.not_cohomogeneity_one, h,
                               reason="transitive translation group")
    if d_t == 2:
        return _classify_plane(h, t_basis, d_p, tol, seed)
    if d_t == 0 and d_p == 3:
        return _classify_lorentz(h, tol)
    if d_t == 0 and d_p == 2:
        return _classify_solvable(h, tol)
    if d_t == 1 and d_p == 1:
        return _classify_line(h, t_basis[0], tol)
    reason = ("a line of translations and a linear part of dimension {0} "
              "have an open orbit".format(d_p))
    return rejected_result(Verdict.not_cohomogeneity_one, h, reason=reason)
