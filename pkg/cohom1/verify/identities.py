"""
Numerical checks of the identities behind the classification: isometries
preserve intervals, boosts a_u commute with the screw groups up to a
rescaling of the light-like parameter, and a_u maps the surfaces
P_λ = N_λ x l (0) onto each other.
"""
from __future__ import absolute_import, division

import logging
import math

import numpy as np

from cohom1.actions import (
    ActionClass, catalog_list, group_element, make_spec, orbit_label,
)
from cohom1.geometry import lorentz_inner, lorentz_norm_sq
from cohom1.lie import (
    IsoElement, LieElement, boost_a, exp_iso, iso_apply, iwasawa_generators,
    root_generator,
)
from cohom1.utils import timed_context
from .report import VerificationReport, Witness


logger = logging.getLogger(__name__)

ISOMETRY_TOL = 1e-10
COMMUTING_TOL = 1e-12
CONGRUENCE_TOL = 1e-9

# Half-width of the boxes random parameters are drawn from.
PARAMETER_SCALE = 2.0


def _check_positive(name, value):
    if not value > 0:
        raise ValueError("{0} must be > 0, got {1!r}".format(name, value))


def _check_count(name, value):
    if value < 1:
        raise ValueError("{0} must be >= 1, got {1!r}".format(name, value))


def _relative(difference, reference):
    return float(np.linalg.norm(difference) / max(1.0, np.linalg.norm(
        reference)))


def interval_defect(g, p, q):
    """ Relative change of the interval <p - q, p - q> under g. """
    before = lorentz_norm_sq(np.asarray(p) - np.asarray(q))
    gp, gq = iso_apply(g, p), iso_apply(g, q)
    after = lorentz_norm_sq(gp - gq)
    return abs(after - before) / max(1.0, abs(before))


def check_isometry(g, trials=100, seed=0, tol=ISOMETRY_TOL):
    """ Verify that g preserves intervals on `trials` random pairs. """
    _check_count("trials", trials)
    rng = np.random.default_rng(seed)
    d = g.ambient_dim
    worst, witness = -1.0, None
    for _ in range(trials):
        p, q = rng.standard_normal((2, d))
        defect = interval_defect(g, p, q)
        if defect > worst:
            worst, witness = defect, Witness(p, tuple(q))
    return VerificationReport.from_residual(
        "isometry", worst, tol, trials, seed, witness)


def commuting_identity_residual(lam, u, t, s, p, s_exponent=1.0):
    """ |a_u(g_{t,s}(p)) - g_{t, e^{cu} s}(a_u(p))|, relative, c = s_exponent.
    """
    spec = make_spec(ActionClass.ALambdaEll, lam=lam)
    return _commuting_residual(spec, u, t, s, p, s_exponent)


def _commuting_residual(spec, u, t, s, p, s_exponent):
    a_u = IsoElement.linear_map(boost_a(u))
    lhs = iso_apply(a_u, iso_apply(group_element(spec, (t, s)), p))
    rescaled = math.exp(s_exponent * u) * s
    rhs = iso_apply(group_element(spec, (t, rescaled)), iso_apply(a_u, p))
    return _relative(lhs - rhs, lhs)


def commuting_identity_check(lam, trials=10000, seed=0, s_exponent=1.0,
                             tol=COMMUTING_TOL):
    """ a_u g^λ_{t,s} = g^λ_{t,e^u s} a_u on random (u, t, s, p).

    `s_exponent` replaces e^u by e^{s_exponent u}; anything but 1 must fail.
    """
    _check_count("trials", trials)
    _check_positive("lambda", lam)
    spec = make_spec(ActionClass.ALambdaEll, lam=lam)
    rng = np.random.default_rng(seed)
    worst, witness = -1.0, None
    with timed_context("commuting identity, lambda={0:g}".format(lam)):
        for _ in range(trials):
            u, t, s = rng.uniform(-PARAMETER_SCALE, PARAMETER_SCALE, 3)
            p = rng.standard_normal(3)
            residual = _commuting_residual(spec, u, t, s, p, s_exponent)
            if residual > worst:
                worst, witness = residual, Witness(p, (u, t, s))
    name = "commuting_identity(lambda={0:g})".format(lam)
    return VerificationReport.from_residual(
        name, worst, tol, trials, seed, witness)


def p_lambda_congruence_check(lam, mu, samples=1000, seed=0, boost=None,
                              tol=CONGRUENCE_TOL):
    """ a_u(P_λ) ⊂ P_μ for u = ½ ln(λ/μ).

    Points h^λ_{t,s}(0) of P_λ are mapped by a_u (or by a_boost when
    `boost` is given) and tested with J_μ, which vanishes exactly on P_μ.
    """
    _check_positive("lambda", lam)
    _check_positive("mu", mu)
    _check_count("samples", samples)
    u = 0.5 * math.log(lam / mu) if boost is None else float(boost)
    spec = make_spec(ActionClass.N1xEll, lam=lam)
    target = make_spec(ActionClass.N1xEll, lam=mu)
    a_u = IsoElement.linear_map(boost_a(u))
    origin = np.zeros(3)

    rng = np.random.default_rng(seed)
    worst, witness = -1.0, None
    for t, s in rng.uniform(-PARAMETER_SCALE, PARAMETER_SCALE, (samples, 2)):
        q = iso_apply(a_u, iso_apply(group_element(spec, (t, s)), origin))
        label = orbit_label(target, q)
        residual = abs(label.invariants[0]) / max(1.0, np.linalg.norm(q))
        if residual > worst:
            worst, witness = residual, Witness(q, (u, t, s), (str(label),))
    name = "p_lambda_congruence(lambda={0:g}, mu={1:g})".format(lam, mu)
    return VerificationReport.from_residual(
        name, worst, tol, samples, seed, witness)


def generic_orbit_congruence_check(lam, trials=1000, seed=0,
                                   tol=CONGRUENCE_TOL):
    """ The orbits of A_λ ⋉ l off W^2 are congruent to each other.

    a_u maps the orbit through z(e2 + e3) onto the one through
    e^{-u} z (e2 + e3), and diag(1, -1, -1) maps it onto the one through
    -z (e2 + e3). Images are compared through ln|I_λ| and the
    Upper/Lower stratum.
    """
    _check_count("trials", trials)
    _check_positive("lambda", lam)
    spec = make_spec(ActionClass.ALambdaEll, lam=lam)
    flip = IsoElement.linear_map(np.diag([1.0, -1.0, -1.0]))
    diagonal = np.array([0.0, 1.0, 1.0])

    rng = np.random.default_rng(seed)
    worst, witness = -1.0, None
    for _ in range(trials):
        u, t, s = rng.uniform(-PARAMETER_SCALE, PARAMETER_SCALE, 3)
        z = rng.uniform(0.1, PARAMETER_SCALE) * rng.choice([-1.0, 1.0])
        q = iso_apply(group_element(spec, (t, s)), z * diagonal)
        a_u = IsoElement.linear_map(boost_a(u))
        for g, image_z in ((a_u, math.exp(-u) * z), (flip, -z)):
            label = orbit_label(spec, iso_apply(g, q))
            expected = orbit_label(spec, image_z * diagonal)
            residual = abs(label.invariants[0] - expected.invariants[0]) / \
                max(1.0, abs(expected.invariants[0]))
            if label.stratum is not expected.stratum:
                residual = max(residual, 1.0)
            if residual > worst:
                worst = residual
                witness = Witness(q, (u, t, s, z), (str(label), str(expected)))
    name = "generic_orbit_congruence(lambda={0:g})".format(lam)
    return VerificationReport.from_residual(
        name, worst, tol, trials, seed, witness)


def an_orbit_point(n, r, t, b):
    """ a_t n_b (r e_n), written out in coordinates. """
    b = np.asarray(b, dtype=float)
    half = 0.5 * b.dot(b)
    c, s = math.cosh(t), math.sinh(t)
    return r * np.concatenate(
        [b, [c * (1.0 - half) - s * half, c * half - s * (1.0 - half)]])


def an_orbit_parametrization_check(n=2, r=1.0, trials=1000, seed=0,
                                   tol=CONGRUENCE_TOL):
    """ AN (± r e_n) is the half of dS^n(r) where ±(p_n + p_{n+1}) > 0.

    The closed-form orbit points are compared with Exp(t Y_a) Exp(N_b)
    applied to r e_n, then tested for lying on dS^n(r) in the right half.
    """
    _check_count("trials", trials)
    _check_positive("r", r)
    if n < 2:
        raise ValueError("AN orbits need n >= 2, got {0}".format(n))
    basis = iwasawa_generators(n)
    e_n = np.zeros(n + 1)
    e_n[n - 1] = r

    rng = np.random.default_rng(seed)
    worst, witness = -1.0, None
    for _ in range(trials):
        t = rng.uniform(-PARAMETER_SCALE, PARAMETER_SCALE)
        b = rng.uniform(-PARAMETER_SCALE, PARAMETER_SCALE, n - 1)
        g = exp_iso(basis.a_gen, t) @ exp_iso(
            LieElement.rotation_like(root_generator(b)))
        for sign in (1.0, -1.0):
            expected = sign * an_orbit_point(n, r, t, b)
            p = iso_apply(g, sign * e_n)
            residual = max(
                _relative(p - expected, expected),
                abs(lorentz_inner(p, p) - r ** 2) / r ** 2)
            if not sign * (p[-2] + p[-1]) > 0:
                residual = max(residual, 1.0)
            if residual > worst:
                worst, witness = residual, Witness(p, (sign, t) + tuple(b))
    name = "an_orbit_parametrization(n={0}, r={1:g})".format(n, r)
    return VerificationReport.from_residual(
        name, worst, tol, trials, seed, witness)


def catalog_isometry_check(ambient_dim, elements=100, seed=0,
                           lambdas=(0.5, 2.0), tol=ISOMETRY_TOL):
    """ check_isometry on random group elements of every catalog action.
    """
    _check_count("elements", elements)
    rng = np.random.default_rng(seed)
    worst, witness = -1.0, None
    count = 0
    for spec in catalog_list(ambient_dim, lambdas):
        for _ in range(elements):
            params = rng.uniform(-PARAMETER_SCALE, PARAMETER_SCALE,
                                 spec.group_dim)
            g = group_element(spec, params)
            report = check_isometry(g, trials=5, seed=count)
            count += 1
            if report.max_residual > worst:
                worst = report.max_residual
                witness = Witness(report.witness.point, tuple(params),
                                  (spec.name,))
    logger.info("Checked %d group elements on M^%d", count, ambient_dim)
    name = "catalog_isometry(M^{0})".format(ambient_dim)
    return VerificationReport.from_residual(
        name, worst, tol, count, seed, witness)
