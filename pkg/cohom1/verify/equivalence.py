"""
Orbit-equivalence experiments: a numerical witness that A_λ ⋉ l and
A_μ ⋉ l are not orbit-equivalent for λ != μ, the dense-open agreement of
K'AN actions on M^{n+1}, and stratum inventories of the catalog actions.
"""
from __future__ import absolute_import, division

import itertools
import logging

import numpy as np

from cohom1.actions import (
    ActionClass, KPrime, OrbitStratum, group_element, i_invariant, make_spec,
    orbit_dimension, orbit_label,
)
from cohom1.geometry import Stratum, lorentz_norm_sq, w0
from cohom1.lie import iso_apply
from cohom1.utils import timed_context
from .report import VerificationReport, Witness


logger = logging.getLogger(__name__)

WITNESS_THRESHOLD = 0.1

_SO_STRATA = frozenset(s.value for s in (
    Stratum.origin, Stratum.light_cone_plus, Stratum.light_cone_minus,
    Stratum.hyperbolic_plus, Stratum.hyperbolic_minus, Stratum.de_sitter))

_PLANAR_STRATA = frozenset(s.value for s in (
    Stratum.origin, Stratum.light_ray_pp, Stratum.light_ray_pm,
    Stratum.light_ray_mp, Stratum.light_ray_mm, Stratum.hyperbolic_plus,
    Stratum.hyperbolic_minus, Stratum.de_sitter_plus,
    Stratum.de_sitter_minus))

_PARABOLIC_STRATA = frozenset(s.value for s in (
    Stratum.origin, Stratum.hyperbolic_plus, Stratum.hyperbolic_minus,
    OrbitStratum.ray_plus_w0, OrbitStratum.ray_minus_w0,
    OrbitStratum.light_cone_plus_punctured,
    OrbitStratum.light_cone_minus_punctured, OrbitStratum.de_sitter_upper,
    OrbitStratum.de_sitter_lower, OrbitStratum.cylinder))

_LINE_STRATA = frozenset(s.value for s in (
    OrbitStratum.line, OrbitStratum.upper, OrbitStratum.lower))


def expected_inventory(spec):
    """ The stratum names the orbits of `spec` fall into. """
    action_class = spec.action_class
    if action_class in (ActionClass.SO21, ActionClass.SOn1):
        return _SO_STRATA
    if action_class in (ActionClass.SO11, ActionClass.AxRe1):
        return _PLANAR_STRATA
    if action_class in (ActionClass.AN, ActionClass.KprimeAN):
        return _PARABOLIC_STRATA
    if action_class is ActionClass.KxRe3:
        return frozenset([OrbitStratum.axis.value,
                          OrbitStratum.cylinder.value])
    if action_class is ActionClass.NxEll:
        return _LINE_STRATA
    if action_class is ActionClass.ALambdaEll:
        if spec.lam == 0:
            return _LINE_STRATA
        return frozenset(s.value for s in (
            OrbitStratum.degenerate, OrbitStratum.upper, OrbitStratum.lower))
    if action_class is ActionClass.N1xEll:
        return frozenset([OrbitStratum.parabolic.value])
    return frozenset([OrbitStratum.leaf.value])


def _check_positive(name, value):
    if not value > 0:
        raise ValueError("{0} must be > 0, got {1!r}".format(name, value))


def nonequivalence_witness(lam, mu, grid=201, t_max=1.0,
                           threshold=WITNESS_THRESHOLD):
    """ Spread of I_μ along the A_λ ⋉ l orbit through e2 + e3.

    I_μ is constant on every A_μ ⋉ l orbit, so a spread above `threshold`
    shows that the A_λ orbit is not an A_μ orbit. The degenerate orbit W^2
    must get the same label for both actions.
    """
    _check_positive("lambda", lam)
    _check_positive("mu", mu)
    if lam == mu:
        raise ValueError("Non-equivalence needs lambda != mu, got {0!r} twice"
                         .format(lam))
    spec_lam = make_spec(ActionClass.ALambdaEll, lam=lam)
    spec_mu = make_spec(ActionClass.ALambdaEll, lam=mu)
    start = np.array([0.0, 1.0, 1.0])

    ts = np.linspace(-t_max, t_max, grid)
    points = np.array([iso_apply(group_element(spec_lam, (t, 0.0)), start)
                       for t in ts])
    values = i_invariant(points, mu)
    spread = float(np.max(values) - np.min(values))

    mismatch = 0.0
    for p in (np.array([1.0, 0.0, 0.0]), w0(3), np.array([2.0, -1.0, 1.0])):
        same = orbit_label(spec_lam, p).same_orbit_type(
            orbit_label(spec_mu, p))
        mismatch = max(mismatch, 0.0 if same else 1.0)

    witness = Witness(
        start, (float(ts[np.argmin(values)]), float(ts[np.argmax(values)])),
        (str(orbit_label(spec_lam, start)), str(orbit_label(spec_mu, start))))
    name = "nonequivalence(lambda={0:g}, mu={1:g})".format(lam, mu)
    report = VerificationReport.from_witness(
        name, spread, threshold, mismatch, 0.0, grid, None, witness)
    if not report.passed:
        logger.warning("%s: spread %.3e does not exceed %g, no witness",
                       name, spread, threshold)
    return report


def _de_sitter_points(rng, n, r, count, margin=1e-3):
    """ Points of dS^n(r) off W^n. """
    points = []
    while len(points) < count:
        x = rng.standard_normal(n + 1)
        q = lorentz_norm_sq(x)
        if not q > 0:
            continue
        p = r * x / np.sqrt(q)
        if abs(p[-2] + p[-1]) > margin * r:
            points.append(p)
    return points


def _cylinder_points(rng, n, r, count):
    """ Points of Z^{n-1}(r) = S^{n-2}(r) x R w0. """
    points = []
    for _ in range(count):
        x = rng.standard_normal(n - 1)
        x *= r / np.linalg.norm(x)
        s = rng.uniform(-2.0, 2.0)
        points.append(np.concatenate([x, [s, -s]]))
    return points


def dense_open_experiment(r, trials=1000, seed=0, n=3):
    """ K'AN with trivial and full K' agree on dS^n(r) off W^n but not on
    the cylinder Z^{n-1}(r).

    Off W^n both orbits through a point are open in dS^n(r) with equal
    labels; on the cylinder the trivial K' gives lines and the full K_0
    gives products S^{n-2} x R.
    """
    _check_positive("r", r)
    if n < 3:
        raise ValueError("K'AN lives on M^{{n+1}} with n >= 3, got n = "
                         "{0}".format(n))
    trivial = make_spec(ActionClass.KprimeAN, n + 1, kprime=KPrime.trivial())
    full = make_spec(ActionClass.KprimeAN, n + 1, kprime=KPrime.full())
    rng = np.random.default_rng(seed)
    cylinder_trials = max(1, trials // 10)

    failures, witness = 0, None
    with timed_context("dense open, r={0:g}".format(r)):
        for p in _de_sitter_points(rng, n, r, trials):
            dims = (orbit_dimension(trivial, p), orbit_dimension(full, p))
            labels = (orbit_label(trivial, p), orbit_label(full, p))
            if dims != (n, n) or not labels[0].same_orbit_type(labels[1]):
                failures += 1
                witness = witness or Witness(
                    p, dims, tuple(str(label) for label in labels))
        for p in _cylinder_points(rng, n, r, cylinder_trials):
            dims = (orbit_dimension(trivial, p), orbit_dimension(full, p))
            if dims != (1, n - 1):
                failures += 1
                witness = witness or Witness(p, dims)

    total = trials + cylinder_trials
    name = "dense_open(n={0}, r={1:g})".format(n, r)
    return VerificationReport.from_residual(
        name, failures / total, 0.0, total, seed, witness)


def _lattice(ambient_dim):
    if ambient_dim <= 4:
        values = (-2.0, -1.0, 0.0, 1.0, 2.0)
    elif ambient_dim <= 7:
        values = (-1.0, 0.0, 1.0)
    else:
        return np.zeros((0, ambient_dim))
    return np.array(list(itertools.product(values, repeat=ambient_dim)))


def orbit_inventory(spec, trials=1000, seed=0):
    """ Stratum name -> number of sampled points, over the integer lattice
    {-2, ..., 2}^{n+1} (degenerate strata) and `trials` random points.
    """
    rng = np.random.default_rng(seed)
    random_points = rng.standard_normal((trials, spec.ambient_dim))
    inventory = {}
    for p in itertools.chain(_lattice(spec.ambient_dim), random_points):
        stratum = orbit_label(spec, p).stratum.value
        inventory[stratum] = inventory.get(stratum, 0) + 1
    return inventory


def orbit_count_experiment(spec, trials=1000, seed=0):
    """ Compare the sampled stratum inventory of `spec` with the expected
    one; the residual is the number of strata in only one of the two.
    """
    inventory = orbit_inventory(spec, trials, seed)
    expected = expected_inventory(spec)
    found = frozenset(inventory)
    difference = sorted(found.symmetric_difference(expected))
    if difference:
        logger.info("%s: strata %s differ from the expected inventory",
                    spec.name, difference)
    witness = Witness((), (len(found),), sorted(found))
    name = "orbit_count({0})".format(spec.name)
    return VerificationReport.from_residual(
        name, len(difference), 0.0, trials, seed, witness)
