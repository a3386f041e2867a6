"""
Closed-form orbit labels of the catalog actions.

In M^3 the screw families are described in the null frame
p = x e1 + y (e2 - e3) + z (e2 + e3), i.e. x = p1, y = (p2 - p3)/2 and
z = (p2 + p3)/2. Along A_λ ⋉ l the coordinates move as
x -> x + λt, z -> e^{-t} z, which leaves I_λ = z e^{x/λ} fixed; along
N_λ x l the quantity J_λ = p1 - (p2 + p3)²/(2λ) is fixed.

I_λ itself overflows or underflows once |x/λ| passes about 700, so the
A_λ labels carry ln|I_λ| = ln|z| + x/λ and leave the sign to the
Upper/Lower stratum.
"""
from __future__ import absolute_import, division

import enum
import math

import attr
import numpy as np

from cohom1.errors import DimensionMismatch, UnsupportedAction
from cohom1.geometry import (
    DEFAULT_TOL, Stratum, in_w_subspace, quadric_label, quadric_label_2d,
)
from .catalog import ActionClass, KPrimeKind, TRANSLATION_CLASSES


@enum.unique
class OrbitStratum(enum.Enum):
    leaf = "Leaf"
    axis = "Axis"
    cylinder = "Cylinder"
    line = "Line"
    upper = "Upper"
    lower = "Lower"
    degenerate = "Degenerate"
    parabolic = "Parabolic"
    # AN and K'AN
    ray_plus_w0 = "RayPlusW0"
    ray_minus_w0 = "RayMinusW0"
    light_cone_plus_punctured = "LightConePlusPunctured"
    light_cone_minus_punctured = "LightConeMinusPunctured"
    de_sitter_upper = "DeSitterUpper"
    de_sitter_lower = "DeSitterLower"


def _as_float_tuple(values):
    return tuple(float(v) for v in values)


def _close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


@attr.s(frozen=True)
class OrbitLabel(object):
    """ Identifies the orbit of a catalog action through a point.

    Labels with `provisional` set come from a K' for which no orbit
    description is known in closed form; they are a construction of this
    package (norm of the rotated block plus the fixed coordinates).
    """
    action_class = attr.ib(validator=attr.validators.instance_of(ActionClass))
    stratum = attr.ib(
        validator=attr.validators.instance_of((Stratum, OrbitStratum)))
    invariants = attr.ib(default=(), converter=_as_float_tuple)
    provisional = attr.ib(default=False)

    def same_orbit_type(self, other, tol=1e-8):
        """ Compare stratum and invariants, ignoring the action class. """
        if self.stratum is not other.stratum:
            return False
        if len(self.invariants) != len(other.invariants):
            return False
        return all(_close(a, b, tol)
                   for a, b in zip(self.invariants, other.invariants))

    def matches(self, other, tol=1e-8):
        """ True if both labels name the same orbit of the same action. """
        return (self.action_class is other.action_class
                and self.same_orbit_type(other, tol))

    def __str__(self):
        text = "{0}/{1}".format(self.action_class.value, self.stratum.value)
        if self.invariants:
            text += "[{0}]".format(
                ";".join("{0:.12g}".format(v) for v in self.invariants))
        if self.provisional:
            text += "*"
        return text


def i_invariant(p, lam):
    """ I_λ(p) = z e^{x/λ}, constant on the orbits of A_λ ⋉ l (λ > 0). """
    p = np.asarray(p, dtype=float)
    return 0.5 * (p[..., 1] + p[..., 2]) * np.exp(p[..., 0] / lam)


def log_i_invariant(p, lam):
    """ ln|I_λ(p)| = ln|z| + x/λ, finite for every p off W^2. """
    p = np.asarray(p, dtype=float)
    return np.log(np.abs(0.5 * (p[..., 1] + p[..., 2]))) + p[..., 0] / lam


def j_invariant(p, lam):
    """ J_λ(p) = p1 - (p2 + p3)²/(2λ), constant on the orbits of N_λ x l.
    """
    p = np.asarray(p, dtype=float)
    return p[..., 0] - (p[..., 1] + p[..., 2]) ** 2 / (2.0 * lam)


def _sign_stratum(value):
    return OrbitStratum.upper if value > 0 else OrbitStratum.lower


def _quadric(action_class, p, tol):
    region = quadric_label(p, tol)
    invariants = () if region.r is None else (region.r,)
    return OrbitLabel(action_class, region.stratum, invariants)


def _translation_label(action_class, p):
    if action_class is ActionClass.R1:
        value = p[1]
    elif action_class is ActionClass.M1:
        value = p[0]
    elif action_class is ActionClass.W1:
        value = p[0] + p[1]
    elif action_class is ActionClass.R2:
        value = p[2]
    elif action_class is ActionClass.M2:
        value = p[0]
    else:
        value = p[1] + p[2]
    return OrbitLabel(action_class, OrbitStratum.leaf, (value,))


def _parabolic_label(spec, p, tol):
    """ Orbits of K'AN on M^{n+1} (and of AN on M^3). """
    action_class = spec.action_class
    region = quadric_label(p, tol)
    stratum = region.stratum

    if stratum is Stratum.origin:
        return OrbitLabel(action_class, stratum)
    if stratum in (Stratum.hyperbolic_plus, Stratum.hyperbolic_minus):
        return OrbitLabel(action_class, stratum, (region.r,))
    if stratum in (Stratum.light_cone_plus, Stratum.light_cone_minus):
        # A null vector lies in W^n iff it is a multiple of w0; w0 is past
        # pointing.
        if in_w_subspace(p, tol * max(1.0, np.max(np.abs(p)))):
            if stratum is Stratum.light_cone_minus:
                return OrbitLabel(action_class, OrbitStratum.ray_plus_w0)
            return OrbitLabel(action_class, OrbitStratum.ray_minus_w0)
        if stratum is Stratum.light_cone_plus:
            return OrbitLabel(action_class,
                              OrbitStratum.light_cone_plus_punctured)
        return OrbitLabel(action_class,
                          OrbitStratum.light_cone_minus_punctured)

    r = region.r
    pairing = p[-2] + p[-1]
    if abs(pairing) > tol * max(1.0, r):
        if pairing > 0:
            return OrbitLabel(action_class, OrbitStratum.de_sitter_upper, (r,))
        return OrbitLabel(action_class, OrbitStratum.de_sitter_lower, (r,))

    # On the cylinder Z^{n-1}(r) the orbits are the lines L + R w0 with L
    # running over S^{n-2}(r)/K'.
    x = p[:-2]
    kprime = spec.kprime
    if kprime is None or kprime.kind is KPrimeKind.trivial:
        return OrbitLabel(action_class, OrbitStratum.cylinder,
                          (r,) + tuple(x))
    if kprime.kind is KPrimeKind.full:
        return OrbitLabel(action_class, OrbitStratum.cylinder, (r,))
    m = kprime.m
    invariants = (r, math.sqrt(np.dot(x[:m], x[:m]))) + tuple(x[m:])
    return OrbitLabel(action_class, OrbitStratum.cylinder, invariants,
                      provisional=True)


def orbit_label(spec, p, tol=DEFAULT_TOL):
    """ The label of the orbit of `spec` through `p`.

    Parameters
    ----------
    spec : ActionSpec
    p : array
        A point of M^{n+1}, n + 1 = spec.ambient_dim.
    tol : float
        Absolute tolerance for the stratum decisions.

    Returns
    -------
    OrbitLabel
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (spec.ambient_dim,):
        raise DimensionMismatch(spec.ambient_dim, p.shape)

    action_class = spec.action_class
    if action_class in TRANSLATION_CLASSES:
        return _translation_label(action_class, p)
    elif action_class in (ActionClass.SO11, ActionClass.SO21,
                          ActionClass.SOn1):
        return _quadric(action_class, p, tol)
    elif action_class in (ActionClass.AN, ActionClass.KprimeAN):
        return _parabolic_label(spec, p, tol)
    elif action_class is ActionClass.KxRe3:
        radius = math.hypot(p[0], p[1])
        if radius <= tol:
            return OrbitLabel(action_class, OrbitStratum.axis)
        return OrbitLabel(action_class, OrbitStratum.cylinder, (radius,))
    elif action_class is ActionClass.AxRe1:
        region = quadric_label_2d(p[1:], tol)
        invariants = () if region.r is None else (region.r,)
        return OrbitLabel(action_class, region.stratum, invariants)

    x = p[0]
    z = 0.5 * (p[1] + p[2])
    if action_class is ActionClass.ALambdaEll:
        if abs(z) <= tol:
            if spec.lam == 0:
                return OrbitLabel(action_class, OrbitStratum.line, (x,))
            return OrbitLabel(action_class, OrbitStratum.degenerate)
        if spec.lam == 0:
            return OrbitLabel(action_class, _sign_stratum(z), (x,))
        return OrbitLabel(action_class, _sign_stratum(z),
                          (log_i_invariant(p, spec.lam),))
    elif action_class is ActionClass.NxEll:
        if abs(z) <= tol:
            return OrbitLabel(action_class, OrbitStratum.line, (x,))
        return OrbitLabel(action_class, _sign_stratum(z), (z,))
    elif action_class is ActionClass.N1xEll:
        return OrbitLabel(action_class, OrbitStratum.parabolic,
                          (j_invariant(p, spec.lam),))
    raise UnsupportedAction(
        "No orbit label for {0} on M^{1}".format(spec.name, spec.ambient_dim))
