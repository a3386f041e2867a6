"""
The SO°(n,1)-orbit strata of M^{n+1} and the degenerate pieces W^n and
Z^{n-1}(r) singled out by the parabolic subgroup K_0 A N.
"""
from __future__ import absolute_import, division

import enum
import math

import attr
import numpy as np

from cohom1.errors import DimensionMismatch
from .minkowski import (
    DEFAULT_TOL, CausalClass, causal_class, lorentz_norm_sq
)


@enum.unique
class Stratum(enum.Enum):
    origin = "Origin"
    light_cone_plus = "LightConePlus"
    light_cone_minus = "LightConeMinus"
    hyperbolic_plus = "HyperbolicPlus"
    hyperbolic_minus = "HyperbolicMinus"
    de_sitter = "DeSitter"
    # M^2 only: the de Sitter "space" and the light cone fall apart.
    de_sitter_plus = "DeSitterPlus"
    de_sitter_minus = "DeSitterMinus"
    light_ray_pp = "LightRay(+,+)"
    light_ray_pm = "LightRay(+,-)"
    light_ray_mp = "LightRay(-,+)"
    light_ray_mm = "LightRay(-,-)"


# Indexed by (sign of v_1 > 0, future pointing)
_LIGHT_RAYS = {
    (True, True): Stratum.light_ray_pp,
    (True, False): Stratum.light_ray_pm,
    (False, True): Stratum.light_ray_mp,
    (False, False): Stratum.light_ray_mm,
}

_RADIAL = frozenset([
    Stratum.hyperbolic_plus, Stratum.hyperbolic_minus, Stratum.de_sitter,
    Stratum.de_sitter_plus, Stratum.de_sitter_minus,
])


def _check_radius(instance, attribute, value):
    if instance.stratum in _RADIAL:
        if value is None or not value > 0:
            raise ValueError(
                "{0} needs a positive radius, got {1!r}".format(
                    instance.stratum.value, value))
    elif value is not None:
        raise ValueError(
            "{0} carries no radius".format(instance.stratum.value))


@attr.s(frozen=True)
class RegionLabel(object):
    """ A stratum of the SO°(n,1) orbit decomposition, with its radius.

    >>> quadric_label([0.0, 0.0, 2.0])
    RegionLabel(stratum=<Stratum.hyperbolic_plus: 'HyperbolicPlus'>, r=2.0)
    """
    stratum = attr.ib(validator=attr.validators.instance_of(Stratum))
    r = attr.ib(default=None, validator=_check_radius)

    def __str__(self):
        if self.r is None:
            return self.stratum.value
        return "{0}({1!r})".format(self.stratum.value, self.r)


def quadric_label(v, tol=DEFAULT_TOL):
    """ Return the SO°(n,1)-orbit of v.

    In M^2 the de Sitter "circle" splits by the sign of v_1 and the light
    cone into four rays, labelled by (sign v_1, time orientation).
    """
    v = np.asarray(v, dtype=float)
    kind = causal_class(v, tol)
    planar = v.shape[0] == 2

    if kind is CausalClass.zero:
        return RegionLabel(Stratum.origin)
    if kind.is_lightlike:
        if planar:
            return RegionLabel(_LIGHT_RAYS[(v[0] > 0, kind.is_future)])
        if kind.is_future:
            return RegionLabel(Stratum.light_cone_plus)
        return RegionLabel(Stratum.light_cone_minus)

    q = lorentz_norm_sq(v)
    if kind.is_timelike:
        r = math.sqrt(-q)
        if kind.is_future:
            return RegionLabel(Stratum.hyperbolic_plus, r)
        return RegionLabel(Stratum.hyperbolic_minus, r)

    r = math.sqrt(q)
    if planar:
        if v[0] > 0:
            return RegionLabel(Stratum.de_sitter_plus, r)
        return RegionLabel(Stratum.de_sitter_minus, r)
    return RegionLabel(Stratum.de_sitter, r)


def quadric_label_2d(v, tol=DEFAULT_TOL):
    """ The M^2 refinement, for callers that hand over a 2-vector block. """
    v = np.asarray(v, dtype=float)
    if v.shape != (2,):
        raise DimensionMismatch(2, v.shape)
    return quadric_label(v, tol)


def in_w_subspace(p, tol=DEFAULT_TOL):
    """ True if p lies in W^n = R^{n-1} + R w0, i.e. p_n + p_{n+1} = 0. """
    p = np.asarray(p, dtype=float)
    if p.shape[-1] < 3:
        raise DimensionMismatch(">= 3", p.shape[-1])
    return bool(abs(p[-2] + p[-1]) <= tol)


def in_cylinder(p, r, tol=DEFAULT_TOL):
    """ True if p lies on Z^{n-1}(r) = W^n ∩ dS^n(r) = S^{n-2}(r) x R w0. """
    if not r > 0:
        raise ValueError("Cylinder radius must be positive, got {0!r}"
                         .format(r))
    p = np.asarray(p, dtype=float)
    if not in_w_subspace(p, tol):
        return False
    radius = math.sqrt(np.dot(p[:-2], p[:-2]))
    return bool(abs(radius - r) <= tol * max(1.0, r))
