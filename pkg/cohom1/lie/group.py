"""
The isometry group I(M^{n+1}) = O(n,1) ⋉ M^{n+1} acting by p -> x p + u.
"""
from __future__ import absolute_import, division

import attr
import numpy as np
import scipy.linalg

from cohom1.errors import DimensionMismatch, SingularElement
from cohom1.geometry import metric
from .algebra import LieElement


GROUP_TOL = 1e-10


def _as_float_array(value):
    return np.array(value, dtype=float)


@attr.s(frozen=True, eq=False, repr=False)
class IsoElement(object):
    """ An isometry (x, u) of M^{n+1}.

    Construction does not insist on x being a Lorentz matrix, so that
    perturbed transformations can be handed to the isometry checks; use
    `is_lorentz` and `is_restricted` to test membership.
    """
    linear = attr.ib(converter=_as_float_array)
    trans = attr.ib(converter=_as_float_array)

    def __attrs_post_init__(self):
        d = self.trans.shape[0]
        if self.trans.ndim != 1 or self.linear.shape != (d, d):
            raise DimensionMismatch((d, d), self.linear.shape)

    @classmethod
    def identity(cls, ambient_dim):
        return cls(np.eye(ambient_dim), np.zeros(ambient_dim))

    @classmethod
    def translation(cls, u):
        u = np.asarray(u, dtype=float)
        return cls(np.eye(u.shape[0]), u)

    @classmethod
    def linear_map(cls, x):
        x = np.asarray(x, dtype=float)
        return cls(x, np.zeros(x.shape[0]))

    @classmethod
    def from_homogeneous(cls, matrix):
        matrix = np.asarray(matrix, dtype=float)
        return cls(matrix[:-1, :-1], matrix[:-1, -1])

    @property
    def ambient_dim(self):
        return self.trans.shape[0]

    def homogeneous(self):
        """ The (n+2)x(n+2) matrix [[x, u], [0, 1]]. """
        d = self.ambient_dim
        matrix = np.eye(d + 1)
        matrix[:d, :d] = self.linear
        matrix[:d, d] = self.trans
        return matrix

    def is_lorentz(self, tol=GROUP_TOL):
        x = self.linear
        j = metric(self.ambient_dim)
        scale = max(1.0, float(np.max(np.abs(x))) ** 2)
        return bool(np.max(np.abs(x.T.dot(j).dot(x) - j)) <= tol * scale)

    def is_restricted(self, tol=GROUP_TOL):
        """ True if x lies in SO°(n,1): Lorentz, det > 0 and x_{n+1,n+1} > 0.
        """
        return (self.is_lorentz(tol) and np.linalg.det(self.linear) > 0
                and self.linear[-1, -1] > 0)

    def __matmul__(self, other):
        return iso_compose(self, other)

    def __call__(self, p):
        return iso_apply(self, p)

    def allclose(self, other, atol=1e-12):
        return bool(np.allclose(self.linear, other.linear, rtol=0, atol=atol)
                    and np.allclose(self.trans, other.trans, rtol=0,
                                    atol=atol))

    def __repr__(self):
        return "IsoElement(linear={0}, trans={1})".format(
            np.array2string(self.linear, separator=", ").replace("\n", ""),
            np.array2string(self.trans, separator=", "))


def _check_dims(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(a.ambient_dim, b.ambient_dim)


def iso_compose(g, h):
    """ (x, u)(y, v) = (xy, u + xv). """
    _check_dims(g, h)
    return IsoElement(g.linear.dot(h.linear), g.trans + g.linear.dot(h.trans))


def _inverse_linear(x):
    try:
        return np.linalg.inv(x)
    except np.linalg.LinAlgError:
        raise SingularElement("Linear part is singular:\n{0}".format(x))


def iso_inverse(g):
    """ (x, u)^{-1} = (x^{-1}, -x^{-1} u). """
    inverse = _inverse_linear(g.linear)
    return IsoElement(inverse, -inverse.dot(g.trans))


def iso_apply(g, p):
    """ p -> x p + u, for a point or a stack of points. """
    p = np.asarray(p, dtype=float)
    if p.shape[-1] != g.ambient_dim:
        raise DimensionMismatch(g.ambient_dim, p.shape[-1])
    return p.dot(g.linear.T) + g.trans


def adjoint(g, y):
    """ Ad((x, u))(Y + v) = x Y x^{-1} + (x v - (x Y x^{-1}) u). """
    if g.ambient_dim != y.ambient_dim:
        raise DimensionMismatch(g.ambient_dim, y.ambient_dim)
    x = g.linear
    inverse = _inverse_linear(x)
    conjugated = x.dot(y.linear).dot(inverse)
    return LieElement(conjugated, x.dot(y.trans) - conjugated.dot(g.trans))


def exp_iso(y, t=1.0):
    """ Exp(t y) in O(n,1) ⋉ M^{n+1}.

    The element is embedded as the (n+2)x(n+2) matrix [[X, v], [0, 0]],
    whose exponential [[e^X, (∫ e^{sX} ds) v], [0, 1]] carries the
    translation part along without any special casing.
    """
    d = y.ambient_dim
    generator = np.zeros((d + 1, d + 1))
    generator[:d, :d] = y.linear
    generator[:d, d] = y.trans
    return IsoElement.from_homogeneous(scipy.linalg.expm(t * generator))


def reflection(ambient_dim, axis):
    """ The isometry flipping the sign of coordinate e_axis (1-based). """
    x = np.eye(ambient_dim)
    x[axis - 1, axis - 1] = -1.0
    return IsoElement.linear_map(x)
