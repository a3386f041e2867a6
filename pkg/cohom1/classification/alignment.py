"""
Restricted Lorentz transformations moving lines and planes of M^2 and M^3
into their canonical positions.
"""
from __future__ import absolute_import, division

import enum
import math

import numpy as np
import scipy.linalg

from cohom1.errors import DimensionMismatch
from cohom1.geometry import metric
from cohom1.lie import IsoElement, Subalgebra, adjoint, rotation_k


METRIC_TOL = 1e-9


@enum.unique
class MetricType(enum.Enum):
    spacelike = "Spacelike"
    timelike = "Timelike"
    lightlike = "Lightlike"
    # planes
    riemannian = "Riemannian"
    lorentzian = "Lorentzian"
    degenerate = "Degenerate"


def gram_signature(vectors, tol=METRIC_TOL):
    """ (positive, negative, zero) eigenvalue counts of the Lorentz form
    restricted to span(vectors).

    An eigenvalue counts as zero below tol times the trace magnitude of the
    restricted Gram matrix (at least tol).
    """
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    basis = scipy.linalg.orth(vectors.T)
    gram = basis.T.dot(metric(basis.shape[0])).dot(basis)
    eigenvalues = np.linalg.eigvalsh(gram)
    threshold = tol * max(1.0, float(np.sum(np.abs(eigenvalues))))
    return (int(np.sum(eigenvalues > threshold)),
            int(np.sum(eigenvalues < -threshold)),
            int(np.sum(np.abs(eigenvalues) <= threshold)))


_TYPES = {
    (1, 0, 0): MetricType.spacelike,
    (0, 1, 0): MetricType.timelike,
    (0, 0, 1): MetricType.lightlike,
    (2, 0, 0): MetricType.riemannian,
    (1, 1, 0): MetricType.lorentzian,
    (1, 0, 1): MetricType.degenerate,
}


def metric_type(vectors, tol=METRIC_TOL):
    signature = gram_signature(vectors, tol)
    try:
        return _TYPES[signature]
    except KeyError:
        raise ValueError(
            "Unexpected signature {0} for a line or plane".format(signature))


def lorentz_normal(vectors):
    """ A vector m with <m, v> = 0 for every v in `vectors` (plane in M^3).
    """
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    normal = scipy.linalg.null_space(vectors.dot(metric(vectors.shape[1])))
    if normal.shape[1] != 1:
        raise ValueError("Expected a plane, got {0} vectors of rank {1}"
                         .format(vectors.shape[0], 3 - normal.shape[1]))
    return normal[:, 0]


def boost_e1(beta):
    """ Exp of the boost generator in the e1, e3 plane of M^3. """
    c, s = math.cosh(beta), math.sinh(beta)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [s, 0.0, c]])


def boost_m2(beta):
    c, s = math.cosh(beta), math.sinh(beta)
    return np.array([[c, s], [s, c]])


def align_line_m3(v, tol=METRIC_TOL):
    """ g in SO°(2,1) mapping the line R v to Re1, Re3 or l = R w0.

    Space-like lines go to Re1, time-like lines to Re3 and light-like lines
    to l, so the canonical lines themselves give the identity.

    Returns
    -------
    kind : MetricType
    g : IsoElement
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise DimensionMismatch(3, v.shape)
    v = v / np.linalg.norm(v)
    kind = metric_type(v, tol)

    if kind is MetricType.spacelike:
        if v[0] < 0:
            v = -v
        k = rotation_k(-math.atan2(v[1], v[0]))
        rho = math.hypot(v[0], v[1])
        linear = boost_e1(math.atanh(-v[2] / rho)).dot(k)
    elif kind is MetricType.timelike:
        if v[2] < 0:
            v = -v
        rho = math.hypot(v[0], v[1])
        if rho <= tol:
            return kind, IsoElement.identity(3)
        k = rotation_k(-math.atan2(v[1], v[0]))
        linear = boost_e1(math.atanh(-rho / v[2])).dot(k)
    else:
        if v[2] < 0:
            v = -v
        # -w0 = e3 - e2 is future pointing with spatial part along -e2
        linear = rotation_k(-0.5 * math.pi - math.atan2(v[1], v[0]))
    return kind, IsoElement.linear_map(linear)


def align_line_m2(v, tol=METRIC_TOL):
    """ g mapping R v to Re1, Re2 or R w0 = R(e1 - e2) in M^2.

    The null line R(e1 + e2) is not moved by SO°(1,1); it is reflected onto
    R w0 by e1 -> -e1.

    Returns
    -------
    kind : MetricType
    g : IsoElement
    reflected : bool
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (2,):
        raise DimensionMismatch(2, v.shape)
    v = v / np.linalg.norm(v)
    kind = metric_type(v, tol)

    if kind is MetricType.spacelike:
        if v[0] < 0:
            v = -v
        return kind, IsoElement.linear_map(
            boost_m2(math.atanh(-v[1] / v[0]))), False
    elif kind is MetricType.timelike:
        if v[1] < 0:
            v = -v
        return kind, IsoElement.linear_map(
            boost_m2(math.atanh(-v[0] / v[1]))), False
    if v[0] * v[1] < 0:
        return kind, IsoElement.identity(2), False
    return kind, IsoElement.linear_map(np.diag([-1.0, 1.0])), True


def conjugate(h, g):
    """ Ad(g)(h) as an orthonormalized subalgebra. """
    return Subalgebra.spanned_by([adjoint(g, e) for e in h], h.ambient_dim)
