"""
Vectors of the Minkowski space M^{n+1} and their causal character.

Points are plain float arrays of length n+1 whose last coordinate is the
time-like one. Every function here accepts a single vector or a stack of
vectors along the leading axes.
"""
from __future__ import absolute_import, division

import enum

import numpy as np

from cohom1.errors import DimensionMismatch


DEFAULT_TOL = 1e-9


def minkowski_vector(coords, ambient_dim=None):
    """ Return `coords` as a validated Minkowski vector.

    Parameters
    ----------
    coords : sequence of float
        The n+1 coordinates, time-like coordinate last.
    ambient_dim : int, optional
        If given, the expected value of n+1.

    Raises
    ------
    DimensionMismatch
        If the vector is not one-dimensional of length >= 2, or its length
        differs from `ambient_dim`.
    ValueError
        If an entry is not finite.
    """
    v = np.array(coords, dtype=float)
    if v.ndim != 1 or v.shape[0] < 2:
        raise DimensionMismatch(ambient_dim or ">= 2", v.shape)
    if ambient_dim is not None and v.shape[0] != ambient_dim:
        raise DimensionMismatch(ambient_dim, v.shape[0])
    if not np.all(np.isfinite(v)):
        raise ValueError("Minkowski vector entries must be finite: {0!r}"
                         .format(coords))
    return v


def basis_vector(i, ambient_dim):
    """ The standard basis vector e_i, counted from 1 like e_1..e_{n+1}. """
    if not 1 <= i <= ambient_dim:
        raise ValueError("No basis vector e_{0} in dimension {1}".format(
            i, ambient_dim))
    e = np.zeros(ambient_dim)
    e[i - 1] = 1.0
    return e


def w0(ambient_dim):
    """ The light-like vector e_n - e_{n+1} fixed by K_0 N. """
    return basis_vector(ambient_dim - 1, ambient_dim) - \
        basis_vector(ambient_dim, ambient_dim)


def metric(ambient_dim):
    """ J = diag(1, ..., 1, -1). """
    j = np.eye(ambient_dim)
    j[-1, -1] = -1.0
    return j


def lorentz_inner(u, v):
    """ <u, v> = sum_{i<=n} u_i v_i - u_{n+1} v_{n+1}. """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape[-1] != v.shape[-1]:
        raise DimensionMismatch(u.shape[-1], v.shape[-1])
    return (np.sum(u[..., :-1] * v[..., :-1], axis=-1)
            - u[..., -1] * v[..., -1])


def _norm_terms(v):
    v = np.asarray(v, dtype=float)
    spatial = np.sum(v[..., :-2] ** 2, axis=-1)
    cross = (v[..., -2] - v[..., -1]) * (v[..., -2] + v[..., -1])
    return spatial, cross


def lorentz_norm_sq(v):
    """ <v, v>, with v_n^2 - v_{n+1}^2 taken in the null frame as
    (v_n - v_{n+1})(v_n + v_{n+1}).

    The product form is exact on W^n, where v_n + v_{n+1} = 0, however far
    out along w0 the point lies.
    """
    spatial, cross = _norm_terms(v)
    return spatial + cross


def time_reversal(p):
    """ (u_1, ..., u_n, u_{n+1}) -> (u_1, ..., u_n, -u_{n+1}). """
    q = np.array(p, dtype=float)
    q[..., -1] *= -1.0
    return q


@enum.unique
class CausalClass(enum.Enum):
    zero = "Zero"
    spacelike = "Spacelike"
    timelike_future = "TimelikeFuture"
    timelike_past = "TimelikePast"
    lightlike_future = "LightlikeFuture"
    lightlike_past = "LightlikePast"

    @property
    def is_timelike(self):
        return self in (CausalClass.timelike_future,
                        CausalClass.timelike_past)

    @property
    def is_lightlike(self):
        return self in (CausalClass.lightlike_future,
                        CausalClass.lightlike_past)

    @property
    def is_future(self):
        return self in (CausalClass.timelike_future,
                        CausalClass.lightlike_future)


def is_light_like(v, tol=DEFAULT_TOL):
    """ True if v lies on the light cone, zero included.

    The cone is thickened relative to the two terms of <v,v>::

        |<v,v>| <= tol (1 + sum_{i<n} v_i^2 + |v_n^2 - v_{n+1}^2|)

    so that the test is stable for large vectors. A point r e_1 + s w0 of
    W^n has scale 1 + r^2 whatever s is, and stays off the cone.
    """
    spatial, cross = _norm_terms(v)
    return bool(abs(spatial + cross) <= tol * (1.0 + spatial + abs(cross)))


def causal_class(v, tol=DEFAULT_TOL):
    """ Return the causal character of v.

    Time orientation is read off the sign of the last coordinate v_{n+1},
    so that e_{n+1} is future pointing and w0 = e_n - e_{n+1} is past
    pointing.
    """
    if tol <= 0:
        raise ValueError("tol must be positive, got {0!r}".format(tol))
    v = np.asarray(v, dtype=float)
    if np.max(np.abs(v)) <= tol:
        return CausalClass.zero
    future = v[-1] > 0
    if is_light_like(v, tol):
        if future:
            return CausalClass.lightlike_future
        return CausalClass.lightlike_past
    if lorentz_norm_sq(v) > 0:
        return CausalClass.spacelike
    if future:
        return CausalClass.timelike_future
    return CausalClass.timelike_past
