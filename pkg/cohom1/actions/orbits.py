"""
Orbit sampling and fundamental vector field ranks.
"""
from __future__ import absolute_import, division

import logging

import numpy as np

from cohom1.errors import DimensionMismatch
from cohom1.lie import RANK_TOL, iso_apply, numerical_rank
from .catalog import group_element


logger = logging.getLogger(__name__)

DEFAULT_SCALE = 3.0

# Principal orbits are searched for at several scales.
_RADII = (0.1, 1.0, 10.0)


def orbit_sample(spec, p, count, seed=0, scale=DEFAULT_SCALE):
    """ `count` points g_i(p) for group parameters drawn uniformly from
    [-scale, scale]^k, deterministic for a given seed.
    """
    if count < 0:
        raise ValueError("count must be >= 0, got {0}".format(count))
    if scale < 0:
        raise ValueError("scale must be >= 0, got {0!r}".format(scale))
    p = np.asarray(p, dtype=float)
    if p.shape != (spec.ambient_dim,):
        raise DimensionMismatch(spec.ambient_dim, p.shape)

    rng = np.random.default_rng(seed)
    params = rng.uniform(-scale, scale, size=(count, spec.group_dim))
    points = np.empty((count, spec.ambient_dim))
    for i, row in enumerate(params):
        points[i] = iso_apply(group_element(spec, row), p)
    return points


def _generators(action):
    """ The generator subalgebra of an ActionSpec, or a bare Subalgebra. """
    return getattr(action, "generators", action)


def fundamental_fields(action, points):
    """ The fields X p + v of the generators at `points`.

    Parameters
    ----------
    action : ActionSpec or Subalgebra
    points : array
        One point or a stack of points.

    Returns
    -------
    fields : ndarray
        Shape points.shape[:-1] + (number of generators, ambient_dim).
    """
    generators = _generators(action)
    points = np.asarray(points, dtype=float)
    if points.shape[-1] != generators.ambient_dim:
        raise DimensionMismatch(generators.ambient_dim, points.shape[-1])
    return np.stack(
        [g.fundamental_field(points) for g in generators], axis=-2)


def orbit_dimension(action, p, tol=RANK_TOL):
    """ Rank of (X, v) -> X p + v over the generators of `action`. """
    return int(numerical_rank(fundamental_fields(action, p), tol))


def principal_point(action, trials=10000, seed=0, tol=RANK_TOL):
    """ Search random points for an orbit of maximal dimension.

    Points are standard normal samples rescaled by 0.1, 1 and 10 in turn.

    Returns
    -------
    rank : int
        The largest orbit dimension found.
    point : ndarray
        A point where it is attained.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1, got {0}".format(trials))
    rng = np.random.default_rng(seed)
    ambient_dim = _generators(action).ambient_dim
    points = rng.standard_normal((trials, ambient_dim))
    points *= np.resize(_RADII, trials)[:, np.newaxis]
    ranks = numerical_rank(fundamental_fields(action, points), tol)
    index = int(np.argmax(ranks))
    logger.debug("%s: orbit dimensions %s over %d points",
                 getattr(action, "name", "subalgebra"),
                 sorted(set(np.atleast_1d(ranks).tolist())), trials)
    return int(ranks[index]), points[index]


def cohomogeneity(action, trials=10000, seed=0, tol=RANK_TOL):
    """ (n + 1) minus the largest sampled orbit dimension. """
    rank, _ = principal_point(action, trials, seed, tol)
    return _generators(action).ambient_dim - rank
