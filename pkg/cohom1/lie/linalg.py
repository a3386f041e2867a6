"""
Rank-revealing helpers. Every threshold is relative to the largest singular
value so that results do not depend on the units a basis is given in.
"""
from __future__ import absolute_import, division

import numpy as np
import scipy.linalg


RANK_TOL = 1e-9


def numerical_rank(matrix, tol=RANK_TOL):
    """ Number of singular values above tol * (largest singular value).

    A matrix whose largest singular value is itself below `tol` has rank 0.
    Stacks of matrices are handled along the leading axes.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.size == 0:
        return np.zeros(matrix.shape[:-2], dtype=int)[()]
    s = np.linalg.svd(matrix, compute_uv=False)
    s_max = s[..., :1]
    ranks = np.sum(s > tol * s_max, axis=-1)
    return np.where(s_max[..., 0] > tol, ranks, 0)[()]


def row_space(rows, tol=RANK_TOL):
    """ Orthonormal rows spanning the row space of `rows`. """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    if rows.shape[0] == 0 or not np.any(rows):
        return np.zeros((0, rows.shape[1]))
    return scipy.linalg.orth(rows.T, rcond=tol).T


def left_kernel(rows, tol=RANK_TOL):
    """ Orthonormal coefficient vectors c with c @ rows = 0. """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    if not np.any(rows):
        return np.eye(rows.shape[0])
    return scipy.linalg.null_space(rows.T, rcond=tol).T


def span_residual(vectors, basis_rows):
    """ Largest Euclidean distance from `vectors` to span(basis_rows).

    `basis_rows` must be orthonormal (see `row_space`).
    """
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    if basis_rows.shape[0] == 0:
        projected = np.zeros_like(vectors)
    else:
        projected = vectors.dot(basis_rows.T).dot(basis_rows)
    if vectors.shape[0] == 0:
        return 0.0
    return float(np.max(np.linalg.norm(vectors - projected, axis=-1)))
