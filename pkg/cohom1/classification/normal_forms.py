"""
Translation stripping: conjugating X + φ(X) by a pure translation (I, c)
gives X + φ(X) - X c, so the translation parts of a subalgebra with known
linear parts are removed by solving X c = φ(X) modulo a set of free vectors.
"""
from __future__ import absolute_import, division

import logging

import numpy as np

from cohom1.errors import NotNormalForm
from cohom1.lie import IsoElement, lift
from .alignment import conjugate


logger = logging.getLogger(__name__)

IDENTITY_ATOL = 1e-14


def strip_translations(h, linear_parts, free_vectors=(), tol=1e-8):
    """ Solve X_j c + Σ_i a_ji f_i = φ(X_j) in the least-squares sense.

    Parameters
    ----------
    h : Subalgebra
        A subalgebra whose projection to so(n,1) contains `linear_parts`.
    linear_parts : sequence of arrays
        The matrices X_j.
    free_vectors : sequence of arrays
        The vectors f_i the translation parts are reduced modulo.
    tol : float
        Relative tolerance for the lift of each X_j into h.

    Returns
    -------
    c : ndarray
        The translation of the conjugator (I, c).
    remainders : ndarray
        a_ji, shape (len(linear_parts), len(free_vectors)).
    residual : float
        Relative misfit of the least-squares solution.
    """
    d = h.ambient_dim
    free = np.array(free_vectors, dtype=float).reshape(-1, d)
    k, m = len(linear_parts), free.shape[0]

    system = np.zeros((k * d, d + k * m))
    rhs = np.zeros(k * d)
    for j, x in enumerate(linear_parts):
        element, lift_residual = lift(h, x)
        if lift_residual > tol:
            raise NotNormalForm(
                "Linear part not in the subalgebra (residual {0:.3e}):\n{1}"
                .format(lift_residual, np.asarray(x)))
        rows = slice(j * d, (j + 1) * d)
        system[rows, :d] = x
        system[rows, d + j * m:d + (j + 1) * m] = free.T
        rhs[rows] = element.trans

    solution, _, _, _ = np.linalg.lstsq(system, rhs, rcond=None)
    misfit = np.linalg.norm(system.dot(solution) - rhs)
    residual = misfit / max(1.0, np.linalg.norm(rhs))
    logger.debug("Translation strip: c = %s, residual %.3e",
                 solution[:d], residual)
    return solution[:d], solution[d:].reshape(k, m), float(residual)


class ConjugatorChain(object):
    """ Accumulates conjugating isometries and the conjugated subalgebra.

    Conjugators within IDENTITY_ATOL of the identity are not recorded.
    """
    def __init__(self, h):
        self.original = h
        self.current = h
        self.conjugators = []
        self.reflected = False

    def push(self, g, reflection=False):
        identity = IsoElement.identity(g.ambient_dim)
        if g.allclose(identity, atol=IDENTITY_ATOL):
            return
        self.conjugators.append(g)
        self.current = conjugate(self.current, g)
        self.reflected = self.reflected or reflection

    def push_translation(self, c):
        self.push(IsoElement.translation(c))
