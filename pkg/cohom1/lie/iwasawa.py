"""
Iwasawa and restricted-root generators of so(n,1), and the closed forms of
the one-parameter groups they generate.

Indices below are 0-based: coordinate n-1 is e_n, coordinate n is e_{n+1}.
The a-generator is normalized so that [Y_a, N_b] = N_b for every N_b in the
root space g_alpha; for n = 2 the generators are exactly

    Y_k = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    Y_a = [[0, 0, 0], [0, 0, -1], [0, -1, 0]]
    Y_n = [[0, 1, 1], [-1, 0, 0], [1, 0, 0]]
"""
from __future__ import absolute_import, division

import itertools

import attr
import numpy as np

from .algebra import LieElement, cartan_involution


def _rotation_generator(size, i, j):
    x = np.zeros((size, size))
    x[j, i] = 1.0
    x[i, j] = -1.0
    return x


def _boost_generator(size, i):
    """ [[0, e_i], [e_i^t, 0]]: the p-direction along e_{i+1}. """
    x = np.zeros((size, size))
    x[i, size - 1] = x[size - 1, i] = 1.0
    return x


def root_generator(b):
    """ The element of g_alpha with parameter b in R^{n-1}. """
    b = np.atleast_1d(np.asarray(b, dtype=float))
    n = b.shape[0] + 1
    x = np.zeros((n + 1, n + 1))
    x[:n - 1, n - 1] = b
    x[:n - 1, n] = b
    x[n - 1, :n - 1] = -b
    x[n, :n - 1] = b
    return x


@attr.s(frozen=True)
class IwasawaBasis(object):
    """ Generators of k, a, n = g_alpha and k_0 inside so(n,1). """
    k_gens = attr.ib(converter=tuple)
    a_gen = attr.ib()
    n_gens = attr.ib(converter=tuple)
    k0_gens = attr.ib(converter=tuple)

    @property
    def ambient_dim(self):
        return self.a_gen.ambient_dim

    @property
    def negative_root_gens(self):
        """ g_{-alpha} = θ g_alpha. """
        return tuple(LieElement.rotation_like(cartan_involution(y.linear))
                     for y in self.n_gens)

    @property
    def p_gens(self):
        size = self.ambient_dim
        return tuple(LieElement.rotation_like(_boost_generator(size, i))
                     for i in range(size - 1))

    @property
    def algebra(self):
        """ A basis of so(n,1): k followed by a and n. """
        return self.k_gens + (self.a_gen,) + self.n_gens


def iwasawa_generators(n):
    """ Return the Iwasawa generators of so(n,1).

    Parameters
    ----------
    n : int
        The number of space-like coordinates, n >= 1.

    Returns
    -------
    IwasawaBasis
    """
    if n < 1:
        raise ValueError("so(n,1) needs n >= 1, got {0}".format(n))
    size = n + 1
    k_gens = [LieElement.rotation_like(_rotation_generator(size, i, j))
              for i, j in itertools.combinations(range(n), 2)]
    k0_gens = [LieElement.rotation_like(_rotation_generator(size, i, j))
               for i, j in itertools.combinations(range(n - 1), 2)]
    a_gen = LieElement.rotation_like(-_boost_generator(size, n - 1))
    n_gens = [LieElement.rotation_like(root_generator(b))
              for b in np.eye(n - 1)]
    return IwasawaBasis(k_gens, a_gen, n_gens, k0_gens)


def _frozen(x):
    x = np.asarray(x, dtype=float)
    x.setflags(write=False)
    return x


_M3 = iwasawa_generators(2)
Y_K = _frozen(_M3.k_gens[0].linear)
Y_A = _frozen(_M3.a_gen.linear)
Y_N = _frozen(_M3.n_gens[0].linear)

# The generator of so(1,1) used for M^2.
Y_SO11 = _frozen([[0.0, 1.0], [1.0, 0.0]])


def rotation_k(t):
    """ k_t = Exp(t Y_k) on M^3. """
    c, s = np.cos(t), np.sin(t)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def boost_a(t, n=2):
    """ a_t = Exp(t Y_a) on M^{n+1}. """
    x = np.eye(n + 1)
    c, s = np.cosh(t), np.sinh(t)
    x[n - 1:, n - 1:] = [[c, -s], [-s, c]]
    return x


def nilpotent_n(b):
    """ Exp(N_b) = [[I, b, b], [-b^t, 1 - |b|^2/2, -|b|^2/2],
    [b^t, |b|^2/2, 1 + |b|^2/2]].
    """
    b = np.atleast_1d(np.asarray(b, dtype=float))
    n = b.shape[0] + 1
    half = 0.5 * b.dot(b)
    x = np.eye(n + 1)
    x[:n - 1, n - 1] = b
    x[:n - 1, n] = b
    x[n - 1, :n - 1] = -b
    x[n, :n - 1] = b
    x[n - 1:, n - 1:] = [[1.0 - half, -half], [half, 1.0 + half]]
    return x


def boost_so11(t):
    """ Exp(t Y) for the so(1,1) generator of M^2. """
    c, s = np.cosh(t), np.sinh(t)
    return np.array([[c, s], [s, c]])
