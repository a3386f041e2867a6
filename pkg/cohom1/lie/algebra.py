"""
Elements and subalgebras of iso(M^{n+1}) = so(n,1) ⊕_φ M^{n+1}.

An element X + u is stored as the pair (linear, trans). The reference inner
product <(X,u),(Y,v)> = trace(X^t Y) + u.v is the Euclidean dot product of
the flattened pairs, see `LieElement.flat`.
"""
from __future__ import absolute_import, division

import itertools

import attr
import numpy as np

from cohom1.errors import DimensionMismatch, InvalidElement, InvalidSubalgebra
from cohom1.geometry import metric
from .linalg import (
    RANK_TOL, left_kernel, numerical_rank, row_space, span_residual,
)


# so(n,1) membership is checked relative to the size of the matrix, loose
# enough to accept the output of a conjugation by a large boost.
ALGEBRA_TOL = 1e-9


def _as_float_array(value):
    return np.array(value, dtype=float)


def is_lorentz_algebra(x, tol=ALGEBRA_TOL):
    """ True if J X^t J = -X, i.e. X = [[B, b], [b^t, 0]] with B in so_n. """
    x = np.asarray(x, dtype=float)
    j = metric(x.shape[0])
    scale = max(1.0, float(np.max(np.abs(x))))
    return bool(np.max(np.abs(j.dot(x.T).dot(j) + x)) <= tol * scale)


def cartan_involution(x):
    """ θ(X) = -X^t. """
    return -np.asarray(x, dtype=float).T


@attr.s(frozen=True, eq=False, repr=False)
class LieElement(object):
    """ An element X + u of iso(M^{n+1}). """
    linear = attr.ib(converter=_as_float_array)
    trans = attr.ib(converter=_as_float_array)

    def __attrs_post_init__(self):
        d = self.trans.shape[0]
        if self.trans.ndim != 1 or self.linear.shape != (d, d):
            raise DimensionMismatch(
                (d, d), self.linear.shape,
                "Linear part {0} does not act on vectors of length {1}"
                .format(self.linear.shape, d))
        if not (np.all(np.isfinite(self.linear))
                and np.all(np.isfinite(self.trans))):
            raise InvalidElement("Lie algebra element must be finite")
        if not is_lorentz_algebra(self.linear):
            raise InvalidElement(
                "Linear part is not in so({0},1):\n{1}".format(
                    d - 1, self.linear))

    @classmethod
    def zero(cls, ambient_dim):
        return cls(np.zeros((ambient_dim, ambient_dim)),
                   np.zeros(ambient_dim))

    @classmethod
    def translation(cls, u):
        u = np.asarray(u, dtype=float)
        return cls(np.zeros((u.shape[0], u.shape[0])), u)

    @classmethod
    def rotation_like(cls, x):
        """ The element X + 0. """
        x = np.asarray(x, dtype=float)
        return cls(x, np.zeros(x.shape[0]))

    @classmethod
    def from_flat(cls, vector, ambient_dim):
        d = ambient_dim
        vector = np.asarray(vector, dtype=float)
        return cls(vector[:d * d].reshape(d, d), vector[d * d:])

    @property
    def ambient_dim(self):
        return self.trans.shape[0]

    @property
    def flat(self):
        return np.concatenate([self.linear.ravel(), self.trans])

    @property
    def is_translation(self):
        return not np.any(self.linear)

    def norm(self):
        return float(np.linalg.norm(self.flat))

    def fundamental_field(self, p):
        """ The tangent vector X p + u at p (p may be a stack of points). """
        p = np.asarray(p, dtype=float)
        return p.dot(self.linear.T) + self.trans

    def _check(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, other.ambient_dim)
        return None

    def __add__(self, other):
        result = self._check(other)
        if result is NotImplemented:
            return result
        return LieElement(self.linear + other.linear, self.trans + other.trans)

    def __sub__(self, other):
        result = self._check(other)
        if result is NotImplemented:
            return result
        return LieElement(self.linear - other.linear, self.trans - other.trans)

    def __mul__(self, scalar):
        return LieElement(scalar * self.linear, scalar * self.trans)

    __rmul__ = __mul__

    def __neg__(self):
        return LieElement(-self.linear, -self.trans)

    def allclose(self, other, atol=1e-12):
        self._check(other)
        return bool(np.allclose(self.flat, other.flat, rtol=0.0, atol=atol))

    def __repr__(self):
        return "LieElement(linear={0}, trans={1})".format(
            np.array2string(self.linear, separator=", ").replace("\n", ""),
            np.array2string(self.trans, separator=", "))


def bracket(a, b):
    """ [X + u, Y + v] = (XY - YX) + (Xv - Yu). """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(a.ambient_dim, b.ambient_dim)
    x, y = a.linear, b.linear
    return LieElement(x.dot(y) - y.dot(x), x.dot(b.trans) - y.dot(a.trans))


@attr.s(frozen=True, eq=False, repr=False)
class Subalgebra(object):
    """ A finite, linearly independent basis of elements of iso(M^{n+1}).

    Closure under the bracket is not enforced here since the classifier must
    be able to receive (and reject) non-closed inputs; see
    `subalgebra_closure_check`.

    Parameters
    ----------
    basis : sequence of LieElement
        The spanning elements; may be empty.
    ambient_dim : int
        n + 1.
    """
    basis = attr.ib(converter=tuple)
    ambient_dim = attr.ib(validator=attr.validators.instance_of(int))
    tol = attr.ib(default=RANK_TOL)

    def __attrs_post_init__(self):
        for element in self.basis:
            if element.ambient_dim != self.ambient_dim:
                raise DimensionMismatch(self.ambient_dim, element.ambient_dim)
        if self.basis:
            rank = numerical_rank(self.matrix, self.tol)
            if rank != len(self.basis):
                raise InvalidSubalgebra(
                    "Basis of {0} elements has rank {1}".format(
                        len(self.basis), rank))

    @classmethod
    def spanned_by(cls, elements, ambient_dim, tol=RANK_TOL):
        """ Subalgebra spanned by possibly dependent `elements`. """
        rows = [e.flat for e in elements]
        if not rows:
            return cls((), ambient_dim, tol)
        ortho = row_space(np.array(rows), tol)
        return cls.from_rows(ortho, ambient_dim, tol)

    @classmethod
    def from_rows(cls, rows, ambient_dim, tol=RANK_TOL):
        return cls([LieElement.from_flat(row, ambient_dim) for row in rows],
                   ambient_dim, tol)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def matrix(self):
        """ The basis as rows of flattened (X, u) pairs. """
        size = self.ambient_dim ** 2 + self.ambient_dim
        if not self.basis:
            return np.zeros((0, size))
        return np.array([e.flat for e in self.basis])

    def orthonormal_rows(self):
        """ Canonical orthonormal rows for the reference inner product. """
        return row_space(self.matrix, self.tol)

    def residual(self, elements):
        """ Distance of `elements` (iterable of LieElement) to this span. """
        vectors = [e.flat for e in elements]
        if not vectors:
            return 0.0
        return span_residual(np.array(vectors), self.orthonormal_rows())

    def contains(self, element, tol=RANK_TOL):
        return self.residual([element]) <= tol * max(1.0, element.norm())

    def __repr__(self):
        return "Subalgebra(dim={0}, ambient_dim={1}, basis={2!r})".format(
            self.dim, self.ambient_dim, list(self.basis))


def subalgebra_span_residual(a, b):
    """ Symmetric distance between the spans of two subalgebras.

    Zero iff the spans coincide; computed on orthonormal bases so that it is
    independent of the chosen bases.
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(a.ambient_dim, b.ambient_dim)
    qa, qb = a.orthonormal_rows(), b.orthonormal_rows()
    if qa.shape[0] != qb.shape[0]:
        return float("inf")
    if qa.shape[0] == 0:
        return 0.0
    return max(span_residual(qa, qb), span_residual(qb, qa))


def subalgebra_closure_check(h, tol=RANK_TOL):
    """ True if every bracket of basis elements lies in the span of `h`. """
    return closure_residual(h) <= tol


def closure_residual(h):
    """ Largest relative distance of a basis bracket to the span of `h`.

    Brackets are taken between the canonical orthonormal basis elements so
    that the residual does not depend on the scale of the input basis.
    """
    rows = h.orthonormal_rows()
    elements = [LieElement.from_flat(row, h.ambient_dim) for row in rows]
    worst = 0.0
    for a, b in itertools.combinations(elements, 2):
        c = bracket(a, b)
        distance = span_residual(c.flat[np.newaxis], rows)
        worst = max(worst, distance / max(1.0, c.norm()))
    return worst


def translation_part(h, tol=RANK_TOL):
    """ Orthonormal basis of h ∩ M^{n+1}.

    Returns
    -------
    dim : int
    basis : list of ndarray
        Translation vectors spanning the kernel of the projection to the
        linear part.
    """
    if not h.basis:
        return 0, []
    linear = np.array([e.linear.ravel() for e in h.basis])
    coefficients = left_kernel(linear, tol)
    if coefficients.shape[0] == 0:
        return 0, []
    trans = coefficients.dot(np.array([e.trans for e in h.basis]))
    vectors = row_space(trans, tol)
    return vectors.shape[0], [v for v in vectors]


def pi1(h, tol=RANK_TOL):
    """ The image of h under the projection to so(n,1). """
    d = h.ambient_dim
    if not h.basis:
        return Subalgebra((), d, tol)
    linear = np.array([e.linear.ravel() for e in h.basis])
    rows = row_space(linear, tol)
    return Subalgebra(
        [LieElement.rotation_like(row.reshape(d, d)) for row in rows], d, tol)


def lift(h, x, tol=RANK_TOL):
    """ An element of h whose linear part is (the projection of) x.

    Returns
    -------
    element : LieElement
        The element of h, defined up to h ∩ M^{n+1}.
    residual : float
        Distance of x to the linear parts of h, relative to |x|.
    """
    linear = np.array([e.linear.ravel() for e in h.basis])
    x = np.asarray(x, dtype=float)
    coefficients, _, _, _ = np.linalg.lstsq(linear.T, x.ravel(), rcond=None)
    element = LieElement.zero(h.ambient_dim)
    for c, e in zip(coefficients, h.basis):
        element = element + c * e
    residual = np.linalg.norm(element.linear - x) / max(1.0, np.linalg.norm(x))
    return element, float(residual)
