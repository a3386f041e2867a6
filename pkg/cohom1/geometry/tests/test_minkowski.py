import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from cohom1.errors import DimensionMismatch

from ..minkowski import (
    CausalClass, basis_vector, causal_class, lorentz_inner,
    lorentz_norm_sq, minkowski_vector, time_reversal, w0,
)


finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
vectors3 = st.lists(finite, min_size=3, max_size=3).map(np.array)


class TestLorentzInner(unittest.TestCase):

    def test_orthonormal_basis(self):
        # Given
        e1, e2, e3 = (basis_vector(i, 3) for i in (1, 2, 3))

        # When/Then
        self.assertEqual(lorentz_inner(e1, e1), 1.0)
        self.assertEqual(lorentz_inner(e3, e3), -1.0)
        self.assertEqual(lorentz_inner(e1, e2), 0.0)
        self.assertEqual(lorentz_inner(e2, e3), 0.0)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            lorentz_inner(np.ones(3), np.ones(4))

    def test_stacked_vectors(self):
        # Given
        points = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 2.0]])

        # When
        result = lorentz_inner(points, points)

        # Then
        np.testing.assert_array_equal(result, [1.0, -4.0])

    def test_norm_exact_along_w0(self):
        # Given points 2 e_1 + s w0 with s up to 1e8
        s = np.array([1.0, 1e3, 1e5, 1e8])
        points = np.zeros((4, 3))
        points[:, 0] = 2.0
        points[:, 1:] = s[:, None] * w0(3)[1:]

        # When
        result = lorentz_norm_sq(points)

        # Then
        np.testing.assert_array_equal(result, 4.0)
        for p in points:
            self.assertEqual(causal_class(p), CausalClass.spacelike)

    @given(vectors3, vectors3, vectors3, finite)
    def test_symmetric_bilinear(self, u, v, w, c):
        scale = 1.0 + np.abs(u).max() * (np.abs(v).max() + np.abs(w).max())
        scale *= 1.0 + abs(c)
        self.assertAlmostEqual(
            lorentz_inner(u, v), lorentz_inner(v, u), delta=1e-14 * scale)
        self.assertAlmostEqual(
            lorentz_inner(u, c * v + w),
            c * lorentz_inner(u, v) + lorentz_inner(u, w),
            delta=1e-12 * scale)


class TestMinkowskiVector(unittest.TestCase):

    def test_rejects_non_finite(self):
        with self.assertRaises(ValueError):
            minkowski_vector([0.0, float("inf"), 1.0])

    def test_rejects_wrong_dimension(self):
        with self.assertRaises(DimensionMismatch):
            minkowski_vector([1.0, 2.0], ambient_dim=3)
        with self.assertRaises(DimensionMismatch):
            minkowski_vector([1.0])

    def test_w0(self):
        np.testing.assert_array_equal(w0(3), [0.0, 1.0, -1.0])
        np.testing.assert_array_equal(w0(4), [0.0, 0.0, 1.0, -1.0])

    def test_time_reversal(self):
        np.testing.assert_array_equal(
            time_reversal([1.0, 2.0, 3.0]), [1.0, 2.0, -3.0])


class TestCausalClass(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(
            causal_class(basis_vector(3, 3)), CausalClass.timelike_future)
        self.assertEqual(causal_class(w0(3)), CausalClass.lightlike_past)
        self.assertEqual(
            causal_class([1.0, 0.0, 0.0]), CausalClass.spacelike)
        self.assertEqual(causal_class([0.0, 0.0, 0.0]), CausalClass.zero)
        self.assertEqual(
            causal_class([0.0, 1.0, 1.0]), CausalClass.lightlike_future)
        self.assertEqual(
            causal_class([0.0, 0.0, -1.0]), CausalClass.timelike_past)

    def test_tolerance_must_be_positive(self):
        with self.assertRaises(ValueError):
            causal_class([1.0, 0.0, 0.0], tol=0.0)

    def test_light_cone_is_relative_for_large_vectors(self):
        # Given a null vector of size 1e6 perturbed by rounding
        v = np.array([3e6, 4e6, 5e6 + 1e-4])

        # When/Then
        self.assertEqual(causal_class(v), CausalClass.lightlike_future)

    @settings(max_examples=200)
    @given(vectors3, st.floats(min_value=1e-2, max_value=1e3))
    def test_positive_scaling_invariance(self, v, lam):
        q = lorentz_inner(v, v)
        # stay clear of the thickened cone and of the zero vector
        if np.abs(v).max() < 1e-2 or abs(q) < 1e-3 * (1.0 + v.dot(v)):
            return
        self.assertEqual(causal_class(lam * v), causal_class(v))
