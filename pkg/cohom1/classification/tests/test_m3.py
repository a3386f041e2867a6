import math
import unittest

import mock
import numpy as np
from hypothesis import given, settings, strategies as st

from cohom1.actions import ActionClass, catalog_list, make_spec
from cohom1.errors import DimensionMismatch, NoInvariantNullLine, NotNormalForm
from cohom1.geometry import w0
from cohom1.lie import (
    IsoElement, LieElement, Subalgebra, Y_A, Y_K, Y_N, boost_a,
    cartan_involution, rotation_k, subalgebra_span_residual,
)
from cohom1.test_utils import random_conjugator, random_iso_element

from ..alignment import conjugate
from ..m3 import classify_m3, extract_lambda, pi1_to_standard
from ..results import Verdict


E1, E2, E3 = np.eye(3)
ELL = w0(3)

AN = Subalgebra([LieElement.rotation_like(Y_A),
                 LieElement.rotation_like(Y_N)], 3)


def _screw(linear, v):
    return Subalgebra([LieElement(linear, v), LieElement.translation(ELL)], 3)


def random_conjugate(rng, h):
    return conjugate(h, random_conjugator(rng, 3, boost=2.0, shift=5.0))


class TestClassifyM3Examples(unittest.TestCase):

    def test_a_times_line(self):
        # Given
        h = Subalgebra([LieElement(Y_A, [0.0, 1.0, 2.0]),
                        LieElement.translation(E1)], 3)

        # When
        result = classify_m3(h)

        # Then
        self.assertEqual(result.verdict, Verdict.classified)
        self.assertEqual(result.spec.action_class, ActionClass.AxRe1)
        self.assertEqual(len(result.conjugators), 1)
        np.testing.assert_allclose(result.composite.linear, np.eye(3))
        np.testing.assert_allclose(
            result.composite.trans, [0.0, -2.0, -1.0], atol=1e-14)
        self.assertLess(result.residual, 1e-12)

    def test_a_lambda(self):
        # Given
        h = _screw(Y_A, 2.0 * E1)

        # When
        result = classify_m3(h)

        # Then
        self.assertEqual(result.spec.name, "ALambdaEll(2)")
        self.assertEqual(result.lam, 2.0)
        self.assertFalse(result.reflected)
        self.assertEqual(result.conjugators, ())

    def test_n_lambda(self):
        # Given
        h = _screw(Y_N, 5.0 * E3)

        # When
        result = classify_m3(h)

        # Then
        self.assertEqual(result.spec.action_class, ActionClass.N1xEll)
        self.assertEqual(result.spec.lam, 1.0)
        self.assertAlmostEqual(result.lam, 5.0, places=12)
        np.testing.assert_allclose(
            result.composite.linear, boost_a(0.5 * math.log(5.0)),
            atol=1e-12)
        self.assertLess(result.residual, 1e-10)

    def test_n_ell(self):
        # Given
        h = _screw(Y_N, [2.0, 0.0, 0.0])

        # When
        result = classify_m3(h)

        # Then
        self.assertEqual(result.spec.action_class, ActionClass.NxEll)
        self.assertEqual(result.lam, 0.0)

    def test_negative_lambda_is_reflected(self):
        cases = ((Y_A, -3.0 * E1, ActionClass.ALambdaEll),
                 (Y_N, -3.0 * E3, ActionClass.N1xEll))
        for linear, v, action_class in cases:
            # When
            result = classify_m3(_screw(linear, v))

            # Then
            self.assertEqual(result.spec.action_class, action_class)
            self.assertAlmostEqual(result.lam, 3.0, places=12)
            self.assertTrue(result.reflected)
            self.assertFalse(result.composite.is_restricted())
            self.assertLess(result.residual, 1e-10)

    def test_an_with_line(self):
        # Given
        h = Subalgebra([LieElement.rotation_like(Y_A),
                        LieElement.rotation_like(Y_N),
                        LieElement.translation(ELL)], 3)

        # When
        result = classify_m3(h)

        # Then
        self.assertEqual(result.verdict, Verdict.not_cohomogeneity_one)
        self.assertIsNone(result.spec)

    def test_not_closed(self):
        # Given
        h = Subalgebra([LieElement.rotation_like(Y_K),
                        LieElement.rotation_like(Y_A)], 3)

        # When
        result = classify_m3(h)

        # Then
        self.assertEqual(result.verdict, Verdict.not_a_subalgebra)
        self.assertGreater(result.residual, 0.1)

    def test_wrong_dimension(self):
        h = Subalgebra([LieElement.translation([1.0, 0.0])], 2)
        with self.assertRaises(DimensionMismatch):
            classify_m3(h)

    def test_rejection_is_logged(self):
        # Given
        h = Subalgebra([LieElement.translation(E1)], 3)

        # When
        with mock.patch("cohom1.classification.results.logger") as logger:
            classify_m3(h)

        # Then
        logger.info.assert_called_once_with(
            "%s: %s", "NotCohomogeneityOne", "orbits of dimension at most 1")


class TestPi1ToStandard(unittest.TestCase):

    def test_standard(self):
        # When
        g = pi1_to_standard(AN)

        # Then
        np.testing.assert_allclose(g.linear, np.eye(3), atol=1e-14)

    def test_rotated(self):
        # Given
        s = conjugate(AN, IsoElement.linear_map(rotation_k(math.pi / 4)))

        # When
        g = pi1_to_standard(s)

        # Then
        self.assertTrue(g.is_restricted())
        self.assertLess(subalgebra_span_residual(conjugate(s, g), AN), 1e-10)

    def test_opposite_root(self):
        # Given
        s = Subalgebra([LieElement.rotation_like(Y_A),
                        LieElement.rotation_like(cartan_involution(Y_N))], 3)

        # When
        g = pi1_to_standard(s)

        # Then
        self.assertLess(subalgebra_span_residual(conjugate(s, g), AN), 1e-10)
        # a rotation about e3
        np.testing.assert_allclose(g.linear[2], [0.0, 0.0, 1.0], atol=1e-14)
        np.testing.assert_allclose(g.linear[:, 2], [0.0, 0.0, 1.0],
                                   atol=1e-14)
        # the brute-force minimizer over a grid of rotations
        grid = np.linspace(-math.pi, math.pi, 721)
        residuals = [
            subalgebra_span_residual(
                conjugate(s, IsoElement.linear_map(rotation_k(t))), AN)
            for t in grid]
        t_best = grid[int(np.argmin(residuals))]
        np.testing.assert_allclose(g.linear, rotation_k(t_best), atol=1e-2)

    def test_random_conjugates(self):
        rng = np.random.RandomState(5)
        for _ in range(100):
            # Given
            g0 = random_iso_element(rng, 3, boost=1.5, shift=0.0)
            s = conjugate(AN, g0)

            # When
            g = pi1_to_standard(s)

            # Then
            self.assertLess(
                subalgebra_span_residual(conjugate(s, g), AN), 1e-10)

    def test_errors(self):
        # the kernel of the derived algebra is space-like
        with self.assertRaises(NoInvariantNullLine):
            pi1_to_standard(Subalgebra([
                LieElement.rotation_like(Y_K),
                LieElement.rotation_like(Y_A)], 3))
        # wrong dimension
        with self.assertRaises(NoInvariantNullLine):
            pi1_to_standard(Subalgebra([LieElement.rotation_like(Y_A)], 3))


class TestExtractLambda(unittest.TestCase):

    def test_examples(self):
        self.assertAlmostEqual(extract_lambda(_screw(Y_A, 3.0 * E1)), 3.0)
        self.assertAlmostEqual(
            extract_lambda(_screw(Y_N, [0.0, 1.0, 2.0])), 3.0)
        self.assertAlmostEqual(
            extract_lambda(_screw(Y_A, [-2.0, 1.0, 1.0])), 2.0)

    def test_not_normal_form(self):
        with self.assertRaises(NotNormalForm):
            extract_lambda(Subalgebra([LieElement(Y_A, E1),
                                       LieElement.translation(E1)], 3))
        with self.assertRaises(NotNormalForm):
            extract_lambda(_screw(Y_K, E1))
        with self.assertRaises(NotNormalForm):
            extract_lambda(Subalgebra([LieElement(Y_A, E1)], 3))


class TestRoundTrip(unittest.TestCase):

    def _check_round_trip(self, spec, count, seed):
        rng = np.random.RandomState(seed)
        for _ in range(count):
            # Given
            h = random_conjugate(rng, spec.generators)

            # When
            result = classify_m3(h)

            # Then
            self.assertEqual(result.verdict, Verdict.classified)
            self.assertEqual(result.spec.action_class, spec.action_class)
            if spec.action_class is ActionClass.ALambdaEll:
                self.assertLessEqual(
                    abs(result.lam - spec.lam), 1e-6 * max(1.0, spec.lam))
            self.assertLessEqual(result.residual, 1e-8)
            self.assertLessEqual(
                subalgebra_span_residual(
                    result.conjugate(h), result.spec.generators), 1e-8)

    def test_catalog(self):
        specs = catalog_list(3, lambdas=(0.0, 0.5, 1.0, 2.0))
        for i, spec in enumerate(specs):
            self._check_round_trip(spec, 500, i)

    def test_n_family(self):
        for i, lam in enumerate((0.1, 1.0, 10.0)):
            self._check_round_trip(
                make_spec(ActionClass.N1xEll, lam=lam), 200, 100 + i)

    def test_idempotent(self):
        for spec in catalog_list(3):
            # When
            result = classify_m3(spec.generators)

            # Then
            self.assertEqual(result.spec.action_class, spec.action_class)
            if spec.lam is not None:
                self.assertAlmostEqual(result.spec.lam, spec.lam, places=12)
            self.assertEqual(result.conjugators, ())
            self.assertLessEqual(result.residual, 1e-12)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=0.0, max_value=10.0),
           st.integers(min_value=0, max_value=2 ** 31 - 1))
    def test_lambda_rigidity(self, lam, seed):
        # Given
        spec = make_spec(ActionClass.ALambdaEll, lam=lam)
        h = random_conjugate(np.random.RandomState(seed), spec.generators)

        # When
        result = classify_m3(h)

        # Then
        self.assertEqual(result.spec.action_class, ActionClass.ALambdaEll)
        self.assertLessEqual(abs(result.spec.lam - lam), 1e-6 * (1.0 + lam))
