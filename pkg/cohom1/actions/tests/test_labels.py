import unittest

import numpy as np

from cohom1.errors import DimensionMismatch
from cohom1.geometry import Stratum, w0

from ..catalog import ActionClass, KPrime, catalog_list, make_spec
from ..labels import (
    OrbitLabel, OrbitStratum, i_invariant, j_invariant, log_i_invariant,
    orbit_label,
)
from ..orbits import orbit_sample


E1, E2, E3 = np.eye(3)


class TestOrbitLabel(unittest.TestCase):

    def test_str(self):
        label = OrbitLabel(ActionClass.KxRe3, OrbitStratum.cylinder, [2])
        self.assertEqual(str(label), "KxRe3/Cylinder[2]")
        self.assertEqual(
            str(OrbitLabel(ActionClass.SO21, Stratum.origin)), "SO21/Origin")

    def test_matches(self):
        # Given
        a = OrbitLabel(ActionClass.N1xEll, OrbitStratum.parabolic, [1.0])
        b = OrbitLabel(ActionClass.N1xEll, OrbitStratum.parabolic,
                       [1.0 + 1e-12])
        c = OrbitLabel(ActionClass.NxEll, OrbitStratum.parabolic, [1.0])

        # When/Then
        self.assertTrue(a.matches(b))
        self.assertFalse(a.matches(c))
        self.assertTrue(a.same_orbit_type(c))


class TestClosedFormLabels(unittest.TestCase):

    def test_a_lambda_orbit_through_null_vector(self):
        # Given
        spec = make_spec(ActionClass.ALambdaEll, lam=1.0)
        p = np.array([1.0, np.exp(-1), np.exp(-1)])

        # When
        label = orbit_label(spec, p)

        # Then
        self.assertEqual(label.stratum, OrbitStratum.upper)
        self.assertAlmostEqual(label.invariants[0], 0.0, places=14)
        self.assertTrue(label.matches(orbit_label(spec, E2 + E3)))

    def test_a_lambda_label_far_along_e1(self):
        # Given a point where z e^{x/λ} overflows
        spec = make_spec(ActionClass.ALambdaEll, lam=0.1)
        p = np.array([100.0, 1.0, 1.0])
        q = np.array([100.5, np.exp(-5.0), np.exp(-5.0)])

        # When
        label = orbit_label(spec, p)

        # Then
        self.assertEqual(label.stratum, OrbitStratum.upper)
        self.assertTrue(np.isfinite(label.invariants[0]))
        self.assertAlmostEqual(label.invariants[0], 1000.0, places=9)
        self.assertTrue(label.matches(label))
        self.assertTrue(label.matches(orbit_label(spec, q)))

    def test_a_lambda_label_far_against_e1(self):
        # Given two orbits where z e^{x/λ} underflows to zero
        spec = make_spec(ActionClass.ALambdaEll, lam=1.0)
        p = np.array([-800.0, 1.0, 1.0])
        q = np.array([-800.0, 2.0, 2.0])

        # When
        first, second = orbit_label(spec, p), orbit_label(spec, q)

        # Then
        self.assertAlmostEqual(first.invariants[0], -800.0, places=9)
        self.assertAlmostEqual(second.invariants[0], -800.0 + np.log(2.0),
                               places=9)
        self.assertFalse(first.matches(second))
        self.assertTrue(first.matches(
            orbit_label(spec, [-799.0, np.exp(-1.0), np.exp(-1.0)])))

    def test_a_lambda_lower_orbit(self):
        # Given
        spec = make_spec(ActionClass.ALambdaEll, lam=2.0)

        # When
        label = orbit_label(spec, [4.0, -3.0, 1.0])

        # Then
        self.assertEqual(label.stratum, OrbitStratum.lower)
        self.assertAlmostEqual(label.invariants[0], 2.0, places=14)
        self.assertFalse(label.matches(orbit_label(spec, [4.0, 3.0, -1.0])))

    def test_a_lambda_degenerate_orbit(self):
        spec = make_spec(ActionClass.ALambdaEll, lam=2.0)
        for p in (np.zeros(3), E1, 3 * w0(3) - E1):
            self.assertEqual(orbit_label(spec, p).stratum,
                             OrbitStratum.degenerate)

    def test_a_zero(self):
        # Given
        spec = make_spec(ActionClass.ALambdaEll, lam=0.0)

        # When
        upper = orbit_label(spec, [2.0, 1.0, 0.5])
        line = orbit_label(spec, [2.0, 1.0, -1.0])

        # Then
        self.assertEqual(upper.stratum, OrbitStratum.upper)
        self.assertEqual(upper.invariants, (2.0,))
        self.assertEqual(line.stratum, OrbitStratum.line)

    def test_n_ell(self):
        # Given
        spec = make_spec(ActionClass.NxEll)

        # When
        leaf = orbit_label(spec, 2 * (E2 + E3))
        line = orbit_label(spec, E1 + 4 * w0(3))

        # Then
        self.assertEqual(leaf.stratum, OrbitStratum.upper)
        self.assertEqual(leaf.invariants, (2.0,))
        self.assertEqual(line.stratum, OrbitStratum.line)
        self.assertEqual(line.invariants, (1.0,))

    def test_invariants(self):
        np.testing.assert_allclose(
            i_invariant([[0.0, 1.0, 1.0], [2.0, 0.5, -0.5]], 2.0),
            [1.0, 0.0])
        np.testing.assert_allclose(
            log_i_invariant([[0.0, 1.0, 1.0], [2.0, -0.5, -0.5]], 2.0),
            [0.0, np.log(0.5) + 1.0])
        self.assertEqual(j_invariant([1.0, 1.0, 1.0], 2.0), 0.0)

    def test_translation_classes(self):
        p = np.array([1.0, 2.0, 3.0])
        expected = {"R2": 3.0, "M2": 1.0, "W2": 5.0}
        for name, value in expected.items():
            label = orbit_label(make_spec(name), p)
            self.assertEqual(label.invariants, (value,))
        self.assertEqual(
            orbit_label(make_spec("W1"), [1.0, 2.0]).invariants, (3.0,))

    def test_k_axis(self):
        spec = make_spec(ActionClass.KxRe3)
        self.assertEqual(orbit_label(spec, 5 * E3).stratum, OrbitStratum.axis)
        self.assertEqual(orbit_label(spec, [3.0, 4.0, 1.0]).invariants,
                         (5.0,))

    def test_a_block(self):
        spec = make_spec(ActionClass.AxRe1)
        self.assertEqual(orbit_label(spec, [7.0, 0.0, 2.0]).stratum,
                         Stratum.hyperbolic_plus)
        self.assertEqual(orbit_label(spec, [7.0, 0.0, 0.0]).stratum,
                         Stratum.origin)
        self.assertEqual(orbit_label(spec, [7.0, -1.0, 1.0]).stratum,
                         Stratum.light_ray_mp)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            orbit_label(make_spec(ActionClass.SO21), [1.0, 2.0])


class TestParabolicLabels(unittest.TestCase):

    def test_cylinder_trivial_and_full(self):
        # Given
        r = 1.5
        trivial = make_spec(ActionClass.KprimeAN, 4, kprime=KPrime.trivial())
        full = make_spec(ActionClass.KprimeAN, 4, kprime=KPrime.full())
        p, q = r * np.eye(4)[0], r * np.eye(4)[1]

        # When/Then
        self.assertEqual(orbit_label(trivial, p).stratum,
                         OrbitStratum.cylinder)
        self.assertFalse(
            orbit_label(trivial, p).matches(orbit_label(trivial, q)))
        self.assertTrue(orbit_label(full, p).matches(orbit_label(full, q)))

    def test_light_cone(self):
        spec = make_spec(ActionClass.AN)
        cases = [
            (2 * w0(3), OrbitStratum.ray_plus_w0),
            (-2 * w0(3), OrbitStratum.ray_minus_w0),
            (E2 + E3, OrbitStratum.light_cone_plus_punctured),
            (E1 - E3, OrbitStratum.light_cone_minus_punctured),
            (np.zeros(3), Stratum.origin),
            (-3 * E3, Stratum.hyperbolic_minus),
        ]
        for p, stratum in cases:
            self.assertEqual(orbit_label(spec, p).stratum, stratum)

    def test_cylinder_far_along_w0(self):
        # Given points r e_1 + s w0 far out along the null direction
        for r in (0.5, 1.0, 2.0):
            for s in (1.0, 1e3, 1e5):
                p3 = r * E1 + s * w0(3)
                p4 = r * np.eye(4)[0] + s * w0(4)
                an = make_spec(ActionClass.AN)
                kprime_an = make_spec(ActionClass.KprimeAN, 4,
                                      kprime=KPrime.full())

                # When
                label3 = orbit_label(an, p3)
                label4 = orbit_label(kprime_an, p4)

                # Then
                self.assertEqual(label3.stratum, OrbitStratum.cylinder)
                self.assertEqual(label4.stratum, OrbitStratum.cylinder)
                self.assertAlmostEqual(label3.invariants[0], r, places=12)
                self.assertTrue(label4.matches(
                    orbit_label(kprime_an, r * np.eye(4)[1])))

    def test_de_sitter_has_four_orbits(self):
        # Given
        spec = make_spec(ActionClass.AN)
        r = 2.0
        rng = np.random.default_rng(31)
        points = []
        for p3 in rng.uniform(-5.0, 5.0, size=200):
            angle = rng.uniform(0, 2 * np.pi)
            rho = np.sqrt(r ** 2 + p3 ** 2)
            points.append([rho * np.cos(angle), rho * np.sin(angle), p3])
        for s in rng.uniform(-5.0, 5.0, size=20):
            points.append(r * E1 + s * w0(3))
            points.append(-r * E1 + s * w0(3))

        # When
        labels = set(str(orbit_label(spec, p)) for p in points)

        # Then
        self.assertEqual(labels, set([
            "AN/DeSitterUpper[2]", "AN/DeSitterLower[2]",
            "AN/Cylinder[2;2]", "AN/Cylinder[2;-2]",
        ]))

    def test_block_labels_are_provisional(self):
        # Given
        spec = make_spec(ActionClass.KprimeAN, 6, kprime=KPrime.block(2))
        p = np.array([0.6, 0.8, 0.0, 0.0, 0.0, 0.0])
        q = np.array([0.0, 1.0, 0.0, 0.0, 0.0, 0.0])

        # When
        label = orbit_label(spec, p)

        # Then
        self.assertTrue(label.provisional)
        self.assertTrue(label.matches(orbit_label(spec, q)))
        self.assertTrue(str(label).endswith("*"))


class TestLabelConstancy(unittest.TestCase):

    def test_labels_constant_along_orbits(self):
        rng = np.random.default_rng(37)
        for d in (2, 3, 4, 5):
            for spec in catalog_list(d):
                for _ in range(5):
                    # Given
                    p = rng.normal(size=d)
                    base = orbit_label(spec, p)

                    # When
                    samples = orbit_sample(spec, p, 50,
                                           seed=int(rng.integers(1 << 30)),
                                           scale=1.5)

                    # Then
                    for q in samples:
                        label = orbit_label(spec, q)
                        self.assertTrue(
                            label.matches(base, tol=1e-8),
                            msg="{0}: {1} != {2}".format(
                                spec.name, label, base))

    def test_cylinder_labels_constant(self):
        for kprime in (KPrime.trivial(), KPrime.full()):
            # Given
            spec = make_spec(ActionClass.KprimeAN, 4, kprime=kprime)
            p = np.array([0.0, 2.0, 1.0, -1.0])
            base = orbit_label(spec, p)

            # When
            samples = orbit_sample(spec, p, 100, seed=3, scale=1.5)

            # Then
            self.assertEqual(base.stratum, OrbitStratum.cylinder)
            for q in samples:
                self.assertTrue(orbit_label(spec, q).matches(base))


class TestLabelSeparation(unittest.TestCase):

    def test_a_lambda_orbits_with_distinct_labels_stay_apart(self):
        # Given two A_1 ⋉ l orbits through z (e2 + e3), z = 1 and z = 4
        spec = make_spec(ActionClass.ALambdaEll, lam=1.0)
        first = orbit_label(spec, E2 + E3)
        second = orbit_label(spec, 4.0 * (E2 + E3))
        self.assertGreater(
            abs(np.exp(first.invariants[0]) - np.exp(second.invariants[0])),
            1e-6)
        self.assertFalse(first.matches(second))

        # When
        a = orbit_sample(spec, E2 + E3, 300, seed=5, scale=1.0)
        b = orbit_sample(spec, 4.0 * (E2 + E3), 300, seed=6, scale=1.0)
        distances = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=-1)

        # Then
        self.assertGreater(distances.min(), 0.1)
