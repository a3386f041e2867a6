import unittest

import numpy as np

from cohom1.errors import UnsupportedAction
from cohom1.lie import (
    IsoElement, LieElement, Y_A, exp_iso, subalgebra_closure_check,
)

from ..catalog import (
    ActionClass, KPrime, KPrimeKind, catalog_list, group_element, make_spec,
)


E1, E2, E3 = np.eye(3)


class TestCatalogList(unittest.TestCase):

    def test_m2(self):
        # When
        specs = catalog_list(2)

        # Then
        self.assertEqual(
            [s.action_class for s in specs],
            [ActionClass.R1, ActionClass.M1, ActionClass.W1,
             ActionClass.SO11])

    def test_m3(self):
        # When
        specs = catalog_list(3, lambdas=(2.0,))

        # Then
        self.assertEqual(len(specs), 10)
        family = [s for s in specs if s.action_class is ActionClass.ALambdaEll]
        self.assertEqual(len(family), 1)
        self.assertEqual(family[0].lam, 2.0)

    def test_m3_default_lambdas(self):
        specs = catalog_list(3)
        lams = [s.lam for s in specs
                if s.action_class is ActionClass.ALambdaEll]
        self.assertEqual(lams, [0.0, 0.5, 1.0, 2.0])

    def test_m4(self):
        # When
        names = [s.name for s in catalog_list(4)]

        # Then
        self.assertEqual(
            names, ["SOn1", "KprimeAN(3, Trivial)", "KprimeAN(3, Full)"])

    def test_m6_blocks(self):
        names = [s.name for s in catalog_list(6)]
        self.assertIn("KprimeAN(5, Block(2))", names)
        self.assertIn("KprimeAN(5, Block(3))", names)
        self.assertNotIn("KprimeAN(5, Block(4))", names)

    def test_too_small(self):
        with self.assertRaises(ValueError):
            catalog_list(1)

    def test_generators_are_subalgebras(self):
        for d in (2, 3, 4, 5):
            for spec in catalog_list(d):
                self.assertTrue(subalgebra_closure_check(spec.generators),
                                msg=spec.name)


class TestMakeSpec(unittest.TestCase):

    def test_from_string(self):
        spec = make_spec("alambdaell", lam=2)
        self.assertEqual(spec.action_class, ActionClass.ALambdaEll)
        self.assertEqual(spec.name, "ALambdaEll(2)")

    def test_unknown_action(self):
        with self.assertRaises(UnsupportedAction):
            make_spec("Foo")

    def test_wrong_dimension(self):
        with self.assertRaises(UnsupportedAction):
            make_spec(ActionClass.SO21, 4)
        with self.assertRaises(UnsupportedAction):
            make_spec(ActionClass.KprimeAN, 3)

    def test_lambda_constraints(self):
        with self.assertRaises(ValueError):
            make_spec(ActionClass.ALambdaEll, lam=-1.0)
        with self.assertRaises(ValueError):
            make_spec(ActionClass.N1xEll, lam=0.0)
        with self.assertRaises(ValueError):
            make_spec(ActionClass.SO21, lam=1.0)

    def test_specs_compare_by_value(self):
        self.assertEqual(make_spec("ALambdaEll", lam=1.0),
                         make_spec("ALambdaEll", lam=1))
        self.assertNotEqual(make_spec("ALambdaEll", lam=1.0),
                            make_spec("ALambdaEll", lam=2.0))

    def test_kprime(self):
        self.assertEqual(KPrime.from_string("Full").kind, KPrimeKind.full)
        self.assertEqual(KPrime.from_string("block(3)"), KPrime.block(3))
        with self.assertRaises(ValueError):
            KPrime.from_string("Block(x)")
        with self.assertRaises(ValueError):
            KPrime.block(1)
        with self.assertRaises(UnsupportedAction):
            make_spec(ActionClass.KprimeAN, 5, kprime=KPrime.block(3))


class TestGroupElement(unittest.TestCase):

    def test_a_lambda(self):
        # Given
        spec = make_spec(ActionClass.ALambdaEll, lam=1.0)

        # When
        g = group_element(spec, [1.0, 2.0])

        # Then
        np.testing.assert_allclose(g.trans, [1.0, 2.0, -2.0])
        np.testing.assert_allclose(
            g.linear[1:, 1:],
            [[np.cosh(1), -np.sinh(1)], [-np.sinh(1), np.cosh(1)]])

    def test_n_lambda(self):
        # Given
        spec = make_spec(ActionClass.N1xEll)

        # When
        g = group_element(spec, [1.0, 0.0])

        # Then
        np.testing.assert_allclose(g.trans, [0.5, -1 / 6.0, 1 + 1 / 6.0])

    def test_closed_forms_match_exponentials(self):
        rng = np.random.default_rng(23)
        for spec in (make_spec(ActionClass.ALambdaEll, lam=0.5),
                     make_spec(ActionClass.NxEll),
                     make_spec(ActionClass.N1xEll, lam=3.0)):
            for _ in range(50):
                # Given
                t, s = rng.uniform(-3.0, 3.0, size=2)
                screw, ell = spec.generators

                # When
                expected = exp_iso(ell, s) @ exp_iso(screw, t)

                # Then
                result = group_element(spec, [t, s])
                np.testing.assert_allclose(result.linear, expected.linear,
                                           rtol=1e-12, atol=1e-12)
                np.testing.assert_allclose(result.trans, expected.trans,
                                           rtol=1e-12, atol=1e-12)

    def test_zero_parameters(self):
        for d in (2, 3, 4):
            for spec in catalog_list(d):
                g = group_element(spec, np.zeros(spec.group_dim))
                self.assertTrue(g.allclose(IsoElement.identity(d)),
                                msg=spec.name)

    def test_second_kind_coordinates(self):
        # Given
        spec = make_spec(ActionClass.AxRe1)

        # When
        g = group_element(spec, [0.5, 2.0])

        # Then
        expected = (exp_iso(LieElement.translation(E1), 2.0)
                    @ exp_iso(LieElement.rotation_like(Y_A), 0.5))
        self.assertTrue(g.allclose(expected))

    def test_arity(self):
        with self.assertRaises(ValueError):
            group_element(make_spec(ActionClass.SO21), [1.0, 2.0])

    def test_elements_are_restricted_isometries(self):
        rng = np.random.default_rng(29)
        for d in (2, 3, 4):
            for spec in catalog_list(d):
                params = rng.uniform(-1.0, 1.0, size=spec.group_dim)
                self.assertTrue(
                    group_element(spec, params).is_restricted(tol=1e-9),
                    msg=spec.name)
