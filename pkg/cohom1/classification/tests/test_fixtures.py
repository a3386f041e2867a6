import unittest

import numpy as np

from cohom1.lie import subalgebra_span_residual
from cohom1.test_utils import ClassifierScenario, fixture_paths

from .. import classify
from ..results import Verdict


class TestFixtureCorpus(unittest.TestCase):

    def test_corpus_covers_every_verdict(self):
        verdicts = set(ClassifierScenario.from_yaml(path).verdict
                       for path in fixture_paths())
        self.assertEqual(verdicts, set(Verdict))

    def test_corpus(self):
        paths = fixture_paths()
        self.assertGreater(len(paths), 30)
        for path in paths:
            # Given
            scenario = ClassifierScenario.from_yaml(path)
            h = scenario.subalgebra

            # When
            result = classify(h)

            # Then
            msg = "{0}: {1!r}".format(scenario.name, result)
            self.assertEqual(result.verdict, scenario.verdict, msg)
            if scenario.verdict is not Verdict.classified:
                self.assertIsNone(result.spec, msg)
                continue
            self.assertEqual(
                result.spec.action_class, scenario.action_class, msg)
            self.assertEqual(result.reflected, scenario.reflected, msg)
            if scenario.lam is not None:
                self.assertAlmostEqual(result.lam, scenario.lam, 10, msg)
            if scenario.translation is not None:
                np.testing.assert_allclose(
                    result.composite.trans, scenario.translation,
                    atol=1e-12, err_msg=msg)
            self.assertLessEqual(result.residual, 1e-8, msg)
            if result.spec.generators.dim == h.dim:
                self.assertLessEqual(
                    subalgebra_span_residual(
                        result.conjugate(h), result.spec.generators),
                    1e-8, msg)
