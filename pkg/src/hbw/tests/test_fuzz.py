"""
Fuzz Harness Tests

Runs the randomized differential check over both supported fields and
verifies that reports are reproducible.
"""

import random
import unittest

from ..cli.fuzz import (
    DEFAULT_COUNT,
    DEFAULT_SEED,
    FuzzConfig,
    check_instance,
    random_quiver,
    random_rep,
    run_fuzz,
)
from ..core.field import PrimeField


class TestRunFuzz(unittest.TestCase):
    """Tests for run_fuzz."""

    def test_rationals(self):
        report = run_fuzz(FuzzConfig(count=DEFAULT_COUNT, seed=DEFAULT_SEED, field="q"))
        self.assertEqual(report.total, DEFAULT_COUNT)
        self.assertTrue(report.ok, report.first_failure)
        self.assertIsNone(report.first_failure)

    def test_prime_field(self):
        report = run_fuzz(FuzzConfig(count=DEFAULT_COUNT, seed=DEFAULT_SEED, field="p:101"))
        self.assertTrue(report.ok, report.first_failure)
        self.assertEqual(report.failed_indices, [])

    def test_deterministic(self):
        config = FuzzConfig(count=25, seed=7, field="p:101", max_dim=2)
        self.assertEqual(run_fuzz(config).to_dict(), run_fuzz(config).to_dict())

    def test_summary(self):
        report = run_fuzz(FuzzConfig(count=3))
        self.assertEqual(report.summary(), "3/3 instances pass")
        self.assertEqual(report.config["count"], 3)


class TestFuzzConfig(unittest.TestCase):
    """Tests for FuzzConfig validation."""

    def test_defaults(self):
        config = FuzzConfig()
        self.assertEqual(config.to_dict(), {
            "count": 200,
            "seed": 1,
            "field": "q",
            "max_vertices": 6,
            "max_arrows": 10,
            "max_dim": 3,
        })

    def test_rejects_bad_values(self):
        for kwargs in ({"count": -1}, {"max_vertices": 0}, {"max_dim": -1}, {"field": "p:100"}):
            with self.assertRaises(ValueError):
                FuzzConfig(**kwargs)


class TestGenerators(unittest.TestCase):
    """Tests for the random instance generators."""

    def test_bounds(self):
        rng = random.Random(2)
        for _ in range(50):
            quiver = random_quiver(rng, 4, 7)
            self.assertLessEqual(len(quiver.vertices), 4)
            self.assertLessEqual(len(quiver.arrows), 7)
            rep = random_rep(rng, quiver, PrimeField(5), 2)
            for v in quiver.vertices:
                self.assertLessEqual(rep.dims[v], 2)
            for arrow in quiver.arrows:
                shape = (rep.dims[arrow.target], rep.dims[arrow.source])
                self.assertEqual(rep.mats[arrow.name].shape, shape)

    def test_check_instance_clean(self):
        rng = random.Random(5)
        quiver = random_quiver(rng, 5, 8)
        self.assertEqual(check_instance(quiver, random_rep(rng, quiver, PrimeField(7), 2)), [])


if __name__ == '__main__':
    unittest.main()
