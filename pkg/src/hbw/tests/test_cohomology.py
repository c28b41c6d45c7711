"""
Cohomology Tests

Verifies dim HBW^1 on the example families by both routes and checks that
the routes agree on the subspace of inner derivations.
"""

import random
import unittest

from ..algebra.matrices import algorithm_b
from ..algebra.partition import algorithm_a
from ..algebra.representation import QuiverRep, regular_rep
from ..cli.examples import gen_example
from ..cli.fuzz import random_rep
from ..cohomology.oracle import check_equivalence, oracle_h1, oracle_ider_matrix
from ..cohomology.theorem import CochainSpace, build_generators, h1
from ..core.field import RATIONALS, PrimeField
from ..core.quiver import Quiver
from ..linalg.dense import DenseMatrix, rank
from .test_representation import ones_rep

F101 = PrimeField(101)


class TestFamilies(unittest.TestCase):
    """dim H^1 on the example families."""

    def test_chain_vanishes(self):
        for n in range(2, 7):
            quiver = gen_example("chain", n)
            rep = regular_rep(quiver, RATIONALS)
            self.assertEqual(h1(quiver, rep).dim, 0)
            self.assertEqual(oracle_h1(quiver, rep).dim, 0)
            self.assertTrue(check_equivalence(quiver, rep).passed)

    def test_zigzag(self):
        for n in range(2, 6):
            quiver = gen_example("zigzag", n)
            rep = regular_rep(quiver, RATIONALS)
            self.assertEqual(h1(quiver, rep).dim, 2 * n)
            self.assertTrue(check_equivalence(quiver, rep).passed)

    def test_star(self):
        for n, expected in ((2, 1), (3, 5), (4, 11), (5, 19)):
            quiver = gen_example("star", n)
            rep = regular_rep(quiver, RATIONALS)
            self.assertEqual(h1(quiver, rep).dim, expected)
            self.assertEqual(oracle_h1(quiver, rep).dim, expected)
            self.assertTrue(check_equivalence(quiver, rep).passed)

    def test_cycle_ones(self):
        for n in range(2, 7):
            quiver = gen_example("cycle", n)
            rep = ones_rep(quiver)
            self.assertEqual(h1(quiver, rep).dim, 1)
            self.assertEqual(oracle_h1(quiver, rep).dim, 1)
            self.assertEqual(rank(oracle_ider_matrix(quiver, rep)), n - 1)
            self.assertTrue(check_equivalence(quiver, rep).passed)

    def test_bicycle_random(self):
        rng = random.Random(1)
        for n in (2, 3):
            quiver = gen_example("bicycle", n)
            for _ in range(5):
                rep = random_rep(rng, quiver, F101, 2, fixed_dim=2)
                report = check_equivalence(quiver, rep)
                self.assertTrue(report.passed, str(report))
                self.assertEqual(h1(quiver, rep).dim, oracle_h1(quiver, rep).dim)


class TestGenerators(unittest.TestCase):
    """Tests for the generator and oracle matrices."""

    def test_chain_generators(self):
        quiver = gen_example("chain", 3)
        rep = regular_rep(quiver, RATIONALS)
        partition = algorithm_a(quiver)
        generators = build_generators(quiver, partition, algorithm_b(quiver, partition), rep)
        self.assertEqual(generators.rows, 5)
        self.assertEqual(rank(generators), 5)

    def test_star_generators(self):
        quiver = gen_example("star", 3)
        rep = regular_rep(quiver, RATIONALS)
        partition = algorithm_a(quiver)
        generators = build_generators(quiver, partition, algorithm_b(quiver, partition), rep)
        self.assertEqual(generators.shape, (12, 7))
        self.assertEqual(rank(generators), 7)

    def test_chain_oracle_matrix(self):
        quiver = gen_example("chain", 3)
        matrix = oracle_ider_matrix(quiver, regular_rep(quiver, RATIONALS))
        self.assertEqual(matrix.shape, (5, 6))
        self.assertEqual(rank(matrix), 5)

    def test_cycle_oracle_matrix(self):
        """(n_j) maps to (n_{j+1} - n_j)."""
        quiver = gen_example("cycle", 3)
        matrix = oracle_ider_matrix(quiver, ones_rep(quiver))
        self.assertEqual(matrix.to_rows(), [[-1, 1, 0], [0, -1, 1], [1, 0, -1]])

    def test_loop_block(self):
        """A loop contributes mats(l) - I."""
        quiver = Quiver.build(["v"], [("l", "v", "v")])
        rep = QuiverRep(
            quiver=quiver,
            field=RATIONALS,
            dims={"v": 2},
            mats={"l": DenseMatrix.from_rows(RATIONALS, [[2, 1], [0, 1]])},
        )
        self.assertEqual(oracle_ider_matrix(quiver, rep).to_rows(), [[1, 1], [0, 0]])
        self.assertEqual(h1(quiver, rep).dim, 1)
        self.assertTrue(check_equivalence(quiver, rep).passed)

    def test_empty_quiver(self):
        quiver = Quiver.build(["u", "v"], [])
        rep = regular_rep(quiver, RATIONALS)
        self.assertEqual(oracle_ider_matrix(quiver, rep).shape, (0, 2))
        self.assertEqual(h1(quiver, rep).dim, 0)

    def test_zero_rep(self):
        quiver = gen_example("bicycle", 3)
        rep = QuiverRep(
            quiver=quiver,
            field=RATIONALS,
            dims={v: 0 for v in quiver.vertices},
            mats={a.name: DenseMatrix.zeros(RATIONALS, 0, 0) for a in quiver.arrows},
        )
        partition = algorithm_a(quiver)
        generators = build_generators(quiver, partition, algorithm_b(quiver, partition), rep)
        self.assertEqual(generators.shape, (0, 0))
        self.assertEqual(h1(quiver, rep).dim, 0)

    def test_invalid_rep_rejected(self):
        quiver = gen_example("chain", 2)
        rep = QuiverRep(quiver=quiver, field=RATIONALS, dims={"1": 1, "2": 1}, mats={})
        with self.assertRaises(ValueError):
            h1(quiver, rep)


class TestResultLabels(unittest.TestCase):
    """Tests for ambient blocks and basis labels."""

    def test_ambient_blocks(self):
        quiver = gen_example("star", 3)
        rep = regular_rep(quiver, RATIONALS)
        result = h1(quiver, rep)
        self.assertEqual([b.arrow for b in result.ambient.blocks], ["a1", "a2", "a3"])
        self.assertEqual([b.offset for b in result.ambient.blocks], [0, 4, 8])
        self.assertEqual(result.ambient.total_dim, 12)
        self.assertEqual(result.ider_rank, 7)

    def test_labels_match_dimension(self):
        quiver = gen_example("zigzag", 2)
        rep = regular_rep(quiver, RATIONALS)
        result = h1(quiver, rep)
        self.assertEqual(len(result.basis_labels), result.dim)
        self.assertEqual(len(result.display_labels), result.dim)
        for label in result.display_labels:
            arrow, _, basis = label.partition(":")
            self.assertTrue(quiver.has_arrow(arrow))
            self.assertIn(basis, rep.basis_names[quiver.arrow(arrow).target])

    def test_cochain_space_locate(self):
        quiver = gen_example("chain", 3)
        rep = regular_rep(quiver, RATIONALS)
        space = CochainSpace.build(quiver, rep, ["a1", "a2"])
        self.assertEqual(space.locate(0), ("a1", 0))
        self.assertEqual(space.locate(3), ("a2", 0))
        with self.assertRaises(IndexError):
            space.locate(5)


class TestInvariance(unittest.TestCase):
    """dim H^1 does not depend on input order or on scaling arrows."""

    def test_reordering(self):
        rng = random.Random(8)
        for family in ("star", "zigzag", "bicycle"):
            quiver = gen_example(family, 3)
            rep = random_rep(rng, quiver, F101, 2)
            shuffled = list(quiver.arrows)
            rng.shuffle(shuffled)
            reordered = Quiver(vertices=quiver.vertices[::-1], arrows=tuple(shuffled))
            moved = QuiverRep(quiver=reordered, field=F101, dims=rep.dims, mats=rep.mats)
            self.assertEqual(h1(quiver, rep).dim, h1(reordered, moved).dim)

    def test_scaling_acyclic(self):
        for family in ("chain", "star", "zigzag"):
            quiver = gen_example(family, 3)
            rep = regular_rep(quiver, RATIONALS)
            scaled = QuiverRep(
                quiver=quiver,
                field=RATIONALS,
                dims=rep.dims,
                mats={name: m.scaled(RATIONALS.coerce(3)) for name, m in rep.mats.items()},
            )
            self.assertEqual(h1(quiver, rep).dim, h1(quiver, scaled).dim)


if __name__ == '__main__':
    unittest.main()
