"""
Representation Tests

Verifies path enumeration, the regular module, validation and evaluation
of paths and path-algebra elements.
"""

import random
import unittest
from fractions import Fraction

from ..algebra.path_algebra import PathAlgebraElement, pa_linear
from ..algebra.representation import (
    HomogeneityError,
    QuiverRep,
    enumerate_paths,
    eval_element,
    eval_path,
    regular_rep,
    rep_validate,
)
from ..cli.examples import gen_example
from ..cli.fuzz import random_rep
from ..core.field import RATIONALS, PrimeField
from ..core.quiver import CyclicQuiverError, compose
from ..linalg.dense import DenseMatrix

F101 = PrimeField(101)


def ones_rep(quiver, field=RATIONALS) -> QuiverRep:
    """One-dimensional representation with every arrow acting as 1."""
    return QuiverRep(
        quiver=quiver,
        field=field,
        dims={v: 1 for v in quiver.vertices},
        mats={a.name: DenseMatrix.from_rows(field, [[1]]) for a in quiver.arrows},
    )


class TestEnumeratePaths(unittest.TestCase):
    """Tests for path enumeration."""

    def test_chain(self):
        paths = enumerate_paths(gen_example("chain", 3))
        self.assertEqual([str(p) for p in paths], ["id_1", "id_2", "id_3", "a1", "a2", "a1*a2"])

    def test_star(self):
        self.assertEqual(len(enumerate_paths(gen_example("star", 3))), 7)

    def test_cycle_rejected(self):
        with self.assertRaises(CyclicQuiverError):
            enumerate_paths(gen_example("cycle", 3))


class TestRegularRep(unittest.TestCase):
    """Tests for the regular module."""

    def test_chain_dims(self):
        rep = regular_rep(gen_example("chain", 3), RATIONALS)
        self.assertEqual(rep.dims, {"1": 3, "2": 2, "3": 1})
        self.assertEqual(rep.basis_names["1"], ("id_1", "a1", "a1*a2"))
        self.assertTrue(rep_validate(rep).is_valid)

    def test_star_dims(self):
        rep = regular_rep(gen_example("star", 3), RATIONALS)
        self.assertEqual(rep.dims["x"], 4)
        for i in ("1", "2", "3"):
            self.assertEqual(rep.dims[i], 1)

    def test_zigzag_dims(self):
        rep = regular_rep(gen_example("zigzag", 2), F101)
        self.assertEqual(rep.dims, {"x1": 3, "x2": 3, "y1": 1, "y2": 1})
        self.assertTrue(rep_validate(rep).is_valid)

    def test_cycle_rejected(self):
        with self.assertRaisesRegex(CyclicQuiverError, "regular module requires acyclic quiver"):
            regular_rep(gen_example("cycle", 3), RATIONALS)

    def test_left_multiplication_fidelity(self):
        """eval_path(p) sends id_{s(p)} to the basis vector p."""
        quiver = gen_example("zigzag", 3)
        rep = regular_rep(quiver, RATIONALS)
        for path in enumerate_paths(quiver):
            image = eval_path(rep, path).column(0)
            expected = [1 if name == str(path) else 0 for name in rep.basis_names[path.target]]
            self.assertEqual(list(image), expected)

    def test_chain_path_action(self):
        quiver = gen_example("chain", 3)
        rep = regular_rep(quiver, RATIONALS)
        self.assertEqual(eval_path(rep, quiver.path("a1", "a2")).to_rows(), [[0], [0], [1]])


class TestValidation(unittest.TestCase):
    """Tests for rep_validate."""

    def test_shape_mismatch(self):
        quiver = gen_example("chain", 2)
        rep = QuiverRep(
            quiver=quiver,
            field=RATIONALS,
            dims={"1": 1, "2": 2},
            mats={"a1": DenseMatrix.from_rows(RATIONALS, [[1]])},
        )
        self.assertIn("shape mismatch at arrow a1", rep_validate(rep).first())

    def test_scalar_out_of_range(self):
        quiver = gen_example("chain", 2)
        rep = QuiverRep(
            quiver=quiver,
            field=F101,
            dims={"1": 1, "2": 1},
            mats={"a1": DenseMatrix(F101, 1, 1, (101,))},
        )
        self.assertIn("scalar out of range", rep_validate(rep).first())

    def test_missing_dimension_and_matrix(self):
        quiver = gen_example("chain", 2)
        rep = QuiverRep(quiver=quiver, field=RATIONALS, dims={"1": 1}, mats={})
        self.assertIn("missing dimension", rep_validate(rep).first())
        rep = QuiverRep(quiver=quiver, field=RATIONALS, dims={"1": 1, "2": 1}, mats={})
        self.assertIn("missing matrix", rep_validate(rep).first())

    def test_field_mismatch(self):
        quiver = gen_example("chain", 2)
        rep = QuiverRep(
            quiver=quiver,
            field=RATIONALS,
            dims={"1": 1, "2": 1},
            mats={"a1": DenseMatrix.from_rows(F101, [[1]])},
        )
        self.assertIn("field mismatch", rep_validate(rep).first())


class TestRepValue(unittest.TestCase):
    """QuiverRep is an immutable, hashable value."""

    def test_mappings_are_read_only(self):
        quiver = gen_example("chain", 2)
        dims = {"1": 1, "2": 1}
        rep = ones_rep(quiver)
        with self.assertRaises(TypeError):
            rep.dims["1"] = 5
        with self.assertRaises(TypeError):
            rep.mats["a1"] = DenseMatrix.zeros(RATIONALS, 1, 1)
        copied = QuiverRep(quiver=quiver, field=RATIONALS, dims=dims, mats=dict(rep.mats))
        dims["1"] = 7
        self.assertEqual(copied.dims["1"], 1)

    def test_hash(self):
        quiver = gen_example("star", 3)
        first = regular_rep(quiver, RATIONALS)
        second = regular_rep(quiver, RATIONALS)
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))
        self.assertEqual(len({first, second, ones_rep(quiver)}), 2)


class TestEvaluation(unittest.TestCase):
    """Tests for eval_path and eval_element."""

    def test_identity(self):
        quiver = gen_example("chain", 3)
        rep = regular_rep(quiver, RATIONALS)
        self.assertEqual(eval_path(rep, quiver.identity("1")), DenseMatrix.identity(RATIONALS, 3))

    def test_cycle_ones(self):
        quiver = gen_example("cycle", 3)
        rep = ones_rep(quiver)
        self.assertEqual(eval_path(rep, quiver.path("a1", "a2", "a3")).to_rows(), [[1]])
        element = pa_linear(
            1, PathAlgebraElement.of(quiver.identity("3")),
            -1, PathAlgebraElement.of(quiver.path("a3", "a1", "a2")),
        )
        self.assertEqual(eval_element(rep, element, "3", "3").to_rows(), [[0]])

    def test_zero_element(self):
        quiver = gen_example("star", 3)
        rep = regular_rep(quiver, RATIONALS)
        self.assertTrue(eval_element(rep, PathAlgebraElement.zero(), "1", "x").is_zero())
        self.assertEqual(eval_element(rep, PathAlgebraElement.zero(), "1", "x").shape, (4, 1))

    def test_negated_arrow(self):
        quiver = gen_example("star", 3)
        rep = regular_rep(quiver, RATIONALS)
        element = -PathAlgebraElement.of(quiver.arrow_path("a1"))
        column = eval_element(rep, element, "1", "x").column(0)
        expected = [-1 if name == "a1" else 0 for name in rep.basis_names["x"]]
        self.assertEqual(list(column), expected)

    def test_non_homogeneous(self):
        quiver = gen_example("chain", 3)
        rep = regular_rep(quiver, RATIONALS)
        element = PathAlgebraElement.of(quiver.arrow_path("a1")) + PathAlgebraElement.of(quiver.identity("1"))
        with self.assertRaises(HomogeneityError):
            eval_element(rep, element, "2", "1")

    def test_prime_coefficients_embed(self):
        quiver = gen_example("chain", 2)
        rep = ones_rep(quiver, F101)
        element = PathAlgebraElement.of(quiver.arrow_path("a1"), -3)
        self.assertEqual(eval_element(rep, element, "2", "1").to_rows(), [[98]])

    def test_linearity(self):
        quiver = gen_example("bicycle", 2)
        rng = random.Random(9)
        rep = random_rep(rng, quiver, RATIONALS, 3, fixed_dim=2)
        x = PathAlgebraElement.of(quiver.path("a1", "a2"), Fraction(1, 2))
        y = PathAlgebraElement.of(quiver.path("b2", "b1"), 3)
        combined = eval_element(rep, pa_linear(2, x, -1, y), "1", "1")
        separate = eval_element(rep, x, "1", "1").scaled(Fraction(2)) - eval_element(rep, y, "1", "1")
        self.assertEqual(combined, separate)

    def test_functoriality(self):
        """eval_path(p q) = eval_path(p) eval_path(q) on random representations."""
        quiver = gen_example("bicycle", 3)
        rng = random.Random(10)
        for field in (RATIONALS, F101):
            rep = random_rep(rng, quiver, field, 3)
            arrows = [quiver.arrow_path(a.name) for a in quiver.arrows]
            for p in arrows:
                for q in arrows:
                    pq = compose(p, q)
                    if pq is not None:
                        self.assertEqual(eval_path(rep, pq), eval_path(rep, p) @ eval_path(rep, q))


if __name__ == '__main__':
    unittest.main()
