"""
Document Tests

Verifies parsing and serialization of quiver, representation, partition
and matrix-pair documents.
"""

import json
import random
import unittest
from fractions import Fraction

from ..algebra.matrices import algorithm_b
from ..algebra.partition import algorithm_a
from ..algebra.representation import rep_validate
from ..cli.documents import (
    DocumentError,
    dump_json,
    element_from_doc,
    matrix_pair_from_doc,
    matrix_pair_to_doc,
    partition_from_doc,
    partition_to_doc,
    quiver_from_doc,
    quiver_to_doc,
    rep_from_doc,
    rep_to_doc,
)
from ..cli.examples import FAMILIES, gen_example
from ..cli.fuzz import random_quiver, random_rep
from ..core.field import RATIONALS, PrimeField
from ..core.quiver import CyclicQuiverError


class TestQuiverDocuments(unittest.TestCase):
    """Tests for quiver documents."""

    def test_round_trip_families(self):
        for family in FAMILIES:
            for n in (2, 3, 5):
                quiver = gen_example(family, n)
                self.assertEqual(quiver_from_doc(quiver_to_doc(quiver)), quiver)

    def test_canonical_text_is_stable(self):
        text = dump_json(quiver_to_doc(gen_example("zigzag", 3)))
        again = dump_json(quiver_to_doc(quiver_from_doc(json.loads(text))))
        self.assertEqual(text, again)
        self.assertTrue(text.endswith("}\n"))

    def test_random_round_trip(self):
        rng = random.Random(6)
        for _ in range(30):
            quiver = random_quiver(rng, 6, 10)
            self.assertEqual(quiver_from_doc(json.loads(dump_json(quiver_to_doc(quiver)))), quiver)

    def test_integer_identifiers(self):
        quiver = quiver_from_doc({"vertices": [1, 2], "arrows": [{"name": "a", "source": 2, "target": 1}]})
        self.assertEqual(quiver.vertices, ("1", "2"))

    def test_malformed(self):
        bad_documents = [
            [],
            {"vertices": ["1"]},
            {"vertices": ["1"], "arrows": [{"name": "a", "source": "1"}]},
            {"vertices": ["1"], "arrows": [{"name": "a", "source": "1", "target": "2"}]},
            {"vertices": [True], "arrows": []},
            {"vertices": ["1", "1"], "arrows": []},
        ]
        for document in bad_documents:
            with self.assertRaises(DocumentError):
                quiver_from_doc(document)


class TestRepDocuments(unittest.TestCase):
    """Tests for representation documents."""

    def test_regular(self):
        quiver = gen_example("chain", 3)
        rep = rep_from_doc(quiver, {"field": "q", "module": "regular"})
        self.assertEqual(rep.dims, {"1": 3, "2": 2, "3": 1})

    def test_regular_cyclic(self):
        with self.assertRaises(CyclicQuiverError):
            rep_from_doc(gen_example("cycle", 3), {"field": "q", "module": "regular"})

    def test_explicit(self):
        quiver = gen_example("chain", 2)
        rep = rep_from_doc(quiver, {
            "field": "rationals",
            "dims": {"1": 1, "2": 2},
            "matrices": {"a1": [["1/2", 3]]},
        })
        self.assertEqual(rep.mats["a1"].to_rows(), [[Fraction(1, 2), 3]])
        self.assertTrue(rep_validate(rep).is_valid)

    def test_prime_out_of_range(self):
        quiver = gen_example("chain", 2)
        rep = rep_from_doc(quiver, {
            "field": "prime 101",
            "dims": {"1": 1, "2": 1},
            "matrices": {"a1": [[101]]},
        })
        self.assertIn("scalar out of range", rep_validate(rep).first())

    def test_prime_strings_follow_integer_rule(self):
        quiver = gen_example("chain", 2)
        for entry in ("101", "-1", 101, -1):
            rep = rep_from_doc(quiver, {
                "field": "p:101",
                "dims": {"1": 1, "2": 1},
                "matrices": {"a1": [[entry]]},
            })
            self.assertIn("scalar out of range", rep_validate(rep).first(), entry)
        rep = rep_from_doc(quiver, {
            "field": "p:101",
            "dims": {"1": 1, "2": 2},
            "matrices": {"a1": [["7", "1/2"]]},
        })
        self.assertEqual(rep.mats["a1"].to_rows(), [[7, 51]])
        self.assertTrue(rep_validate(rep).is_valid)

    def test_empty_rows_use_source_dimension(self):
        quiver = gen_example("chain", 2)
        rep = rep_from_doc(quiver, {"field": "q", "dims": {"1": 0, "2": 2}, "matrices": {"a1": []}})
        self.assertEqual(rep.mats["a1"].shape, (0, 2))
        self.assertTrue(rep_validate(rep).is_valid)

    def test_malformed(self):
        quiver = gen_example("chain", 2)
        bad_documents = [
            {"dims": {}, "matrices": {}},
            {"field": "reals", "dims": {}, "matrices": {}},
            {"field": "q", "module": "projective"},
            {"field": "q", "dims": {"1": "one"}, "matrices": {}},
            {"field": "q", "dims": {"1": 1, "2": 1}, "matrices": {"a1": [[1], [1, 2]]}},
            {"field": "q", "dims": {"1": 1, "2": 1}, "matrices": {"a1": [[1.5]]}},
            {"field": "q", "dims": {"1": 1, "2": 1}, "matrices": {"a1": [["1/0"]]}},
            {"field": "p:101", "dims": {"1": 1, "2": 1}, "matrices": {"a1": [["1/0"]]}},
            {"field": "p:101", "dims": {"1": 1, "2": 1}, "matrices": {"a1": [["1/101"]]}},
        ]
        for document in bad_documents:
            with self.assertRaises(DocumentError):
                rep_from_doc(quiver, document)

    def test_random_round_trip(self):
        rng = random.Random(12)
        for field in (RATIONALS, PrimeField(101)):
            for _ in range(20):
                quiver = random_quiver(rng, 5, 8)
                rep = random_rep(rng, quiver, field, 3)
                parsed = rep_from_doc(quiver, json.loads(dump_json(rep_to_doc(rep))))
                self.assertEqual(dict(parsed.dims), dict(rep.dims))
                self.assertEqual(dict(parsed.mats), dict(rep.mats))


class TestPartitionAndMatrixDocuments(unittest.TestCase):
    """Tests for partition and structured matrix-pair documents."""

    def test_partition_round_trip(self):
        quiver = gen_example("bicycle", 3)
        partition = algorithm_a(quiver)
        self.assertEqual(partition_from_doc(quiver, partition_to_doc(partition)), partition)

    def test_partition_unknown_arrow(self):
        quiver = gen_example("chain", 3)
        with self.assertRaises(DocumentError):
            partition_from_doc(quiver, {"a": [], "b": [], "f": ["zz"], "g": [], "h": []})

    def test_matrix_pair_round_trip(self):
        for family in FAMILIES:
            quiver = gen_example(family, 3)
            pair = algorithm_b(quiver, algorithm_a(quiver))
            document = json.loads(dump_json(matrix_pair_to_doc(pair)))
            self.assertEqual(matrix_pair_from_doc(quiver, document), pair)

    def test_structured_terms(self):
        quiver = gen_example("cycle", 3)
        document = matrix_pair_to_doc(algorithm_b(quiver, algorithm_a(quiver)))
        entry = document["W"][2][0]
        self.assertIn({"coeff": 1, "identity": "3"}, entry)
        self.assertIn({"coeff": -1, "path": ["a3", "a1", "a2"]}, entry)

    def test_bad_term_coefficients(self):
        quiver = gen_example("cycle", 3)
        for coeff in ("1/0", "x", 1.5, True):
            with self.assertRaises(DocumentError):
                element_from_doc(quiver, [{"coeff": coeff, "identity": "1"}])
        element = element_from_doc(quiver, [{"coeff": "2/4", "path": ["a1"]}])
        self.assertEqual(element.coefficient(quiver.arrow_path("a1")), Fraction(1, 2))


if __name__ == '__main__':
    unittest.main()
