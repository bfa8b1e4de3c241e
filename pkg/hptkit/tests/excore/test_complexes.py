"""Tests for chain complexes, inverses, images and homology contractions."""

import json
import unittest
from fractions import Fraction

import pytest

from hptkit.contra import validate_structure
from hptkit.errors import (
    ContractViolation,
    InputError,
    NonNilpotentError,
    SingularMapError,
    StructureError,
)
from hptkit.excore import (
    ChainComplex,
    GradedMap,
    homology_contraction,
    image_subcomplex,
    invert,
    neumann_inverse,
    validate_complex,
)
from hptkit.excore.serialization import complex_to_dict, load_complex
from hptkit.tests.testutils import graded_map, module, standard_contraction


class TestValidateComplex(unittest.TestCase):
    def test_square_zero(self):
        c = standard_contraction().N
        self.assertTrue(validate_complex(c).passed)

    def test_reports_first_violating_entry(self):
        n = module(d0=["e0"], d1=["e1"], d2=["e2"])
        d = graded_map(n, n, -1, ("e2", "e1", 1), ("e1", "e0", 1))
        report = validate_complex(ChainComplex(n, d))
        self.assertFalse(report.passed)
        violation = report.check("d2").violations[0]
        self.assertEqual((violation.degree, violation.row, violation.column), (2, "e0", "e2"))
        self.assertEqual(violation.value, "1")

    def test_differential_must_have_degree_minus_one(self):
        n = module(d0=["a"])
        with self.assertRaises(StructureError):
            ChainComplex(n, GradedMap.identity(n))


class TestInverses(unittest.TestCase):
    def setUp(self):
        self.n = module(d0=["a", "b", "c"])

    def test_neumann_inverse_of_nilpotent(self):
        u = graded_map(self.n, self.n, 0, ("a", "b", 1), ("b", "c", 2))
        inverse = neumann_inverse(u)
        identity = GradedMap.identity(self.n)
        self.assertEqual(inverse @ (identity + u), identity)
        self.assertEqual(inverse.entry(0, "c", "a"), 2)

    def test_neumann_inverse_cap(self):
        u = graded_map(self.n, self.n, 0, ("a", "a", Fraction(1, 2)))
        with self.assertRaises(NonNilpotentError) as raised:
            neumann_inverse(u, cap=5)
        self.assertEqual(raised.exception.iterations, 5)

    def test_invert(self):
        u = graded_map(self.n, self.n, 0, ("a", "a", 2), ("b", "b", 1), ("b", "a", 1), ("c", "c", -1))
        inverse = invert(u)
        self.assertEqual(inverse @ u, GradedMap.identity(self.n))
        self.assertEqual(inverse.entry(0, "a", "b"), Fraction(-1, 2))

    def test_invert_singular(self):
        u = graded_map(self.n, self.n, 0, ("a", "a", 1), ("b", "a", 1), ("c", "c", 1))
        with self.assertRaises(SingularMapError) as raised:
            invert(u)
        self.assertEqual(raised.exception.degree, 0)


class TestImageAndHomology(unittest.TestCase):
    def test_homology_of_standard_complex(self):
        expected = standard_contraction()
        contraction = homology_contraction(expected.N)
        self.assertEqual(contraction, expected)
        self.assertTrue(validate_structure(contraction).passed)

    def test_homology_with_two_classes(self):
        n = module(d0=["a", "c"], d1=["b", "e"], d2=["f"])
        d = graded_map(n, n, -1, ("b", "c", 1), ("e", "c", 2))
        contraction = homology_contraction(ChainComplex(n, d))
        self.assertEqual(contraction.M.module, module(d0=["a"], d1=["e"], d2=["f"]))
        self.assertEqual(contraction.nabla.column(1, "e"), {"b": -2, "e": 1})
        self.assertTrue(validate_structure(contraction).passed)

    def test_image_of_minus_identity(self):
        c = standard_contraction().N
        minus = -c.identity()
        image = image_subcomplex(c, minus)
        self.assertEqual(image.module, c.module)
        self.assertEqual(image.inclusion, c.identity())
        self.assertEqual(image.corestrict(minus), minus)
        self.assertEqual(image.differential, c.d)

    def test_image_requires_chain_map(self):
        c = standard_contraction().N
        n = c.module
        t = graded_map(n, n, 0, ("a", "a", 1), ("c", "c", 1))
        with self.assertRaises(ContractViolation):
            image_subcomplex(c, t)


def test_complex_file_round_trip(tmp_path):
    path = tmp_path / "complex.json"
    c = standard_contraction().N
    path.write_text(json.dumps(complex_to_dict(c)))
    assert load_complex(path) == c


@pytest.mark.parametrize(
    "document, message",
    [
        ('{"degrees": {"0": ["a"], "1": ["b"]}, "d": [{"from": "b", "to": "a", "coeff": "1/0"}]}',
         "zero denominator"),
        ('{"degrees": {"0": ["a"]}, "d": [{"from": "a", "to": "a"}]}', "does not have degree"),
        ('{"degrees": {"0": ["a"], "1": ["a"]}, "d": []}', "occurs in degrees"),
        ('{"degrees": {"0": ["a"]}, "d": [{"from": "a", "to": "a", "coeff": 0.5}]}', "d.0.coeff"),
    ],
)
def test_malformed_complexes(tmp_path, document, message):
    path = tmp_path / "bad.json"
    path.write_text(document)
    with pytest.raises(InputError, match=message):
        load_complex(path)


def test_json_syntax_error_has_location(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "degrees": {\n    "0": ["a"\n  }\n}')
    with pytest.raises(InputError) as raised:
        load_complex(path)
    assert raised.value.line == 4
    assert str(raised.value).startswith(str(path) + ":4:")
