"""Tests for graded modules, maps and exact elimination."""

import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hptkit.errors import SingularMapError, StructureError
from hptkit.excore import EchelonBasis, Frame, GradedMap, GradedModule, commutator, reduce_columns
from hptkit.excore.linalg import rank
from hptkit.tests.testutils import graded_map, module


class TestGradedModule(unittest.TestCase):
    def test_empty_degrees_are_dropped(self):
        m = GradedModule({0: ["a"], 1: [], 3: ["b", "c"]})
        self.assertEqual(m.degrees(), [0, 3])
        self.assertEqual(m.total_dim, 3)
        self.assertEqual(m, GradedModule({3: ("b", "c"), 0: ("a",)}))

    def test_duplicate_labels_rejected(self):
        with self.assertRaises(StructureError):
            GradedModule({0: ["a", "a"]})

    def test_degree_of_requires_unique_label(self):
        m = GradedModule({0: ["a"], 1: ["a", "b"]})
        self.assertEqual(m.degree_of("b"), 1)
        with self.assertRaises(StructureError):
            m.degree_of("a")


class TestGradedMap(unittest.TestCase):
    def setUp(self):
        self.n = module(d0=["a", "c"], d1=["b"])

    def test_zero_entries_are_not_stored(self):
        f = graded_map(self.n, self.n, -1, ("b", "c", 1), ("b", "a", 0))
        self.assertEqual(list(f.nonzero_entries()), [(1, "c", "b", Fraction(1))])
        self.assertEqual(f - f, GradedMap.zero(self.n, self.n, -1))
        self.assertTrue((f - f).is_zero())

    def test_entries_of_wrong_degree_rejected(self):
        with self.assertRaises(StructureError):
            GradedMap(self.n, self.n, -1, {0: {"a": {"c": 1}}})

    def test_composition(self):
        d = graded_map(self.n, self.n, -1, ("b", "c", 1))
        h = graded_map(self.n, self.n, 1, ("c", "b", 3))
        self.assertEqual((d @ h).column(0, "c"), {"c": Fraction(3)})
        self.assertEqual((h @ d).column(1, "b"), {"b": Fraction(3)})
        self.assertEqual((d @ h).degree, 0)
        self.assertEqual(
            commutator(d, h), graded_map(self.n, self.n, 0, ("c", "c", 3), ("b", "b", 3))
        )

    def test_composition_names_the_mismatched_degree(self):
        other = module(d0=["a", "c"], d1=["b", "e"])
        d = graded_map(self.n, self.n, -1, ("b", "c", 1))
        f = graded_map(other, other, 0, ("e", "e", 1))
        with pytest.raises(StructureError, match=r"\(degree 1\)") as excinfo:
            f @ d
        self.assertEqual(excinfo.value.degree, 1)

    def test_adding_maps_of_different_degree_fails(self):
        d = graded_map(self.n, self.n, -1, ("b", "c", 1))
        h = graded_map(self.n, self.n, 1, ("c", "b", 1))
        with self.assertRaises(StructureError):
            d + h

    def test_apply_and_scale(self):
        f = graded_map(self.n, self.n, 0, ("a", "c", 2), ("c", "c", -1))
        self.assertEqual(f.apply(0, {"a": 1, "c": 2}), {})
        self.assertEqual((Fraction(1, 2) * f).entry(0, "c", "a"), 1)
        self.assertEqual(f.rank(0), 1)


class TestLinearAlgebra(unittest.TestCase):
    def test_echelon_basis(self):
        basis = EchelonBasis(["x", "y", "z"])
        self.assertTrue(basis.add({"x": 2, "y": 2}))
        self.assertTrue(basis.add({"y": 1, "z": 1}))
        self.assertFalse(basis.add({"x": 1, "z": -1}))
        self.assertEqual(basis.pivots(), ["x", "y"])
        self.assertEqual(basis.basis()[0], ("x", {"x": 1, "z": -1}))

    def test_reduce_columns(self):
        columns = {"p": {"r": 1}, "q": {"r": 2}, "s": {"t": 1}}
        reduction = reduce_columns(columns, ["p", "q", "s"], ["r", "t"])
        self.assertEqual(reduction.pivots, ["p", "s"])
        self.assertEqual(reduction.kernel, [("q", {"q": 1, "p": -2})])

    def test_frame_coordinates(self):
        frame = Frame([("u", {"x": 1, "y": 1}), ("v", {"y": 1})], ["x", "y"])
        self.assertEqual(frame.coordinates({"x": 2, "y": 5}), {"u": 2, "v": 3})

    def test_frame_rejects_dependent_vectors(self):
        with self.assertRaises(SingularMapError):
            Frame([("u", {"x": 1}), ("v", {"x": 2})], ["x", "y"])


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.dictionaries(
            st.sampled_from("abcd"),
            st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool),
            max_size=4,
        ),
        max_size=6,
    )
)
def test_rank_does_not_depend_on_key_order(vectors):
    assert rank(vectors, "abcd") == rank(vectors, "dcba")
    assert rank(vectors, "abcd") <= min(4, len(vectors))


def test_graded_map_equality_ignores_construction_order():
    n = module(d0=["a", "c"], d1=["b"])
    f = graded_map(n, n, -1, ("b", "c", 1), ("b", "a", 2))
    g = graded_map(n, n, -1, ("b", "a", 2), ("b", "c", 1))
    assert f == g
    with pytest.raises(TypeError):
        hash(f)
