"""Tests for truncated realizations and their contractions onto the ground ring."""

import unittest

import pytest

from hptkit.errors import StructureError
from hptkit.freealg.words import GenSymbol
from hptkit.perturb import check_perturbation
from hptkit.transfer import (
    commutator_perturbation,
    contraction_A,
    contraction_A_twisted,
    contraction_H,
    contraction_P,
    homotopy_A,
    homotopy_H,
    homotopy_P,
    realize,
)

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU


class TestRealization(unittest.TestCase):
    def test_words_of_H(self):
        r = realize("H", 3)
        self.assertEqual(len(r.words), 7)
        self.assertIn("tau^2.s", r.words)
        self.assertNotIn("s.tau", r.words)

    def test_truncation_flags_dropped_images(self):
        self.assertEqual(realize("P", 4).flagged, {})
        self.assertIn("x^5", realize("P", 5).flagged)

    def test_differential_of_P(self):
        d = realize("P", 4).complex.d
        self.assertEqual(d.entry(-1, "x^2", "x"), -1)
        self.assertTrue(d.column(-2, "x^2") == {})

    def test_differential_squares_to_zero(self):
        for algebra in ("H", "P", "A"):
            d = realize(algebra, 4).complex.d
            self.assertTrue((d @ d).is_zero(), algebra)
        d = realize("A", 4, twisted=True).complex.d
        self.assertTrue((d @ d).is_zero())

    def test_only_the_free_product_is_twisted(self):
        with pytest.raises(StructureError):
            realize("H", 3, twisted=True)
        with pytest.raises(StructureError):
            realize("B", 3)


class TestHomotopies(unittest.TestCase):
    def test_H(self):
        self.assertEqual(homotopy_H((TAU,)), (1, (S,)))
        self.assertEqual(homotopy_H((TAU, TAU)), (1, (TAU, S)))
        self.assertIsNone(homotopy_H((TAU, S)))
        self.assertIsNone(homotopy_H(()))

    def test_P(self):
        self.assertEqual(homotopy_P((X, X)), (-1, (X,)))
        self.assertIsNone(homotopy_P((X,)))

    def test_A(self):
        self.assertEqual(homotopy_A((X, TAU)), (-1, (X, S)))
        self.assertEqual(homotopy_A((TAU, X)), (1, (S, X)))
        self.assertEqual(homotopy_A((X, X)), (-1, (X,)))
        self.assertEqual(homotopy_A((X, X, TAU)), (1, (X, X, S)))
        self.assertIsNone(homotopy_A((X, S)))
        self.assertIsNone(homotopy_A((TAU, S, X, TAU)))


@pytest.mark.parametrize("transfer", [contraction_H, contraction_P])
def test_two_generator_contractions(transfer):
    result = transfer(6)
    assert result.passed, result.report.failures()
    assert result.validity_length >= 5


def test_free_product_contraction():
    result = contraction_A(6)
    assert result.passed, result.report.failures()
    h = result.contraction.h
    # h(xτ) = -xs
    assert h.entry(-1, "x.s", "x.tau") == -1


def test_larger_bound_extends_the_contraction():
    small, large = contraction_H(4), contraction_H(6)
    for j, row, column, value in small.contraction.h.nonzero_entries():
        assert large.contraction.h.entry(j, row, column) == value


class TestTwistedFreeProduct(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.result = contraction_A_twisted(6)

    def test_commutator_is_a_perturbation(self):
        p = commutator_perturbation(self.result.realization)
        self.assertTrue(check_perturbation(p).passed)

    def test_exact_inverse_fallback(self):
        self.assertEqual(self.result.details["inverse"], "exact")
        self.assertTrue(self.result.report.check("nontermination").passed)

    def test_validity_window(self):
        self.assertGreaterEqual(self.result.validity_length, 2)
        window = self.result.report.check("validity-window")
        self.assertTrue(window.passed)
        self.assertEqual(window.details["required_length"], 2)
        self.assertTrue(self.result.passed, self.result.report.failures())

    def test_all_axioms_on_the_required_window(self):
        for label in ("chain-pi", "chain-nabla", "co0", "co1", "side1", "side:pi", "side:nabla"):
            self.assertTrue(self.result.report.check(label).passed, label)
        self.assertTrue(self.result.details["per_length"]["2"])


def test_twisted_window_shortfall_fails_the_report():
    # no word is longer than the bound, so a longer required window cannot be met
    result = contraction_A_twisted(2, required=3)
    assert result.validity_length <= 2
    assert not result.report.check("validity-window").passed
    assert not result.passed
