"""Tests for the truncated model of the completed algebra."""

import unittest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hptkit.errors import StructureError
from hptkit.freealg.element import FreeElement, generators
from hptkit.hatseries import (
    HatElement,
    alpha_series,
    beta_series,
    dalpha_dbeta_check,
    geometric_inverse,
    inspection_identities_check,
    involution_check,
    phi_map,
    structural_check,
    tower_check,
)
from hptkit.hatseries.series import U, V

x, s, tau = generators()


class TestHatElement(unittest.TestCase):
    def test_body_is_truncated(self):
        a = HatElement(1 + x + x * s * x, 2)
        self.assertEqual(a.body, 1 + x)
        self.assertEqual(str(HatElement.exact(x)), "x")
        self.assertTrue(str(a).endswith("+ O(3)"))

    def test_order_of_sums_and_products(self):
        a = HatElement(1 + s * x, 4)
        b = HatElement(x, 2)
        self.assertEqual((a + b).order, 2)
        self.assertEqual((a * b).order, 2)
        self.assertEqual((a * x).order, 4)
        self.assertTrue((HatElement.exact(x) * x).is_exact)

    def test_equality_needs_equal_orders(self):
        self.assertNotEqual(HatElement(x, 2), HatElement(x, 3))
        self.assertTrue(HatElement(x, 2).agrees_with(HatElement(x + s * x * s, 2)))

    def test_differential_keeps_order(self):
        a = HatElement(s, 3).differential()
        self.assertEqual(a.order, 3)
        self.assertEqual(a.body, tau)


class TestSeries(unittest.TestCase):
    def test_alpha_low_orders(self):
        self.assertEqual(alpha_series(0).body, FreeElement.one())
        self.assertEqual(alpha_series(1).body, FreeElement.one())
        self.assertEqual(alpha_series(4).body, 1 - U + U * U)

    def test_beta_low_order(self):
        self.assertEqual(beta_series(2).body, 1 - V)

    def test_geometric_inverse_needs_zero_constant_term(self):
        with pytest.raises(ValueError):
            geometric_inverse(1 + U, 4)

    def test_dalpha_at_order_two(self):
        self.assertEqual(alpha_series(2).differential().body, -(tau * x))


class TestInvolution(unittest.TestCase):
    def test_x_stays_exact(self):
        image = phi_map(x, 4)
        self.assertTrue(image.is_exact)
        self.assertEqual(image.body, -x)

    def test_phi_of_alpha(self):
        self.assertTrue(phi_map(alpha_series(6)).agrees_with(1 + U))

    def test_phi_of_s(self):
        self.assertTrue(phi_map(s, 5).agrees_with(alpha_series(5) * s))

    def test_exact_input_needs_order(self):
        with pytest.raises(StructureError):
            phi_map(s)


@pytest.mark.parametrize("order", [0, 2, 4, 6])
def test_inspection_identities(order):
    report = inspection_identities_check(order)
    assert report.passed, report.failures()


@pytest.mark.parametrize("order", [2, 4, 6])
def test_dalpha_dbeta(order):
    assert dalpha_dbeta_check(order).passed


@pytest.mark.parametrize("order", [2, 4, 6])
def test_involution(order):
    report = involution_check(order)
    assert report.passed, report.failures()


def test_tower():
    assert tower_check(6).passed


class TestStructural(unittest.TestCase):
    def setUp(self):
        self.report = structural_check(6)

    def test_passes_on_generators(self):
        self.assertTrue(self.report.passed)
        self.assertEqual(self.report.labels(), ["structural:x", "structural:s", "structural:t"])

    def test_x_is_exact(self):
        self.assertTrue(self.report.check("structural:x").details["exact"])
        self.assertFalse(self.report.check("structural:s").details["exact"])

    def test_trace(self):
        rules = [step.rule for step in self.report.check("structural:s").trace]
        self.assertEqual(rules, ["input", "φ", "D", "φ", "Dˣ", "difference"])


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
def test_alpha_truncates_consistently(high, low):
    high, low = max(high, low), min(high, low)
    assert alpha_series(high).truncate(low) == alpha_series(low)
