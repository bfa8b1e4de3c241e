"""Tests for normal forms, the differentials and the free product algebra."""

import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hptkit.errors import InputError
from hptkit.freealg import (
    FreeElement,
    GenSymbol,
    apply_differential,
    blocks,
    decompose_free_product,
    format_element,
    generators,
    normal_form,
    normal_form_trace,
    normal_words,
    parse_element,
    presentation_check,
    reductions,
    twist_differential,
)

X, S, TAU = GenSymbol.X, GenSymbol.S, GenSymbol.TAU
x, s, tau = generators()


class TestNormalForm(unittest.TestCase):
    def test_relations(self):
        self.assertTrue((s * s).is_zero())
        self.assertEqual(s * tau, tau * s)
        v, u = x * s, s * x
        self.assertTrue((v * tau * u).is_zero())

    def test_normal_form_of_blocks(self):
        self.assertEqual(normal_form((X, S, TAU, TAU)), (X, TAU, TAU, S))
        self.assertIsNone(normal_form((S, TAU, S)))
        self.assertEqual(normal_form((S, X, S)), (S, X, S))

    def test_trace_labels_each_rewrite(self):
        steps = normal_form_trace((S, TAU, TAU))
        self.assertEqual([rule for rule, _ in steps], ["s.tau->tau.s", "s.tau->tau.s"])
        self.assertEqual(steps[-1][1], (TAU, TAU, S))
        self.assertEqual(normal_form_trace((S, TAU, S))[-1], ("s.s->0", None))

    def test_normal_word_counts(self):
        counts = [0] * 7
        for word in normal_words(6):
            counts[len(word)] += 1
        self.assertEqual(counts, [1, 3, 7, 17, 41, 99, 239])

    def test_all_rewrite_orders_agree(self):
        self.assertEqual(reductions((S, TAU, S, TAU)), {None})
        self.assertEqual(reductions((X, S, TAU, X)), {(X, TAU, S, X)})


class TestDifferential(unittest.TestCase):
    def test_generators(self):
        self.assertEqual(apply_differential(s), tau)
        self.assertEqual(apply_differential(x), -(x * x))
        self.assertTrue(apply_differential(tau).is_zero())

    def test_derived_values(self):
        self.assertTrue(apply_differential(x * x).is_zero())
        self.assertEqual(apply_differential(s * x), tau * x + s * x * x)

    def test_twisted_differential(self):
        self.assertEqual(twist_differential(x), x * x)
        self.assertEqual(twist_differential(s), tau + x * s + s * x)
        self.assertTrue(twist_differential(FreeElement.one()).is_zero())
        t = 1 - tau
        self.assertEqual(twist_differential(t), x * t - t * x)


class TestParser(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse_element("2*x^2.s - 1/2*tau + 1"), 2 * x * x * s - Fraction(1, 2) * tau + 1)
        self.assertEqual(parse_element("s.s"), FreeElement.zero())
        self.assertEqual(parse_element("-s.tau"), -(tau * s))

    def test_printer(self):
        self.assertEqual(format_element(FreeElement.zero()), "0")
        self.assertEqual(format_element(1 - tau), "1 - tau")
        self.assertEqual(str(x * x * tau * s - Fraction(3, 2) * s), "-3/2*s + x^2.tau.s")

    def test_syntax_errors_carry_location(self):
        with self.assertRaises(InputError) as raised:
            parse_element("x +\n  * s")
        self.assertEqual(raised.exception.line, 2)
        self.assertEqual(raised.exception.column, 3)

    def test_zero_denominator(self):
        with self.assertRaises(InputError):
            parse_element("1/0*x")


def test_block_split():
    assert blocks((X, TAU, S)) == [("P", (X,)), ("H", (TAU, S))]
    decomposition = decompose_free_product(x * tau * s + tau**3 + 1 + x + s)
    assert decomposition.scalar == 1
    assert decomposition.components[(2, "P")] == x * tau * s
    assert decomposition.components[(1, "H")] == tau**3 + s
    assert decomposition.components[(1, "P")] == x
    assert decomposition.total() == x * tau * s + tau**3 + 1 + x + s


@pytest.mark.parametrize("text", ["x", "s", "tau", "x.s.tau", "s.x^3.tau^2.s", "1 - tau"])
def test_printed_elements_parse_back(text):
    element = parse_element(text)
    assert parse_element(str(element)) == element


words = st.lists(st.sampled_from([X, S, TAU]), max_size=6).map(tuple)


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_differential_is_a_derivation(left, right):
    a, b = FreeElement.word(left), FreeElement.word(right)
    if a.is_zero():
        return
    sign = -1 if a.degree % 2 else 1
    assert apply_differential(a * b) == apply_differential(a) * b + (
        a * apply_differential(b)
    ).scaled(sign)


def test_presentation_check_passes_on_small_bounds():
    report = presentation_check(length=4, associativity_length=6)
    assert report.passed, str(report)
