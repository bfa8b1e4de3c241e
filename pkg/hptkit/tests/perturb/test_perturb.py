"""Tests for perturbation kits, the three perturbation lemmas and the specialization map."""

import dataclasses
import json
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hptkit.contra import validate_structure
from hptkit.contra.serialization import structure_to_dict
from hptkit.errors import InputError, InvertibilityError, StructureError
from hptkit.excore import GradedMap
from hptkit.freealg.element import FreeElement, generators
from hptkit.perturb import (
    Perturbation,
    atonce_contraction,
    build_kit,
    check_perturbation,
    evaluate,
    instance_report,
    kit_to_dict,
    load_perturbation,
    nilpotency_index,
    perturb_contraction,
    perturb_pseudo,
    perturbation_from_dict,
    perturbation_to_dict,
    random_instance,
    series_formulas_check,
    specialization_check,
    specialization_order,
    verify_kit_identities,
)
from hptkit.reports import Report
from hptkit.tests.testutils import (
    cone,
    doubled_pseudocontraction,
    standard_contraction,
    standard_perturbation,
)

x, s, tau = generators()


class TestStandardExample(unittest.TestCase):
    def setUp(self):
        self.c = standard_contraction()
        self.p = standard_perturbation(self.c)
        self.kit = build_kit(self.c, self.p)

    def test_perturbed_projection(self):
        # π_∂(c) = -2a
        self.assertEqual(self.kit.pi_del.entry(0, "a", "c"), -2)
        self.assertEqual(self.kit.pi_del.entry(0, "a", "a"), 1)

    def test_alpha_is_identity(self):
        self.assertEqual(self.kit.alpha, GradedMap.identity(self.c.N.module))
        self.assertTrue(self.kit.Dcal.is_zero())

    def test_perturbed_contraction_is_valid(self):
        perturbed, dcal = perturb_contraction(self.c, self.p)
        self.assertTrue(validate_structure(perturbed, "contraction").passed)
        self.assertTrue(dcal.is_zero())

    def test_identities(self):
        self.assertTrue(verify_kit_identities(self.kit, self.c, self.p).passed)
        self.assertTrue(series_formulas_check(self.kit, self.c, self.p).passed)

    def test_atonce(self):
        result = atonce_contraction(self.c, self.p)
        self.assertEqual(result.M.module.total_dim, 1)

    def test_kit_to_dict(self):
        perturbed, _ = perturb_contraction(self.c, self.p)
        data = kit_to_dict(self.kit, perturbed, Report(subject="kit"))
        self.assertEqual(data["inverse"], "neumann")
        self.assertIn("pi_del", data["operators"])
        self.assertEqual(data["perturbed"]["kind"], "contraction")
        json.dumps(data)


def test_zero_perturbation_changes_nothing():
    c = standard_contraction()
    perturbed, dcal = perturb_contraction(c, Perturbation.zero(c.N))
    assert perturbed.h == c.h
    assert perturbed.pi == c.pi
    assert perturbed.nabla == c.nabla
    assert dcal.is_zero()


def test_non_nilpotent_perturbation():
    c, p = cone(1)
    with pytest.raises(InvertibilityError) as excinfo:
        build_kit(c, p, cap=5)
    assert excinfo.value.iterations == 5


def test_exact_inverse_of_the_cone():
    c, p = cone(1)
    kit = build_kit(c, p, inverse="exact")
    assert kit.inverse == "exact"
    assert verify_kit_identities(kit, c, p).passed


def test_perturbation_on_another_complex():
    c = standard_contraction()
    _, p = cone(2)
    with pytest.raises(StructureError):
        build_kit(c, p)


class TestSpecialization(unittest.TestCase):
    def setUp(self):
        self.c = standard_contraction()
        self.p = standard_perturbation(self.c)

    def test_generators(self):
        self.assertEqual(evaluate(s, self.c, self.p), self.c.h)
        self.assertEqual(evaluate(x * s, self.c, self.p), self.p.delta @ self.c.h)

    def test_inhomogeneous_element(self):
        with pytest.raises(StructureError):
            evaluate(x + s, self.c, self.p)

    def test_zero_element(self):
        self.assertTrue(evaluate(FreeElement.zero(), self.c, self.p, -1).is_zero())

    def test_nilpotency(self):
        self.assertEqual(nilpotency_index(self.c.h @ self.p.delta), 1)
        self.assertEqual(nilpotency_index(self.p.delta @ self.c.h), 2)
        self.assertEqual(specialization_order(self.c, self.p), 4)

    def test_identities_specialize(self):
        kit = build_kit(self.c, self.p)
        report = specialization_check(kit, self.c, self.p)
        self.assertTrue(report.passed, report.failures())
        self.assertIn("spec:D", report.labels())


class TestSerialization(unittest.TestCase):
    def test_from_dict(self):
        base = standard_contraction().N
        p = perturbation_from_dict({"del": [{"from": "b", "to": "a", "coeff": "2"}]}, base)
        self.assertEqual(p.delta, standard_perturbation().delta)
        self.assertEqual(perturbation_to_dict(p), {"del": [{"from": "b", "to": "a", "coeff": "2"}]})

    def test_wrong_degree(self):
        base = standard_contraction().N
        with pytest.raises(InputError):
            perturbation_from_dict({"del": [{"from": "a", "to": "b"}]}, base)

    def test_missing_entries(self):
        with pytest.raises(InputError):
            perturbation_from_dict({"d": []}, standard_contraction().N)


class TestRandomInstances(unittest.TestCase):
    def test_deterministic(self):
        first, second = random_instance(5), random_instance(5)
        self.assertEqual(
            structure_to_dict(first.contraction), structure_to_dict(second.contraction)
        )
        self.assertEqual(first.perturbation.delta, second.perturbation.delta)
        self.assertEqual(first.scale, second.scale)

    def test_contraction_is_valid(self):
        instance = random_instance(11)
        self.assertTrue(validate_structure(instance.contraction, "contraction").passed)
        self.assertTrue(validate_structure(instance.pseudocontraction()).passed)

    def test_homology_variant(self):
        instance = random_instance(11, homology=True)
        self.assertTrue(validate_structure(instance.contraction, "contraction").passed)


@settings(max_examples=8, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_instances_pass(seed):
    report = instance_report(random_instance(seed))
    assert report.passed, [str(check) for check in report.failures()]


@settings(max_examples=4, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_homology_instances_pass(seed):
    report = instance_report(random_instance(seed, homology=True), parts=("contraction",))
    assert report.passed, [str(check) for check in report.failures()]


def test_load_perturbation(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(perturbation_to_dict(standard_perturbation())))
    p = load_perturbation(path, standard_contraction().N)
    assert p.delta == standard_perturbation().delta


def test_pseudo_lemma_with_exact_inverse():
    s = doubled_pseudocontraction()
    n = s.N.module
    # ∂e1 = e0 makes h∂ the identity on e1
    p = Perturbation(s.N, GradedMap.from_entries(n, n, -1, [("e1", "e0", 1)]))
    with pytest.raises(InvertibilityError):
        perturb_pseudo(s, p, cap=4)
    perturbed = perturb_pseudo(s, p, inverse="exact")
    assert validate_structure(perturbed).passed
    assert perturbed.h.entry(0, "e1", "e0") == Fraction(1, 2)
    assert perturbed.tau == GradedMap.scalar(n, Fraction(3, 2))


def test_pseudo_lemma_reuses_a_given_kit():
    s = doubled_pseudocontraction()
    n = s.N.module
    p = Perturbation(s.N, GradedMap.from_entries(n, n, -1, [("e1", "e0", 1)]))
    kit = build_kit(s, p, inverse="exact")
    # the default Neumann inverse would not terminate, so the given kit must be used
    perturbed = perturb_pseudo(s, p, kit=kit)
    assert perturbed.h == kit.h_del


SCALINGS = [1, -1, 2, Fraction(1, 3)]


@pytest.mark.parametrize("value", SCALINGS)
def test_scaled_perturbation_of_the_standard_example(value):
    c = standard_contraction()
    p = standard_perturbation(c).scaled(value)
    assert p.delta.entry(1, "a", "b") == 2 * value
    assert check_perturbation(p).passed
    perturbed, _ = perturb_contraction(c, p)
    assert validate_structure(perturbed, "contraction").passed
    kit = build_kit(c, p)
    assert kit.pi_del.entry(0, "a", "c") == -2 * value
    assert verify_kit_identities(kit, c, p).passed
    assert series_formulas_check(kit, c, p).passed


@pytest.mark.parametrize("value", SCALINGS)
@pytest.mark.parametrize("seed", [3, 11, 29])
def test_scaled_perturbation_of_random_instances(seed, value):
    instance = random_instance(seed)
    p = instance.perturbation
    scaled = p.scaled(value)
    # (d + λ∂)² = (λ² - λ)∂², so only λ = 1 or ∂² = 0 keeps a perturbation
    expected = value == 1 or (p.delta @ p.delta).is_zero()
    assert check_perturbation(scaled).passed == expected
    if expected:
        report = instance_report(dataclasses.replace(instance, perturbation=scaled))
        assert report.passed, [str(check) for check in report.failures()]
