"""Tests for structure validation, the equivalences and the Hodge decomposition."""

import json
import unittest

import pytest

from hptkit.contra import (
    Contraction,
    HodgeData,
    Pseudocontraction,
    compar_classify,
    contraction_to_hodge,
    hodge_decomposition_check,
    hodge_dependence_check,
    load_structure,
    pseudo_to_weak,
    structure_to_dict,
    validate_structure,
    weak_to_pseudo,
)
from hptkit.errors import ContractViolation, InputError, StructureError
from hptkit.excore import ChainComplex, GradedMap, image_subcomplex
from hptkit.tests.testutils import (
    doubled_pseudocontraction,
    graded_map,
    module,
    standard_contraction,
)


class TestValidateStructure(unittest.TestCase):
    def test_standard_contraction_passes_every_kind(self):
        c = standard_contraction()
        for kind in ("weak", "contraction"):
            report = validate_structure(c, kind)
            self.assertTrue(report.passed, str(report))
        self.assertEqual(
            validate_structure(c).labels(),
            [
                "chain-pi",
                "chain-nabla",
                "pi-surjective",
                "nabla-injective",
                "co1",
                "side1",
                "co0",
                "side:pi",
                "side:nabla",
            ],
        )

    def test_wrong_homotopy_fails_co1(self):
        c = standard_contraction()
        n = c.N.module
        broken = Contraction(
            M=c.M, N=c.N, pi=c.pi, nabla=c.nabla, h=graded_map(n, n, 1, ("c", "b", -1))
        )
        report = validate_structure(broken)
        self.assertEqual([check.label for check in report.failures()], ["co1"])
        first = report.check("co1").violations[0]
        self.assertEqual((first.degree, first.row, first.column), (0, "c", "c"))

    def test_window_restricts_identities(self):
        c = standard_contraction()
        n = c.N.module
        broken = Contraction(
            M=c.M, N=c.N, pi=c.pi, nabla=c.nabla, h=graded_map(n, n, 1, ("c", "b", 2))
        )
        self.assertFalse(validate_structure(broken).passed)
        self.assertFalse(validate_structure(broken, window={"a", "c"}).passed)
        self.assertTrue(validate_structure(broken, window={"a"}).passed)

    def test_pseudocontraction_cannot_be_validated_as_weak(self):
        with self.assertRaises(StructureError):
            validate_structure(doubled_pseudocontraction(), "weak")

    def test_rank_conditions(self):
        c = standard_contraction()
        n, m = c.N.module, c.M.module
        weak = Contraction(
            M=c.M, N=c.N, pi=GradedMap.zero(n, m, 0), nabla=c.nabla, h=c.h
        )
        report = validate_structure(weak)
        self.assertFalse(report.check("pi-surjective").passed)
        self.assertEqual(report.check("pi-surjective").details["rank_deficient_degrees"], {"0": 0})


class TestEquivalences(unittest.TestCase):
    def test_round_trip_recovers_image_of_nabla(self):
        c = standard_contraction()
        weak = pseudo_to_weak(weak_to_pseudo(c))
        image = image_subcomplex(c.N, c.nabla @ c.pi)
        self.assertEqual(weak.M.module, image.module)
        self.assertEqual(weak.pi @ weak.nabla, GradedMap.identity(weak.M.module))
        self.assertEqual(weak.nabla @ weak.pi, c.nabla @ c.pi)

    def test_doubled_pseudocontraction_is_not_hodge(self):
        classification = compar_classify(doubled_pseudocontraction())
        self.assertFalse(classification.verdict)
        for name in ("i", "ii", "iii"):
            self.assertFalse(classification.conditions[name].passed)

    def test_pseudocontraction_of_contraction_is_hodge(self):
        classification = compar_classify(weak_to_pseudo(standard_contraction()))
        self.assertTrue(classification.verdict)
        self.assertTrue(classification.conditions["iii"].passed)

    def test_minus_identity_weak_contraction(self):
        # t = -1 on the doubled cone: the image is everything and π = -1
        weak = pseudo_to_weak(doubled_pseudocontraction())
        self.assertEqual(weak.pi, -GradedMap.identity(weak.N.module))
        self.assertTrue(validate_structure(weak).passed)
        self.assertFalse(validate_structure(weak, "contraction").passed)

    def test_invalid_input_is_a_contract_violation(self):
        c = standard_contraction()
        n = c.N.module
        broken = Pseudocontraction(N=c.N, tau=GradedMap.identity(n), h=c.h)
        with self.assertRaises(ContractViolation):
            pseudo_to_weak(broken)

    def test_contraction_to_hodge(self):
        hodge = contraction_to_hodge(standard_contraction())
        self.assertTrue(validate_structure(hodge).passed)
        self.assertTrue(hodge_dependence_check(hodge).passed)


def test_hodge_dependence_is_vacuous_without_premises():
    report = hodge_dependence_check(HodgeData.from_pseudo(doubled_pseudocontraction()))
    check = report.check("ah-dep")
    assert check.passed
    assert not check.details["premises"]["ht"]


def test_hodge_decomposition_of_standard_contraction():
    report = hodge_decomposition_check(standard_contraction())
    assert report.passed
    assert report.check("hodge-split[0]").details["harmonic"] == 1
    assert report.check("hodge-split[1]").details["h_boundaries"] == 1


def test_hodge_decomposition_detects_missing_summand():
    n = module(d0=["a"], d1=["b"])
    c = ChainComplex(n, graded_map(n, n, -1, ("b", "a", 1)))
    fake = Contraction(
        M=ChainComplex(module(d0=["a"])),
        N=c,
        pi=graded_map(n, module(d0=["a"]), 0, ("a", "a", 1)),
        nabla=graded_map(module(d0=["a"]), n, 0, ("a", "a", 1)),
        h=GradedMap.zero(n, n, 1),
    )
    assert not hodge_decomposition_check(fake).passed


def test_structure_file_round_trip(tmp_path):
    path = tmp_path / "contraction.json"
    c = standard_contraction()
    path.write_text(json.dumps(structure_to_dict(c)))
    assert load_structure(path) == c


def test_unknown_kind_is_an_input_error(tmp_path):
    path = tmp_path / "structure.json"
    path.write_text(json.dumps({"kind": "homotopy"}))
    with pytest.raises(InputError, match="kind must be one of"):
        load_structure(path)
