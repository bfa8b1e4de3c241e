"""Contractions, weak contractions, pseudocontractions and abstract Hodge decompositions."""

from hptkit.contra.equivalence import (
    Classification,
    compar_classify,
    contraction_to_hodge,
    hodge_dependence_check,
    pseudo_to_weak,
    weak_to_pseudo,
)
from hptkit.contra.hodge import hodge_decomposition_check
from hptkit.contra.serialization import load_structure, structure_from_dict, structure_to_dict
from hptkit.contra.structures import (
    Contraction,
    HodgeData,
    Pseudocontraction,
    Structure,
    WeakContraction,
    big_complex,
)
from hptkit.contra.validate import validate_structure

__all__ = [
    "Classification",
    "Contraction",
    "HodgeData",
    "Pseudocontraction",
    "Structure",
    "WeakContraction",
    "big_complex",
    "compar_classify",
    "contraction_to_hodge",
    "hodge_decomposition_check",
    "hodge_dependence_check",
    "load_structure",
    "pseudo_to_weak",
    "structure_from_dict",
    "structure_to_dict",
    "validate_structure",
    "weak_to_pseudo",
]
