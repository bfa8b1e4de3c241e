"""The perturbation lemma for pseudocontractions, weak contractions and contractions."""

from hptkit.perturb.identities import power_series, series_formulas_check, verify_kit_identities
from hptkit.perturb.instances import (
    RandomInstance,
    instance_report,
    random_instance,
    weighted_homology_contraction,
)
from hptkit.perturb.kit import (
    Perturbation,
    PerturbedKit,
    build_kit,
    check_perturbation,
    structure_operators,
)
from hptkit.perturb.lemmas import (
    atonce_contraction,
    image_isomorphism_check,
    lemma_checks,
    perturb_contraction,
    perturb_pseudo,
    perturb_weak,
    technical_checks,
)
from hptkit.perturb.serialization import (
    kit_to_dict,
    load_perturbation,
    perturbation_from_dict,
    perturbation_to_dict,
)
from hptkit.perturb.specialize import (
    evaluate,
    nilpotency_index,
    specialization_check,
    specialization_order,
)

__all__ = [
    "Perturbation",
    "PerturbedKit",
    "RandomInstance",
    "atonce_contraction",
    "build_kit",
    "check_perturbation",
    "evaluate",
    "image_isomorphism_check",
    "instance_report",
    "kit_to_dict",
    "lemma_checks",
    "load_perturbation",
    "nilpotency_index",
    "perturb_contraction",
    "perturb_pseudo",
    "perturb_weak",
    "perturbation_from_dict",
    "perturbation_to_dict",
    "power_series",
    "random_instance",
    "series_formulas_check",
    "specialization_check",
    "specialization_order",
    "structure_operators",
    "technical_checks",
    "verify_kit_identities",
    "weighted_homology_contraction",
]
