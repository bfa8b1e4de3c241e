"""Seeded random contractions with perturbations that lower a weight filtration.

An instance starts from a direct sum of elementary pieces ``b -> c`` (in the same
degree pair and weight) and homology generators ``a``. The base data is conjugated
by a weight-preserving unipotent map; the perturbation is what conjugation by a
weight-lowering unipotent map adds to the differential. Since ``h`` preserves the
weight and ``∂`` strictly lowers it, ``h∂`` and ``∂h`` are nilpotent.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from hptkit.constants import INSTANCE_WEIGHTS, MAX_INSTANCE_DEGREE, MAX_INSTANCE_DIMENSION
from hptkit.contra.equivalence import pseudo_to_weak
from hptkit.contra.hodge import hodge_decomposition_check
from hptkit.contra.structures import Contraction, Pseudocontraction, WeakContraction
from hptkit.contra.validate import validate_structure
from hptkit.errors import HptkitError
from hptkit.excore.complexes import ChainComplex, neumann_inverse
from hptkit.excore.homology import homology_contraction
from hptkit.excore.maps import GradedMap
from hptkit.excore.modules import GradedModule
from hptkit.perturb.identities import series_formulas_check, verify_kit_identities
from hptkit.perturb.kit import Perturbation, build_kit, check_perturbation
from hptkit.perturb.lemmas import (
    image_isomorphism_check,
    lemma_checks,
    perturb_contraction,
    perturb_pseudo,
)
from hptkit.perturb.specialize import specialization_check
from hptkit.reports import Report, boolean_check

logger = logging.getLogger(__name__)

COEFFICIENTS = (1, 2, -1, Fraction(1, 2), 3, Fraction(-2, 3))
# homotopy scales of the derived pseudocontractions
SCALES = (2, -1, Fraction(1, 2), 3)


@dataclass(frozen=True)
class RandomInstance:
    """A contraction, a perturbation of its big complex and a homotopy scale."""

    seed: int
    contraction: Contraction
    perturbation: Perturbation
    scale: Fraction
    weights: dict[str, int] = field(repr=False, compare=False)

    def pseudocontraction(self) -> Pseudocontraction:
        """``(N, λ(1 - ∇π), λh)``; ``τ`` is idempotent only for ``λ = 1``."""
        c = self.contraction
        return Pseudocontraction(N=c.N, tau=c.tau.scaled(self.scale), h=c.h.scaled(self.scale))

    def weak(self) -> WeakContraction:
        return pseudo_to_weak(self.pseudocontraction())


def _unipotent(rng: random.Random, module: GradedModule, related, density: float):
    """``1 + u`` and its inverse, ``u`` having entries where ``related(row, column)`` holds."""
    entries = []
    for j in module.degrees():
        labels = module.labels(j)
        for column in labels:
            for row in labels:
                if related(row, column) and rng.random() < density:
                    entries.append((column, row, rng.choice(COEFFICIENTS)))
    u = GradedMap.from_entries(module, module, 0, entries)
    identity = GradedMap.identity(module)
    return identity + u, neumann_inverse(u)


def _elementary_data(rng: random.Random, max_dimension: int, max_degree: int, weights: int):
    degrees: dict[int, list[str]] = {}
    weight: dict[str, int] = {}
    homology: dict[int, list[str]] = {}
    pairs = []
    target = rng.randint(2, max_dimension)
    count = 0

    def new_label(j: int, w: int) -> str:
        nonlocal count
        label = f"v{count}"
        count += 1
        degrees.setdefault(j, []).append(label)
        weight[label] = w
        return label

    while count < target:
        w = rng.randrange(weights)
        if target - count >= 2 and rng.random() < 0.7:
            j = rng.randrange(max_degree)
            b = new_label(j + 1, w)
            c = new_label(j, w)
            pairs.append((b, c, rng.choice(COEFFICIENTS)))
        else:
            j = rng.randrange(max_degree + 1)
            homology.setdefault(j, []).append(new_label(j, w))
    return degrees, weight, homology, pairs


def _sub_complex(c: ChainComplex, labels: set) -> ChainComplex:
    module = c.module.restricted(labels)
    d = GradedMap.from_entries(
        module,
        module,
        -1,
        [(column, row, value) for _, row, column, value in c.d.nonzero_entries() if column in labels],
    )
    return ChainComplex(module, d)


def _block_sum(source: GradedModule, target: GradedModule, degree: int, maps) -> GradedMap:
    entries = [
        (column, row, value) for f in maps for _, row, column, value in f.nonzero_entries()
    ]
    return GradedMap.from_entries(source, target, degree, entries)


def weighted_homology_contraction(c: ChainComplex, weights: dict[str, int]) -> Contraction:
    """``homology_contraction`` on each weight summand, reassembled as a direct sum."""
    pieces = []
    for w in sorted(set(weights.values())):
        labels = {label for label, value in weights.items() if value == w}
        pieces.append(homology_contraction(_sub_complex(c, labels)))
    homology_degrees: dict[int, list[str]] = {}
    for piece in pieces:
        for j, label in piece.M.module.items():
            homology_degrees.setdefault(j, []).append(label)
    homology = GradedModule(homology_degrees)
    module = c.module
    return Contraction(
        M=ChainComplex(homology),
        N=c,
        pi=_block_sum(module, homology, 0, [piece.pi for piece in pieces]),
        nabla=_block_sum(homology, module, 0, [piece.nabla for piece in pieces]),
        h=_block_sum(module, module, 1, [piece.h for piece in pieces]),
    )


def random_instance(
    seed: int,
    max_dimension: int = MAX_INSTANCE_DIMENSION,
    max_degree: int = MAX_INSTANCE_DEGREE,
    weights: int = INSTANCE_WEIGHTS,
    homology: bool = False,
) -> RandomInstance:
    """The instance determined by ``seed``.

    With ``homology=True`` the contraction is recomputed by ``homology_contraction``
    on each weight summand of the conjugated complex instead of being conjugated along.
    """
    rng = random.Random(seed)
    degrees, weight, homology_labels, pairs = _elementary_data(
        rng, max_dimension, max_degree, weights
    )
    module = GradedModule(degrees)
    small = GradedModule(homology_labels)
    d0 = GradedMap.from_entries(module, module, -1, [(b, c, v) for b, c, v in pairs])
    h0 = GradedMap.from_entries(module, module, 1, [(c, b, 1 / Fraction(v)) for b, c, v in pairs])
    flat = [label for labels in homology_labels.values() for label in labels]
    pi0 = GradedMap.from_entries(module, small, 0, [(a, a, 1) for a in flat])
    nabla0 = GradedMap.from_entries(small, module, 0, [(a, a, 1) for a in flat])

    position = {label: i for i, (_, label) in enumerate(module.items())}

    def same_weight_above(row: str, column: str) -> bool:
        return weight[row] == weight[column] and position[row] < position[column]

    g, g_inv = _unipotent(rng, module, same_weight_above, density=0.4)
    d = g @ d0 @ g_inv
    base = ChainComplex(module, d)
    if homology:
        contraction = weighted_homology_contraction(base, weight)
    else:
        contraction = Contraction(
            M=ChainComplex(small), N=base, pi=pi0 @ g_inv, nabla=g @ nabla0, h=g @ h0 @ g_inv
        )

    lower, lower_inv = _unipotent(
        rng, module, lambda row, column: weight[row] < weight[column], density=0.3
    )
    delta = lower @ d @ lower_inv - d
    scale = Fraction(rng.choice(SCALES))
    logger.debug(
        "instance %d: dimension %d, %d pairs, ∂ has %d entries",
        seed,
        module.total_dim,
        len(pairs),
        sum(1 for _ in delta.nonzero_entries()),
    )
    return RandomInstance(
        seed=seed,
        contraction=contraction,
        perturbation=Perturbation(base, delta),
        scale=scale,
        weights=weight,
    )


def _attempt(report: Report, label: str, description: str, compute: Callable[[], Report]):
    """Merge the report of ``compute`` under ``label``, or record its error as a failure."""
    try:
        result = compute()
    except HptkitError as e:
        report.add(boolean_check(label, description, False, error=str(e)))
        return
    report.merge(result, prefix=f"{label}/")


PARTS = ("pseudo", "weak", "contraction")


def instance_report(
    instance: RandomInstance, cap: Optional[int] = None, parts: tuple[str, ...] = PARTS
) -> Report:
    """The lemma and identity checks of the selected ``parts`` on one instance."""
    p = instance.perturbation
    c = instance.contraction
    report = Report(subject=f"instance {instance.seed}")
    report.merge(check_perturbation(p))

    def pseudo() -> Report:
        s = instance.pseudocontraction()
        kit = build_kit(s, p, cap)
        result = verify_kit_identities(kit, s, p)
        result.merge(validate_structure(perturb_pseudo(s, p, cap)), prefix="pseudolem:")
        result.merge(specialization_check(kit, s, p, cap=cap))
        return result

    def weak() -> Report:
        w = instance.weak()
        kit = build_kit(w, p, cap)
        result = Report(subject="weak", checks=lemma_checks(w, p, kit))
        result.merge(image_isomorphism_check(kit, w, p))
        result.merge(verify_kit_identities(kit, w, p))
        return result

    def contraction() -> Report:
        kit = build_kit(c, p, cap)
        perturbed, _ = perturb_contraction(c, p, cap, strict=False)
        result = validate_structure(perturbed, "contraction")
        result.merge(series_formulas_check(kit, c, p, cap))
        result.merge(verify_kit_identities(kit, c, p))
        result.merge(hodge_decomposition_check(c), prefix="hodge:")
        return result

    descriptions = {
        "pseudo": ("pseudo perturbation lemma", pseudo),
        "weak": ("weak perturbation lemma", weak),
        "contraction": ("ordinary perturbation lemma", contraction),
    }
    for part in parts:
        description, compute = descriptions[part]
        _attempt(report, part, description, compute)
    return report
