"""The verification suite behind ``hptkit verify``: symbolic checks, transfers and instances."""

import logging
from typing import Callable, Optional

from hptkit.constants import DEFAULT_INSTANCES, DEFAULT_ORDER, DEFAULT_PRODUCT_BOUND, DEFAULT_SEED
from hptkit.errors import HptkitError
from hptkit.freealg.checks import presentation_check
from hptkit.freealg.structure import brute_force_A0_rank, check_A0_products, enumerate_A0_basis
from hptkit.hatseries.checks import (
    dalpha_dbeta_check,
    inspection_identities_check,
    involution_check,
    structural_check,
    tower_check,
)
from hptkit.perturb.instances import instance_report, random_instance
from hptkit.reports import CheckResult, Report, boolean_check
from hptkit.transfer.contractions import TRANSFERS
from hptkit.utils.logging import sampled_logger

logger = logging.getLogger(__name__)

# share of instance lines that reach the log
INSTANCE_LOG_SAMPLE = 0.05

HAT_CHECKS: dict[str, Callable[[int], Report]] = {
    "structural": structural_check,
    "involution": involution_check,
    "inspection": inspection_identities_check,
    "dalpha": dalpha_dbeta_check,
}


def hat_orders(order: int) -> list[int]:
    return list(range(2, order + 1, 2))


def hatseries_block(target: str, order: int) -> Report:
    """One completed-algebra check at every even order up to ``order``."""
    report = Report(subject=target)
    for current in hat_orders(order):
        report.merge(HAT_CHECKS[target](current), prefix=f"L={current}/")
    logger.info("%s checked at orders %s", target, hat_orders(order))
    return report


def a0_block(order: int, products_length: int = DEFAULT_PRODUCT_BOUND) -> Report:
    report = Report(subject="A0")
    counts, failures = {}, []
    for length in range(order + 1):
        try:
            counts[str(length)] = len(enumerate_A0_basis(length))
        except HptkitError as e:
            failures.append(f"length {length}: {e}")
    report.add(
        boolean_check(
            "A0-count",
            "normal degree zero words match the rank of the reduction map",
            not failures,
            counts=counts,
            failing=failures,
        )
    )
    report.merge(check_A0_products(products_length))
    logger.info("A0 basis counts %s", counts)
    return report


def transfer_block(bound: Optional[int] = None, cap: Optional[int] = None) -> Report:
    report = Report(subject="transfer")
    for algebra, transfer in TRANSFERS.items():
        try:
            if algebra == "Ax":
                result = transfer(bound or DEFAULT_PRODUCT_BOUND, cap)
            elif algebra == "A":
                result = transfer(bound or DEFAULT_PRODUCT_BOUND)
            else:
                result = transfer() if bound is None else transfer(bound)
        except HptkitError as e:
            report.add(boolean_check(f"{algebra}", f"contraction of {algebra}", False, error=str(e)))
            continue
        report.merge(result.report, prefix=f"{algebra}/")
        logger.info(
            "transfer %s: %s, validity length %d",
            algebra,
            "pass" if result.passed else "FAIL",
            result.validity_length,
        )
    return report


def aggregate(reports: list[tuple[int, Report]], subject: str) -> Report:
    """One check per label, listing the seeds on which it failed."""
    seen: dict[str, CheckResult] = {}
    failed: dict[str, list[int]] = {}
    for seed, report in reports:
        for check in report.checks:
            seen.setdefault(check.label, check)
            if not check.passed:
                failed.setdefault(check.label, []).append(seed)
    aggregated = Report(subject=subject)
    for label, check in seen.items():
        seeds = failed.get(label, [])
        aggregated.add(
            CheckResult(
                label=label,
                description=check.description,
                passed=not seeds,
                details={"instances": len(reports), "failed_seeds": seeds},
            )
        )
    return aggregated


def instances_block(
    instances: int = DEFAULT_INSTANCES, seed: int = DEFAULT_SEED, cap: Optional[int] = None
) -> Report:
    """Seeded random instances, in seed order; the homology variant runs the ordinary lemma."""
    sampled = sampled_logger(__name__, INSTANCE_LOG_SAMPLE, seed)
    lemma_reports, homology_reports = [], []
    for current in range(seed, seed + instances):
        report = instance_report(random_instance(current), cap)
        lemma_reports.append((current, report))
        homology = random_instance(current, homology=True)
        homology_reports.append(
            (current, instance_report(homology, cap, parts=("contraction",)))
        )
        sampled.info("instance %d: %s", current, "pass" if report.passed else "FAIL")
    report = Report(subject="instances")
    report.merge(aggregate(lemma_reports, "instances"))
    report.merge(aggregate(homology_reports, "homology instances"), prefix="homology/")
    logger.info("%d instances from seed %d: %s", instances, seed, "pass" if report.passed else "FAIL")
    return report


def run_suite(
    target: str = "all",
    order: int = DEFAULT_ORDER,
    instances: int = DEFAULT_INSTANCES,
    seed: int = DEFAULT_SEED,
    bound: Optional[int] = None,
    cap: Optional[int] = None,
) -> Report:
    """Run one verification target, or all of them, into a single report."""
    blocks: dict[str, Callable[[], Report]] = {
        name: (lambda name=name: hatseries_block(name, order)) for name in HAT_CHECKS
    }
    blocks["tower"] = lambda: tower_check(order)
    blocks["freealg"] = presentation_check
    blocks["a0"] = lambda: a0_block(order)
    blocks["transfer"] = lambda: transfer_block(bound, cap)
    blocks["instances"] = lambda: instances_block(instances, seed, cap)

    selected = list(blocks) if target == "all" else [target]
    if target == "structural":
        selected.append("tower")
    report = Report(subject=f"verify {target}")
    for name in selected:
        report.merge(blocks[name](), prefix=f"{name}/")
    return report
