"""JSON form of perturbations (``{"del": [entries]}``) and of perturbation kits."""

from pathlib import Path
from typing import Optional, Union

from hptkit.contra.serialization import structure_to_dict
from hptkit.contra.structures import Structure
from hptkit.errors import InputError, StructureError
from hptkit.excore.complexes import ChainComplex
from hptkit.excore.serialization import load_json, map_from_entries, map_to_entries
from hptkit.perturb.kit import Perturbation, PerturbedKit
from hptkit.reports import Report

KIT_OPERATORS = ("alpha", "beta", "t_del", "h_del", "Dcal", "nabla_del", "pi_del")


def perturbation_from_dict(data: dict, base: ChainComplex, path: Optional[str] = None) -> Perturbation:
    if not isinstance(data, dict) or "del" not in data:
        raise InputError('a perturbation is a JSON object with a "del" entry list', path=path)
    module = base.module
    delta = map_from_entries(data["del"], module, module, -1, path, "del")
    try:
        return Perturbation(base, delta)
    except StructureError as e:
        raise InputError(str(e), path=path) from e


def load_perturbation(path: Union[str, Path], base: ChainComplex) -> Perturbation:
    return perturbation_from_dict(load_json(path), base, path=str(path))


def perturbation_to_dict(p: Perturbation) -> dict:
    return {"del": map_to_entries(p.delta)}


def kit_to_dict(kit: PerturbedKit, perturbed: Structure, report: Report) -> dict:
    """The kit operators, the perturbed structure and the embedded identity report."""
    operators = {
        name: map_to_entries(getattr(kit, name))
        for name in KIT_OPERATORS
        if getattr(kit, name) is not None
    }
    return {
        "inverse": kit.inverse,
        "operators": operators,
        "perturbed": structure_to_dict(perturbed),
        "report": report.to_dict(),
    }
