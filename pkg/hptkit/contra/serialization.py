"""JSON form of structures: ``{"kind": ..., "N": complex, "M": complex, "pi": [...], ...}``."""

from pathlib import Path
from typing import Optional, Union

from hptkit.contra.structures import (
    Contraction,
    HodgeData,
    Pseudocontraction,
    Structure,
    WeakContraction,
)
from hptkit.contra.validate import KINDS
from hptkit.errors import InputError, StructureError
from hptkit.excore.serialization import (
    complex_from_dict,
    complex_to_dict,
    load_json,
    map_from_entries,
    map_to_entries,
)

REQUIRED_FIELDS = {
    "pseudocontraction": ("N", "tau", "h"),
    "weak": ("M", "N", "pi", "nabla", "h"),
    "contraction": ("M", "N", "pi", "nabla", "h"),
    "hodge": ("X", "t", "h"),
}


def structure_from_dict(data: dict, path: Optional[str] = None) -> Structure:
    if not isinstance(data, dict):
        raise InputError("a structure is a JSON object", path=path)
    kind = data.get("kind")
    if kind not in KINDS:
        raise InputError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}", path=path)
    missing = [name for name in REQUIRED_FIELDS[kind] if name not in data]
    if missing:
        raise InputError(f"{kind} is missing {', '.join(missing)}", path=path)

    try:
        if kind == "pseudocontraction":
            big = complex_from_dict(data["N"], path, "N")
            n = big.module
            return Pseudocontraction(
                N=big,
                tau=map_from_entries(data["tau"], n, n, 0, path, "tau"),
                h=map_from_entries(data["h"], n, n, 1, path, "h"),
            )
        if kind == "hodge":
            x = complex_from_dict(data["X"], path, "X")
            return HodgeData(
                X=x,
                t=map_from_entries(data["t"], x.module, x.module, 0, path, "t"),
                h=map_from_entries(data["h"], x.module, x.module, 1, path, "h"),
            )
        big = complex_from_dict(data["N"], path, "N")
        small = complex_from_dict(data["M"], path, "M")
        cls = Contraction if kind == "contraction" else WeakContraction
        return cls(
            M=small,
            N=big,
            pi=map_from_entries(data["pi"], big.module, small.module, 0, path, "pi"),
            nabla=map_from_entries(data["nabla"], small.module, big.module, 0, path, "nabla"),
            h=map_from_entries(data["h"], big.module, big.module, 1, path, "h"),
        )
    except StructureError as e:
        raise InputError(str(e), path=path) from e


def load_structure(path: Union[str, Path]) -> Structure:
    return structure_from_dict(load_json(path), path=str(path))


def structure_to_dict(s: Structure) -> dict:
    data = {"kind": s.kind}
    if isinstance(s, Pseudocontraction):
        data.update(N=complex_to_dict(s.N), tau=map_to_entries(s.tau), h=map_to_entries(s.h))
    elif isinstance(s, HodgeData):
        data.update(X=complex_to_dict(s.X), t=map_to_entries(s.t), h=map_to_entries(s.h))
    else:
        data.update(
            M=complex_to_dict(s.M),
            N=complex_to_dict(s.N),
            pi=map_to_entries(s.pi),
            nabla=map_to_entries(s.nabla),
            h=map_to_entries(s.h),
        )
    return data
