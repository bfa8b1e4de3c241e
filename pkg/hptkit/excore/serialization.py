"""JSON (de)serialization of complexes and maps.

A complex is ``{"degrees": {"0": ["a", ...], ...}, "d": [{"from": .., "to": .., "coeff": "p/q"}]}``;
a map is the list of its nonzero entries in the same ``from``/``to``/``coeff`` form.
"""

import json
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from hptkit.errors import HptkitError, InputError
from hptkit.excore.complexes import ChainComplex
from hptkit.excore.maps import GradedMap
from hptkit.excore.modules import GradedModule
from hptkit.excore.scalars import format_scalar, parse_scalar


class EntryModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    source: str = Field(alias="from")
    target: str = Field(alias="to")
    coeff: Union[str, int] = "1"


class ComplexModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    degrees: dict[int, list[str]]
    d: list[EntryModel] = Field(default_factory=list)


def load_json(path: Union[str, Path]) -> dict:
    """Read a JSON document, turning decoding problems into located ``InputError``s."""
    try:
        with open(path, "r", encoding="utf-8") as file:
            return json.load(file)
    except OSError as e:
        raise InputError(f"cannot read file: {e.strerror}", path=str(path)) from e
    except json.JSONDecodeError as e:
        raise InputError(e.msg, path=str(path), line=e.lineno, column=e.colno) from e


def validation_error(e: ValidationError, path: Optional[str], prefix: str = "") -> InputError:
    first = e.errors()[0]
    location = ".".join(str(part) for part in (prefix, *first["loc"]) if part != "")
    return InputError(f"{location}: {first['msg']}", path=path)


def module_from_dict(degrees: dict[int, list[str]], path: Optional[str] = None) -> GradedModule:
    try:
        module = GradedModule(degrees)
    except HptkitError as e:
        raise InputError(str(e), path=path) from e
    seen = {}
    for degree, label in module.items():
        if label in seen:
            raise InputError(
                f"label {label!r} occurs in degrees {seen[label]} and {degree}", path=path
            )
        seen[label] = degree
    return module


def map_from_entries(
    entries: list,
    source: GradedModule,
    target: GradedModule,
    degree: int,
    path: Optional[str] = None,
    name: str = "map",
) -> GradedMap:
    """Build a map from serialized entries, checking that every entry has the right degree."""
    if not isinstance(entries, list):
        raise InputError(f"{name}: expected a list of entries", path=path)
    try:
        models = [EntryModel.model_validate(entry) for entry in entries]
    except ValidationError as e:
        raise validation_error(e, path, name) from e
    triples = []
    for model in models:
        coeff = parse_scalar(model.coeff, path=path)
        try:
            j = source.degree_of(model.source)
        except HptkitError as e:
            raise InputError(f"{name}: {e}", path=path) from e
        if not target.has(j + degree, model.target):
            raise InputError(
                f"{name}: entry {model.source} -> {model.target} does not have degree {degree}",
                path=path,
            )
        triples.append((model.source, model.target, coeff))
    return GradedMap.from_entries(source, target, degree, triples)


def complex_from_dict(data: dict, path: Optional[str] = None, name: str = "complex") -> ChainComplex:
    try:
        model = ComplexModel.model_validate(data)
    except ValidationError as e:
        raise validation_error(e, path, name) from e
    module = module_from_dict(model.degrees, path)
    d = map_from_entries(
        [entry.model_dump(by_alias=True) for entry in model.d], module, module, -1, path, name
    )
    return ChainComplex(module, d)


def load_complex(path: Union[str, Path]) -> ChainComplex:
    return complex_from_dict(load_json(path), path=str(path))


def map_to_entries(f: GradedMap) -> list[dict]:
    return [
        {"from": column, "to": row, "coeff": format_scalar(value)}
        for _, row, column, value in f.nonzero_entries()
    ]


def module_to_dict(module: GradedModule) -> dict:
    return {str(degree): list(module.labels(degree)) for degree in module.degrees()}


def complex_to_dict(c: ChainComplex) -> dict:
    return {"degrees": module_to_dict(c.module), "d": map_to_entries(c.d)}
