"""The configuration module for the hptkit command line."""

import os
from typing import Literal, Optional

from pydantic import BaseModel, field_validator

from hptkit.constants import (
    DEFAULT_BOUND,
    DEFAULT_INSTANCES,
    DEFAULT_ORDER,
    DEFAULT_PRODUCT_BOUND,
    DEFAULT_SEED,
    HPTKIT_DEFAULT_ORDER_ENV_VAR,
)
from hptkit.errors import InputError

ALGEBRAS = ("H", "P", "A", "Ax")
VERIFY_TARGETS = (
    "all",
    "structural",
    "involution",
    "inspection",
    "dalpha",
    "freealg",
    "a0",
    "transfer",
    "instances",
)


def default_order() -> int:
    """Truncation order, overridable through ``HPTKIT_DEFAULT_ORDER``."""
    value = os.getenv(HPTKIT_DEFAULT_ORDER_ENV_VAR)
    if value is None:
        return DEFAULT_ORDER
    try:
        return int(value)
    except ValueError as e:
        raise InputError(f"{HPTKIT_DEFAULT_ORDER_ENV_VAR} must be an integer, got {value!r}") from e


class RunConfig(BaseModel):
    """Configuration of a single hptkit invocation."""

    command: str
    input: Optional[str] = None
    perturbation: Optional[str] = None
    target: str = "all"
    order: int = DEFAULT_ORDER
    bound: Optional[int] = None
    cap: Optional[int] = None
    seed: int = DEFAULT_SEED
    instances: int = DEFAULT_INSTANCES
    algebra: Optional[str] = None
    kind: Optional[str] = None
    inverse: Literal["neumann", "exact"] = "neumann"
    emit: Optional[str] = None
    format: Literal["json", "text"] = "text"

    @field_validator("order")
    @classmethod
    def validate_order(cls, order):
        """Truncation orders are positive and even (the completed series advance by two)."""
        if order < 2 or order % 2:
            raise ValueError(f"--order must be a positive even integer, got {order}")
        return order

    @field_validator("cap", "bound")
    @classmethod
    def validate_positive(cls, value, info):
        if value is not None and value < 1:
            raise ValueError(f"--{info.field_name} must be positive, got {value}")
        return value

    @field_validator("instances")
    @classmethod
    def validate_instances(cls, instances):
        if instances < 0:
            raise ValueError(f"--instances must not be negative, got {instances}")
        return instances

    @field_validator("algebra")
    @classmethod
    def validate_algebra(cls, algebra):
        if algebra is not None and algebra not in ALGEBRAS:
            raise ValueError(f"--algebra must be one of {', '.join(ALGEBRAS)}, got {algebra}")
        return algebra

    @field_validator("target")
    @classmethod
    def validate_target(cls, target):
        if target not in VERIFY_TARGETS:
            raise ValueError(f"unknown verification target {target!r}")
        return target

    def transfer_bound(self) -> int:
        """Length bound of a truncated realization, defaulting per algebra."""
        if self.bound is not None:
            return self.bound
        if self.algebra in ("A", "Ax"):
            return DEFAULT_PRODUCT_BOUND
        return DEFAULT_BOUND
