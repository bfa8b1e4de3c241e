"""A word-length truncated model of the completed algebra with ``α``, ``β`` and ``φ``."""

from hptkit.hatseries.checks import (
    dalpha_dbeta_check,
    inspection_identities_check,
    involution_check,
    structural_check,
    tower_check,
)
from hptkit.hatseries.element import HatElement
from hptkit.hatseries.involution import phi_map
from hptkit.hatseries.series import alpha_series, beta_series, geometric_inverse

__all__ = [
    "HatElement",
    "alpha_series",
    "beta_series",
    "dalpha_dbeta_check",
    "geometric_inverse",
    "inspection_identities_check",
    "involution_check",
    "phi_map",
    "structural_check",
    "tower_check",
]
