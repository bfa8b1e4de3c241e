"""Contractions of the algebras ``ℋ``, ``𝒫``, ``𝒜`` and ``𝒜ˣ`` onto the ground ring."""

from hptkit.transfer.contractions import (
    GROUND,
    TRANSFERS,
    TransferResult,
    commutator_perturbation,
    contraction_A,
    contraction_A_twisted,
    contraction_H,
    contraction_P,
    length_restricted,
    standard_contraction,
    validity_length,
)
from hptkit.transfer.homotopies import homotopy_A, homotopy_H, homotopy_P
from hptkit.transfer.realization import ALPHABETS, TruncatedRealization, realize

__all__ = [
    "ALPHABETS",
    "GROUND",
    "TRANSFERS",
    "TransferResult",
    "TruncatedRealization",
    "commutator_perturbation",
    "contraction_A",
    "contraction_A_twisted",
    "contraction_H",
    "contraction_P",
    "homotopy_A",
    "homotopy_H",
    "homotopy_P",
    "length_restricted",
    "realize",
    "standard_contraction",
    "validity_length",
]
