"""Exact graded linear algebra: modules, maps, complexes and their contractions."""

from hptkit.excore.complexes import ChainComplex, invert, neumann_inverse, validate_complex
from hptkit.excore.homology import homology_contraction
from hptkit.excore.image import ImageData, image_subcomplex
from hptkit.excore.linalg import EchelonBasis, Frame, rank, reduce_columns
from hptkit.excore.maps import GradedMap, commutator, compose, power
from hptkit.excore.modules import GradedModule
from hptkit.excore.scalars import format_scalar, parse_scalar

__all__ = [
    "ChainComplex",
    "EchelonBasis",
    "Frame",
    "GradedMap",
    "GradedModule",
    "ImageData",
    "commutator",
    "compose",
    "format_scalar",
    "homology_contraction",
    "image_subcomplex",
    "invert",
    "neumann_inverse",
    "parse_scalar",
    "power",
    "rank",
    "reduce_columns",
    "validate_complex",
]
