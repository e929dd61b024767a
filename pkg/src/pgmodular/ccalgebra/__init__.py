"""Coherent configurations of strongly regular designs and their modular algebras."""

from .algebra import (
    FpAlgebra,
    cc_algebra,
    commutator_quotient_dim,
    corner_algebra,
    fp_algebra_from_sc,
    rank3_algebra,
    special_element_u,
)
from .config import CoherentConfig, StructureConstants, build_cc, rank3_structure_constants, structure_constants
from .quiver import QuiverReport, lift_idempotents, quiver
from .radical import CornerCheck, RadicalReport, corner_radical_identity, radical, radical_bruteforce
from .wedderburn import Component, WedderburnReport, simple_components, wedderburn

__all__ = [
    "CoherentConfig",
    "Component",
    "CornerCheck",
    "FpAlgebra",
    "QuiverReport",
    "RadicalReport",
    "StructureConstants",
    "WedderburnReport",
    "build_cc",
    "cc_algebra",
    "commutator_quotient_dim",
    "corner_algebra",
    "corner_radical_identity",
    "fp_algebra_from_sc",
    "lift_idempotents",
    "quiver",
    "radical",
    "radical_bruteforce",
    "rank3_algebra",
    "rank3_structure_constants",
    "simple_components",
    "special_element_u",
    "structure_constants",
    "wedderburn",
]
