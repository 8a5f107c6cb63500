"""Dimensions of affine Deligne-Lusztig varieties at generic Newton points.

Computes, inside extended affine Weyl groups, the dimension of the affine
Deligne-Lusztig variety attached to the generic twisted-conjugacy class of
an element, by three independent routes (length reduction, Bruhat-interval
maximum, twisted Demazure power limit), and verifies their agreement by
exhaustive enumeration at desk scale.
"""

from ._backend import compiled_available, default_backend
from .atlas import Atlas, compute_atlas, load_atlas, save_atlas, verify_atlas
from .cartan import (
    CartanDatum,
    CoweightVec,
    RootSystem,
    build_cartan,
    dominance_leq,
    dominant_rep,
    pair,
    parse_config,
)
from .classes import (
    ClassInvariant,
    KottwitzClass,
    NewtonPoint,
    StraightClass,
    class_invariant,
    generic_class,
    generic_class_bruhat,
    is_straight,
    newton_exponent,
    preceq,
    reduce_min,
    straight_classes_upto,
)
from .demazure import IncrementTrace, dem_limit, dem_prod, dem_prod_left, dem_twisted_power
from .dims import DimReport, WaffReduction, dim_generic, reduce_to_waff
from .errors import ConfigError, ResourceCapError, VerificationError
from .harness import run_harness
from .hecke0 import CocenterImage, cocenter_image, t_product
from .weyl import EAWGroup, ExtAffElt, GroupAuto

__version__ = "0.1.0"

__all__ = [
    "Atlas",
    "CartanDatum",
    "ClassInvariant",
    "CocenterImage",
    "ConfigError",
    "CoweightVec",
    "DimReport",
    "EAWGroup",
    "ExtAffElt",
    "GroupAuto",
    "IncrementTrace",
    "KottwitzClass",
    "NewtonPoint",
    "ResourceCapError",
    "RootSystem",
    "StraightClass",
    "VerificationError",
    "WaffReduction",
    "build_cartan",
    "class_invariant",
    "cocenter_image",
    "compiled_available",
    "compute_atlas",
    "default_backend",
    "dem_limit",
    "dem_prod",
    "dem_prod_left",
    "dem_twisted_power",
    "dim_generic",
    "dominance_leq",
    "dominant_rep",
    "generic_class",
    "generic_class_bruhat",
    "is_straight",
    "load_atlas",
    "newton_exponent",
    "pair",
    "parse_config",
    "preceq",
    "reduce_min",
    "reduce_to_waff",
    "run_harness",
    "save_atlas",
    "straight_classes_upto",
    "t_product",
    "verify_atlas",
]
