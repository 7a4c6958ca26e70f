"""Exact enumeration of homological leaves in PExt^1(F, O) on an elliptic curve.

For a stable bundle F of charge (k, n) the middle terms E of non-split
extensions 0 -> O -> E -> F -> 0 are classified by their Harder-Narasimhan
polygons. This package lists the admissible types, computes the generic
leaf, moduli and stratum dimensions, and orders the types by polygon
containment.
"""

from leafatlas.charges import Charge, dual, euler_pairing, is_stable_charge, slope, tensor
from leafatlas.bundles import (
    BundleType,
    HNType,
    IndecClass,
    det_degree,
    end_dim_generic,
    h0_h1_generic,
    hn_decompose,
    hom_ext_generic,
    parse_type,
)
from leafatlas.polygons import HNPolygon, LatticePoint, Triangle, hn_polygon, polygon_leq, strictly_inside
from leafatlas.atlas import (
    Atlas,
    LeafRecord,
    Verdict,
    ambient_dims,
    build_atlas,
    check_middle_term,
    enumerate_hn_types,
    leaf_dimension,
    refine_to_indec,
    validate_input,
)

__all__ = [
    "Atlas",
    "BundleType",
    "Charge",
    "HNPolygon",
    "HNType",
    "IndecClass",
    "LatticePoint",
    "LeafRecord",
    "Triangle",
    "Verdict",
    "ambient_dims",
    "build_atlas",
    "check_middle_term",
    "det_degree",
    "dual",
    "end_dim_generic",
    "enumerate_hn_types",
    "euler_pairing",
    "h0_h1_generic",
    "hn_decompose",
    "hn_polygon",
    "hom_ext_generic",
    "is_stable_charge",
    "leaf_dimension",
    "parse_type",
    "polygon_leq",
    "refine_to_indec",
    "slope",
    "strictly_inside",
    "tensor",
    "validate_input",
]
