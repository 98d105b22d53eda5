"""Exact-arithmetic categories over balanced integer circuits.

Validate a circuit, build the algebra-side directed category and its
mirror, verify their equivalence, and mutate the associated exceptional
collections at the level of Euler pairings.
"""

from .amodel1d import (
    Hom1dElement,
    IntersectionPoint,
    LiftedSegment,
    compose_1d,
    geometric_oracle,
    hom_basis_1d,
    intersection_count,
    intersection_indices,
    kappa_1d,
    triangle_product,
)
from .amodelrec import (
    ACategory,
    AMorphism,
    ShiftPair,
    build_acategory,
    chi,
    chi_inv,
    compose_rewriting,
    compose_transport,
    hom_decomposition,
    kappa,
    m_split,
    sigma_shifts,
    verify_iso,
)
from .balgebra import (
    Arrow,
    BCategory,
    Bigrading,
    SignedMonomial,
    build_bcategory,
    grading,
    hom_basis,
    monomials_of_weight,
    multiply,
    quiver,
)
from .circuit import (
    CobordismKind,
    Circuit,
    classify,
    decompose,
    negate,
    parse_circuit,
    signature,
    validate_circuit,
    volume,
)
from .errors import CircuitCatError
from .mutation import (
    DegreePoly,
    GramMatrix,
    check_koszul_duality,
    gram_of_collection,
    half_twist,
    mutate_left,
    mutate_right,
)

__version__ = "0.1.0"

__all__ = [
    "ACategory",
    "AMorphism",
    "Arrow",
    "BCategory",
    "Bigrading",
    "Circuit",
    "CircuitCatError",
    "CobordismKind",
    "DegreePoly",
    "GramMatrix",
    "Hom1dElement",
    "IntersectionPoint",
    "LiftedSegment",
    "ShiftPair",
    "SignedMonomial",
    "build_acategory",
    "build_bcategory",
    "check_koszul_duality",
    "chi",
    "chi_inv",
    "classify",
    "compose_1d",
    "compose_rewriting",
    "compose_transport",
    "decompose",
    "geometric_oracle",
    "grading",
    "gram_of_collection",
    "half_twist",
    "hom_basis",
    "hom_basis_1d",
    "hom_decomposition",
    "intersection_count",
    "intersection_indices",
    "kappa",
    "kappa_1d",
    "m_split",
    "monomials_of_weight",
    "multiply",
    "mutate_left",
    "mutate_right",
    "negate",
    "parse_circuit",
    "quiver",
    "sigma_shifts",
    "signature",
    "triangle_product",
    "validate_circuit",
    "verify_iso",
    "volume",
]
