"""Finite duality for meet-semilattices with adjoint operators.

Algebras are meet-semilattices with top over the carrier ``0..n-1``. Their
dual spaces, multirelations, congruences and Vietoris families are built and
checked by brute force, so every correspondence can be verified on small
instances.
"""
from .adjunction import (
    NotAdjoinable,
    NotAnAdjunction,
    Slata,
    enumerate_adjoint_pairs,
    equational_adjoint_check,
    is_adjoint_pair,
    is_slata_morphism,
    left_adjoint_of,
    monotone_maps,
    right_adjoint_of,
)
from .filters import all_filters, beta, generated_filter, irreducible_filters, is_filter
from .order import (
    Check,
    MeetSemilattice,
    SemilatticeError,
    SizeLimitExceeded,
    order_from_meet,
    validate_semilattice,
)
from .relations import MeetRelation, compose_star, dual_specialization, relation_from_hom
from .space import (
    Multirelation,
    Report,
    SSpace,
    dual_algebra,
    dual_space,
    relation_from_map,
    verify_ms_space,
    verify_s_space,
    verify_slata_space,
)
from .tense import ESlata, ESlataSpace, dualize_eslata, validate_eslata, verify_eslata_space
from .vietoris import (
    enumerate_congruences,
    enumerate_vietoris_families,
    congruence_from_family,
    family_from_congruence,
    is_vietoris_family,
    quotient,
)

__all__ = [
    "all_filters",
    "beta",
    "Check",
    "compose_star",
    "congruence_from_family",
    "dual_algebra",
    "dual_space",
    "dual_specialization",
    "dualize_eslata",
    "enumerate_adjoint_pairs",
    "enumerate_congruences",
    "enumerate_vietoris_families",
    "equational_adjoint_check",
    "ESlata",
    "ESlataSpace",
    "family_from_congruence",
    "generated_filter",
    "irreducible_filters",
    "is_adjoint_pair",
    "is_filter",
    "is_slata_morphism",
    "is_vietoris_family",
    "left_adjoint_of",
    "MeetRelation",
    "MeetSemilattice",
    "monotone_maps",
    "Multirelation",
    "NotAdjoinable",
    "NotAnAdjunction",
    "order_from_meet",
    "quotient",
    "relation_from_hom",
    "relation_from_map",
    "Report",
    "right_adjoint_of",
    "SemilatticeError",
    "SizeLimitExceeded",
    "Slata",
    "SSpace",
    "validate_eslata",
    "validate_semilattice",
    "verify_eslata_space",
    "verify_ms_space",
    "verify_s_space",
    "verify_slata_space",
]

__version__ = "0.1.0"
