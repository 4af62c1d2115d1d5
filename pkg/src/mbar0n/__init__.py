"""Exact divisor computations on M_{0,n}: log canonical models, F-nefness, Fulton cone faces."""

from .divisors import (
    FNefVerdict,
    SymmetricDivisor,
    VitalPartition,
    boundary,
    canonical_class,
    contracted_partitions,
    enumerate_vital_partitions,
    intersect_vital,
    is_f_nef,
    parse_rational,
)
from .fulton import (
    f_simplex_vertex,
    facets_of_face,
    minimal_face_of,
    pk_fnef_threshold,
    table_row,
)
from .log_canonical import (
    GitQuotient,
    Hassett,
    a_alpha,
    convex_decompose,
    exceptional_divisor,
    model_for_alpha,
    verify_lemma,
)
from .polyhedra import ConeDescription, LinearForm, double_description

__all__ = [
    "ConeDescription",
    "FNefVerdict",
    "GitQuotient",
    "Hassett",
    "LinearForm",
    "SymmetricDivisor",
    "VitalPartition",
    "a_alpha",
    "boundary",
    "canonical_class",
    "contracted_partitions",
    "convex_decompose",
    "double_description",
    "enumerate_vital_partitions",
    "exceptional_divisor",
    "f_simplex_vertex",
    "facets_of_face",
    "intersect_vital",
    "is_f_nef",
    "minimal_face_of",
    "model_for_alpha",
    "parse_rational",
    "pk_fnef_threshold",
    "table_row",
    "verify_lemma",
]
