"""Depth and Stanley depth analysis for quotients of square-free monomial ideals."""

from .certificates import (
    ALTERNATING_DROP,
    BASE_DROP,
    LAYER_SANDWICH,
    LOWER_BOUND,
    PRINCIPAL_GAP,
    RANK_SPLIT,
    AnalysisReport,
    Certificate,
    Conclusion,
    analyze,
    check_alternating_drop,
    check_base_drop,
    check_layer_sandwich,
    check_lower_bound,
    check_principal_gap,
    check_rank_split,
)
from .errors import InputError, InternalConsistencyError, TheoremViolationError, ValidationError
from .generate import GeneratorParams, default_params, random_instance
from .instancefile import instance_to_json, parse_instance, serialize_instance
from .linalg import GF2, GF3, RATIONALS, FieldSpec, SignMatrix, compose_is_zero, rank, rank_pair_check
from .monomials import Monomial, MonomialIdeal, QuotientInstance, divides, ideal_contains, minimalize, validate_pair
from .poset import PosetLayers, RhoTable, alpha_table, enumerate_quotient, poset_elements, rho
from .scan import ScanReport, conjecture_scan
from .stanley import Interval, IntervalPartition, partition_exists, stanley_depth, verify_partition
from .strands import (
    HomologyProfile,
    StrandComplex,
    all_strands,
    boundary_sign,
    build_strand,
    exact_depth,
    exact_depth_multi,
    homology_profile,
    strand_homology,
)

__version__ = "0.1.0"

__all__ = [
    "ALTERNATING_DROP",
    "BASE_DROP",
    "LAYER_SANDWICH",
    "LOWER_BOUND",
    "PRINCIPAL_GAP",
    "RANK_SPLIT",
    "AnalysisReport",
    "Certificate",
    "Conclusion",
    "FieldSpec",
    "GF2",
    "GF3",
    "GeneratorParams",
    "HomologyProfile",
    "InputError",
    "InternalConsistencyError",
    "Interval",
    "IntervalPartition",
    "Monomial",
    "MonomialIdeal",
    "PosetLayers",
    "QuotientInstance",
    "RATIONALS",
    "RhoTable",
    "ScanReport",
    "SignMatrix",
    "StrandComplex",
    "TheoremViolationError",
    "ValidationError",
    "all_strands",
    "alpha_table",
    "analyze",
    "boundary_sign",
    "build_strand",
    "check_alternating_drop",
    "check_base_drop",
    "check_layer_sandwich",
    "check_lower_bound",
    "check_principal_gap",
    "check_rank_split",
    "compose_is_zero",
    "conjecture_scan",
    "default_params",
    "divides",
    "enumerate_quotient",
    "exact_depth",
    "exact_depth_multi",
    "homology_profile",
    "ideal_contains",
    "instance_to_json",
    "minimalize",
    "parse_instance",
    "partition_exists",
    "poset_elements",
    "random_instance",
    "rank",
    "rank_pair_check",
    "rho",
    "serialize_instance",
    "stanley_depth",
    "strand_homology",
    "validate_pair",
    "verify_partition",
]
