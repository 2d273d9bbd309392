"""Exact symmetric-function combinatorics: Littlewood-Richardson
coefficients, Schur plethysm, and growth sequences of plethysm coefficients
with empirical stability detection. Everything is exact integer or rational
arithmetic; nothing here uses floating point.
"""

__version__ = "0.1.0"

from .partitions import (
    Partition,
    SkewShape,
    add,
    conjugate,
    contains,
    dominates,
    format_partition,
    format_skew,
    grow_arm_legs,
    grow_line,
    grow_skew_arm_legs,
    grow_skew_line,
    parse_partition,
    parse_skew,
    partitions_of,
    remove_first_column,
    union_sort,
)
from .lr import (
    LRFilling,
    is_lattice_word,
    lr_coefficient,
    lr_fillings,
    skew_schur_expansion,
)
from .plethysm import (
    ExactnessError,
    character_value,
    install_coefficient_store,
    involution_map,
    plethysm_coefficient,
    plethysm_oracle,
    plethysm_schur,
    powersum_plethysm,
    powersum_to_schur,
    schur_to_powersum,
    skew_plethysm_coefficient,
)
from .stability import (
    GrowthIdentityReport,
    ScanBounds,
    ScanCell,
    ScanReport,
    SequenceReport,
    SequenceSpec,
    VerificationError,
    coefficient_sequence,
    detect_stabilization,
    recurrence_coefficient,
    scan,
    verify_growth_identity,
)

__all__ = [
    "__version__",
    "Partition",
    "SkewShape",
    "add",
    "conjugate",
    "contains",
    "dominates",
    "format_partition",
    "format_skew",
    "grow_arm_legs",
    "grow_line",
    "grow_skew_arm_legs",
    "grow_skew_line",
    "parse_partition",
    "parse_skew",
    "partitions_of",
    "remove_first_column",
    "union_sort",
    "LRFilling",
    "is_lattice_word",
    "lr_coefficient",
    "lr_fillings",
    "skew_schur_expansion",
    "ExactnessError",
    "character_value",
    "install_coefficient_store",
    "involution_map",
    "plethysm_coefficient",
    "plethysm_oracle",
    "plethysm_schur",
    "powersum_plethysm",
    "powersum_to_schur",
    "schur_to_powersum",
    "skew_plethysm_coefficient",
    "GrowthIdentityReport",
    "ScanBounds",
    "ScanCell",
    "ScanReport",
    "SequenceReport",
    "SequenceSpec",
    "VerificationError",
    "coefficient_sequence",
    "detect_stabilization",
    "recurrence_coefficient",
    "scan",
    "verify_growth_identity",
]
