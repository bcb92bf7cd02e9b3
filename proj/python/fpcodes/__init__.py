"""Two-level fingerprinting codes: construction and exhaustive verification."""

from ._core import (
    CapacityError,
    Code,
    InfeasibleError,
    TwoLevelCode,
    check_lemma_containment,
    check_property,
    check_property_two_level,
    construct_two_level,
    enumerate_descendants,
    gen_polynomial_fp_code,
    gen_random_code,
    hamming_distance,
    is_descendant,
    min_distance,
    partition_by_first_coordinate,
    profiles_intersect,
    read_code_file,
    read_grouped_code_file,
    write_code_file,
    write_grouped_code_file,
)

__all__ = [
    "CapacityError",
    "Code",
    "InfeasibleError",
    "TwoLevelCode",
    "check_lemma_containment",
    "check_property",
    "check_property_two_level",
    "construct_two_level",
    "enumerate_descendants",
    "gen_polynomial_fp_code",
    "gen_random_code",
    "hamming_distance",
    "is_descendant",
    "min_distance",
    "partition_by_first_coordinate",
    "profiles_intersect",
    "read_code_file",
    "read_grouped_code_file",
    "write_code_file",
    "write_grouped_code_file",
]
