"""Exact combinatorics of the squashed order, compressions, and monoid images.

Families of d-sets are plain lists of sorted integer lists; complexes are
dicts mapping the face cardinality d to such lists. Everything is computed
exactly over 64-bit integers with explicit overflow errors.
"""

from ._inckk import (
    apply_pi,
    binomial_rep,
    borel_ideal,
    borel_leq,
    chain_feasible,
    check_chain,
    comb_shift,
    complex_f_vector,
    compress,
    compress_complex,
    compressed_family,
    construct_chain,
    enum_families,
    equality_cases,
    family_cmp,
    fixpoint,
    inc_complex,
    inc_image,
    inc_image_set,
    inc_iterate,
    inc_num,
    initial_segment,
    is_compressed,
    is_left_compressed,
    is_right_compressed,
    is_shifted,
    kk_feasible,
    left_compress,
    non_faces,
    rank,
    right_compress,
    search_shift_noninclusion,
    shadow,
    shadow_num,
    shift_by,
    slice_first,
    slice_last,
    squashed_cmp,
    stabilization_report,
    unrank,
    validate_complex,
    verify_identities,
    verify_min_theorem,
    verify_segment_lemmas,
)

__all__ = [
    "apply_pi",
    "binomial_rep",
    "borel_ideal",
    "borel_leq",
    "chain_feasible",
    "check_chain",
    "comb_shift",
    "complex_f_vector",
    "compress",
    "compress_complex",
    "compressed_family",
    "construct_chain",
    "enum_families",
    "equality_cases",
    "family_cmp",
    "fixpoint",
    "inc_complex",
    "inc_image",
    "inc_image_set",
    "inc_iterate",
    "inc_num",
    "initial_segment",
    "is_compressed",
    "is_left_compressed",
    "is_right_compressed",
    "is_shifted",
    "kk_feasible",
    "left_compress",
    "non_faces",
    "rank",
    "right_compress",
    "search_shift_noninclusion",
    "shadow",
    "shadow_num",
    "shift_by",
    "slice_first",
    "slice_last",
    "squashed_cmp",
    "stabilization_report",
    "unrank",
    "validate_complex",
    "verify_identities",
    "verify_min_theorem",
    "verify_segment_lemmas",
]
