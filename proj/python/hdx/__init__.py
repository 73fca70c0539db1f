"""Spectral expansion toolkit for simplicial complexes."""

from ._hdx import (  # type: ignore[import-not-found]
    Complex,
    NumericalError,
    ValidationError,
    adjacency_matrix,
    betti,
    boundary_matrix,
    certify,
    chromatic_lower_bound,
    chromatic_number_exact,
    complete_skeleton,
    count_galleries,
    descent_check,
    from_j_to_l_check,
    ideal_expander_check,
    is_complete_skeleton,
    laplacian,
    linial_meshulam,
    load_complex,
    mixing_check,
    nontrivial_spectrum,
    overlap_bound,
    overlap_estimate,
    random_disjoint_family,
    save_complex,
    summarize,
    verify_count_lemma,
    verify_identities,
    verify_spectral_invariants,
)

__all__ = [
    "Complex",
    "NumericalError",
    "ValidationError",
    "adjacency_matrix",
    "betti",
    "boundary_matrix",
    "certify",
    "chromatic_lower_bound",
    "chromatic_number_exact",
    "complete_skeleton",
    "count_galleries",
    "descent_check",
    "from_j_to_l_check",
    "ideal_expander_check",
    "is_complete_skeleton",
    "laplacian",
    "linial_meshulam",
    "load_complex",
    "mixing_check",
    "nontrivial_spectrum",
    "overlap_bound",
    "overlap_estimate",
    "random_disjoint_family",
    "save_complex",
    "summarize",
    "verify_count_lemma",
    "verify_identities",
    "verify_spectral_invariants",
]
