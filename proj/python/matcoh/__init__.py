"""Exact bigraded cohomology of matroids with quasi-representations."""

from ._core import (
    CheckError,
    Graph,
    Matroid,
    QuasiRep,
    Verdict,
    arrangement_compare,
    canonical_from_matrix,
    chromatic_checks,
    chromatic_cohomology,
    chromatic_polynomial,
    cohomology,
    cohomology_dims,
    contract_q,
    delete_q,
    diagonal_u22,
    direct_sum_q,
    free_default,
    graded_euler,
    graphic_matroid,
    graphic_quasirep,
    matrix_matroid,
    non_pappus_matroid,
    pappus_matroid,
    relax_q,
    uniform_matroid,
    verify_coloop,
    verify_identities,
    verify_les_ranks,
    verify_ses,
)

__all__ = [
    "CheckError",
    "Graph",
    "Matroid",
    "QuasiRep",
    "Verdict",
    "arrangement_compare",
    "canonical_from_matrix",
    "chromatic_checks",
    "chromatic_cohomology",
    "chromatic_polynomial",
    "cohomology",
    "cohomology_dims",
    "contract_q",
    "delete_q",
    "diagonal_u22",
    "direct_sum_q",
    "free_default",
    "graded_euler",
    "graphic_matroid",
    "graphic_quasirep",
    "matrix_matroid",
    "non_pappus_matroid",
    "pappus_matroid",
    "relax_q",
    "uniform_matroid",
    "verify_coloop",
    "verify_identities",
    "verify_les_ranks",
    "verify_ses",
]
