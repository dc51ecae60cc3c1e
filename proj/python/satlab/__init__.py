"""Bit-parallel graph kernels for K_r-saturating edge problems.

The heavy lifting lives in the compiled extension; this package re-exports
its public names.
"""

from ._satlab import (
    Graph,
    Graph6ParseError,
    PackingBudgetError,
    TrianglePacking,
    analyze_triangle,
    audit_lemmas,
    blowup,
    bollobas_f,
    c5_with_chord,
    canonical_form,
    classify_nonedges,
    classify_parts,
    conjecture_value,
    construct_h,
    construct_h_minus,
    construct_h_prime,
    count_saturating,
    decompose,
    enumerate_k4free,
    evaluate_point,
    f_table,
    is_saturating_pair,
    join_pattern,
    max_triangle_packing,
    optimize,
    reduce_preserving_triangle,
    select_best_triangle,
    turan_bipartite,
)

__all__ = [
    "Graph",
    "Graph6ParseError",
    "PackingBudgetError",
    "TrianglePacking",
    "analyze_triangle",
    "audit_lemmas",
    "blowup",
    "bollobas_f",
    "c5_with_chord",
    "canonical_form",
    "classify_nonedges",
    "classify_parts",
    "conjecture_value",
    "construct_h",
    "construct_h_minus",
    "construct_h_prime",
    "count_saturating",
    "decompose",
    "enumerate_k4free",
    "evaluate_point",
    "f_table",
    "is_saturating_pair",
    "join_pattern",
    "max_triangle_packing",
    "optimize",
    "reduce_preserving_triangle",
    "select_best_triangle",
    "turan_bipartite",
]

__version__ = "0.1.0"
