"""Finite-ring comaximal graph toolkit.

Builds finite unital rings (residue rings, finite fields, matrix rings,
products, table rings), their comaximal graphs, and the ideal-theoretic and
graph-theoretic machinery needed to verify the classical structure theorems
about the graph of non-units outside the Jacobson radical.
"""

from ._core import (
    FalsificationError,
    Graph,
    InvalidSpecError,
    LeftIdeal,
    PreconditionError,
    Ring,
    SizeLimitError,
    avoidance_pick,
    blowup_check,
    build_graph,
    central_idempotents,
    chromatic_number,
    default_catalog,
    gf,
    ideal_closure,
    ideal_sum,
    is_complete_multipartite,
    is_n_partite,
    jacobson_radical,
    matrix_ring,
    max_clique,
    maximal_left_ideals,
    principal_ideal,
    product,
    quotient_by,
    remark6_maximal_ideals,
    ring,
    ring_isomorphic,
    run_catalog,
    semisimple_decompose,
    set_size_cap,
    size_cap,
    t2,
    t2_table_json,
    table_ring,
    theorem2_clique,
    universal_vertices,
    wedderburn_report,
    zmod,
)

__all__ = [
    "FalsificationError",
    "Graph",
    "InvalidSpecError",
    "LeftIdeal",
    "PreconditionError",
    "Ring",
    "SizeLimitError",
    "avoidance_pick",
    "blowup_check",
    "build_graph",
    "central_idempotents",
    "chromatic_number",
    "default_catalog",
    "gf",
    "ideal_closure",
    "ideal_sum",
    "is_complete_multipartite",
    "is_n_partite",
    "jacobson_radical",
    "matrix_ring",
    "max_clique",
    "maximal_left_ideals",
    "principal_ideal",
    "product",
    "quotient_by",
    "remark6_maximal_ideals",
    "ring",
    "ring_isomorphic",
    "run_catalog",
    "semisimple_decompose",
    "set_size_cap",
    "size_cap",
    "t2",
    "t2_table_json",
    "table_ring",
    "theorem2_clique",
    "universal_vertices",
    "wedderburn_report",
    "zmod",
]

__version__ = "0.1.0"
