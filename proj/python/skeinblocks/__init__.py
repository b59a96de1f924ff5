"""Exact conformal-block dimensions, Dehn-twist orders and Hermitian-form
signatures for skein TQFTs at level p."""

from ._core import (
    Graph,
    Level,
    SkeinError,
    admissible_triple,
    caterpillar,
    chain,
    check_factorization,
    classify_edge,
    curve_types,
    delta,
    delta_one_handle,
    delta_one_handle_oracle,
    delta_oracle,
    dim_blocks,
    dim_genus1_pair,
    dumbbell,
    effective_colors,
    enumerate_colorings,
    genus0_nonzero,
    is_indefinite_some_embedding,
    necklace2,
    order_report,
    parse_graph,
    signature,
    standard_level_vector,
    tetrahedron,
    theta,
    twist_exponent,
    twist_projective_order,
    verify,
)

__version__ = "0.1.0"
