"""Cospectral graph pairs with different connectivity.

Exact constructions of regular graph pairs that share their adjacency
and Laplacian spectra yet differ in vertex or edge connectivity,
together with the exact machinery needed to verify such claims:
integer characteristic polynomials, certified eigenvalue enclosures,
max-flow connectivity with checkable witnesses, and the admissibility
checks for the switching operation that produces the pairs.
"""

from .connectivity import (
    ConnectivityResult,
    PathSystem,
    brute_force_connectivity,
    edge_connectivity,
    max_edge_disjoint_paths,
    max_vertex_disjoint_paths,
    verify_disconnecting_set,
    vertex_connectivity,
)
from .families import (
    ExpectedMetrics,
    FAMILY_TAGS,
    FamilyInstance,
    base_circulant_G,
    edge_pair,
    edge_pair_variant4,
    generate_family,
    line_graph_family,
    paper_witnesses,
    vertex_pair,
)
from .graph import (
    ALL_ONES,
    ALL_ONES_MINUS_CYCLE,
    ALL_ONES_MINUS_IDENTITY,
    BlockSpec,
    ComponentPartition,
    CYCLE,
    Graph,
    Graph6Error,
    IDENTITY,
    ZERO,
    circulant,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    decode_graph6,
    delete_edges,
    delete_vertices,
    disjoint_union,
    empty_graph,
    encode_graph6,
    from_blocks,
    line_graph,
    path_graph,
    two_coloring,
)
from .spectra import (
    IntPolynomial,
    RationalInterval,
    berkowitz_char_poly,
    char_poly_adjacency,
    char_poly_laplacian,
    cospectral,
    laplacian_matrix,
    second_smallest_laplacian_eigenvalue,
    spectrum_symmetric,
    zero_root_multiplicity,
)
from .switching import (
    InvalidPlanError,
    SwitchingPlan,
    ValidationReport,
    Violation,
    switch,
    validate_plan,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_ONES",
    "ALL_ONES_MINUS_CYCLE",
    "ALL_ONES_MINUS_IDENTITY",
    "BlockSpec",
    "ComponentPartition",
    "ConnectivityResult",
    "CYCLE",
    "ExpectedMetrics",
    "FAMILY_TAGS",
    "FamilyInstance",
    "Graph",
    "Graph6Error",
    "IDENTITY",
    "IntPolynomial",
    "InvalidPlanError",
    "PathSystem",
    "RationalInterval",
    "SwitchingPlan",
    "ValidationReport",
    "Violation",
    "ZERO",
    "base_circulant_G",
    "berkowitz_char_poly",
    "brute_force_connectivity",
    "char_poly_adjacency",
    "char_poly_laplacian",
    "circulant",
    "complete_bipartite",
    "complete_graph",
    "components",
    "cospectral",
    "cycle_graph",
    "decode_graph6",
    "delete_edges",
    "delete_vertices",
    "disjoint_union",
    "edge_connectivity",
    "edge_pair",
    "edge_pair_variant4",
    "empty_graph",
    "encode_graph6",
    "from_blocks",
    "generate_family",
    "laplacian_matrix",
    "line_graph",
    "line_graph_family",
    "max_edge_disjoint_paths",
    "max_vertex_disjoint_paths",
    "paper_witnesses",
    "path_graph",
    "second_smallest_laplacian_eigenvalue",
    "spectrum_symmetric",
    "switch",
    "two_coloring",
    "validate_plan",
    "verify_disconnecting_set",
    "vertex_connectivity",
    "vertex_pair",
    "zero_root_multiplicity",
]
