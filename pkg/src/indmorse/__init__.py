"""Acyclic matchings on independence complexes via simplicial-vertex
recursion, with homotopy classification and homology cross-checks."""

from .chordal import is_chordal, maximum_cardinality_search, verify_peo
from .complexes import (
    SimplicialComplex,
    f_vector,
    hasse_edges,
    independence_complex,
    is_maximal,
    partition_check,
)
from .counts import (
    GridCountTable,
    critical_fvector_recursive,
    grid_count_table,
    grid_critical_fvector,
)
from .generators import (
    GridSpec,
    grid_graph,
    grid_spec_from_labels,
    power_graph_cyclic,
    random_chordal,
    standard_graph,
)
from .graph_core import (
    CapabilityError,
    Graph,
    UnsupportedGraphError,
    bits,
    closed_neighborhood,
    connected_components,
    domination_number,
    graph_from_json,
    graph_to_json,
    induced_delete,
    is_clique,
    is_simplicial,
    universal_vertices,
)
from .homology import (
    HomologyProfile,
    betti_gf2,
    boundary_matrix,
    homology_integer,
    optimal_matching_bruteforce,
)
from .homotopy import (
    HomotopyType,
    check_domination_bound,
    classify,
    consistency_with_homology,
)
from .matching import (
    check_acyclic,
    check_matching,
    critical_fvector_of,
    critical_simplices,
    generalized_vpath_reachable,
    verify_acyclic,
    verify_matching,
)
from .morse import (
    ConstructionResult,
    build_auto,
    build_chordal_matching,
    build_grid_matching,
    extend_matching,
    match_complete,
    match_isolated,
)

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "ConstructionResult",
    "Graph",
    "GridCountTable",
    "GridSpec",
    "HomologyProfile",
    "HomotopyType",
    "SimplicialComplex",
    "UnsupportedGraphError",
    "betti_gf2",
    "bits",
    "boundary_matrix",
    "build_auto",
    "build_chordal_matching",
    "build_grid_matching",
    "check_acyclic",
    "check_domination_bound",
    "check_matching",
    "classify",
    "closed_neighborhood",
    "connected_components",
    "consistency_with_homology",
    "critical_fvector_of",
    "critical_fvector_recursive",
    "critical_simplices",
    "domination_number",
    "extend_matching",
    "f_vector",
    "generalized_vpath_reachable",
    "graph_from_json",
    "graph_to_json",
    "grid_count_table",
    "grid_critical_fvector",
    "grid_graph",
    "grid_spec_from_labels",
    "hasse_edges",
    "homology_integer",
    "independence_complex",
    "induced_delete",
    "is_chordal",
    "is_clique",
    "is_maximal",
    "is_simplicial",
    "match_complete",
    "match_isolated",
    "maximum_cardinality_search",
    "optimal_matching_bruteforce",
    "partition_check",
    "power_graph_cyclic",
    "random_chordal",
    "standard_graph",
    "universal_vertices",
    "verify_acyclic",
    "verify_matching",
    "verify_peo",
]
