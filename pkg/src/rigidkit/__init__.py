"""Generic 2D graph rigidity: pebble game, essential connectivity, cover oracle."""
from .connectivity import (
    UNBOUNDED,
    EssentialCut,
    VertexCut,
    essential_connectivity,
    essential_connectivity_bruteforce,
    is_essentially_k_connected,
    is_k_connected,
    min_cut_separating_edges,
    vertex_connectivity,
)
from .covers import Cover, cover_value, min_cover_value_bruteforce, validate_cover, verify_lovasz_yemini
from .graph import Graph, GraphError, from_edge_list, parse_graph6, to_graph6
from .rigidity import (
    PebbleGame,
    assemble_spanning_laman,
    is_globally_rigid,
    is_minimally_rigid,
    is_redundantly_rigid,
    is_rigid,
    rigidity_matrix_rank_probabilistic,
    rigidity_rank,
    rigidity_report,
    spanning_minimally_rigid_subgraph,
)

__version__ = "0.1.0"
