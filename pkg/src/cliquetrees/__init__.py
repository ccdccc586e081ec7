"""Chordal graphs, k-trees and block graphs: clique trees, derived clique graphs and exact counts."""

from .chordal import (
    ChordalStructure,
    CliqueTree,
    EliminationOrdering,
    SeparatorTable,
    analyze,
    build_clique_tree,
    find_chordless_cycle,
    has_induced_subtree_property,
    is_chordal,
    is_peo,
    maximal_cliques,
    mcs_order,
    recognize_chordal,
    separator_table,
)
from .cliquegraphs import (
    WeightedCliqueGraph,
    clique_intersection_graph,
    is_separating_pair,
    k_cliques,
    k_line_graph,
    reduced_clique_graph,
)
from .counting import (
    HoLeeFactorization,
    MultiplicationCounter,
    block_factors,
    count_clique_trees,
    count_clique_trees_general,
    count_clique_trees_ktree,
    count_spanning_trees_block,
    ho_lee_factorization,
    ktree_factors,
)
from .errors import (
    CliqueBlowupError,
    GraphError,
    InvalidOrderingError,
    NotBlockGraphError,
    NotChordalError,
    NotConnectedError,
    OracleCapExceeded,
)
from .generators import (
    GenSpec,
    SplitMix64,
    block_graph_to_k_tree,
    k_path,
    k_star,
    lift_block_graph,
    perturb_k_tree,
    random_block_graph,
    random_chordal_graph,
    random_k_tree,
)
from .graph import Graph, build_graph, complete_graph, cycle_graph, path_graph, star_graph
from .io import format_dot, format_edge_list, parse_edge_list, read_edge_list
from .oracles import bareiss_determinant, enumerate_clique_trees, enumerate_spanning_trees, kirchhoff_count
from .recognition import (
    BlockDecomposition,
    KTreeCertificate,
    Rejection,
    block_tree_encoding,
    is_block_graph,
    is_k_tree,
    max_claw_size,
    recognize_block_graph,
    recognize_k_tree,
    reduced_equals_line_graph,
)
