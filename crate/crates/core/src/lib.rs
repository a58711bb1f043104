//! Vertex and edge connectivity structure of directed graphs: strong
//! articulation points, strong bridges, 2-directed / 2-strong / 2-edge
//! blocks, and sparse spanning subgraphs that keep them.

pub mod blocks;
pub mod connectivity;
pub mod dominators;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod mscss;
pub mod oracle;

pub use blocks::{
    block_2e_at_vertex, block_graph_2d, blocks_2d_at_vertex, blocks_2d_combined, blocks_2d_direct,
    blocks_2e_bridge, blocks_2e_dom, blocks_2s_dom, blocks_2s_sap, compute_blocks, neighborhood_2d,
    pair_relation, strong_reach_targets, two_reach_targets, unguarded_targets, BlockFamily,
    BlockGraph2D, BlockKind, PairRelation, Strategy,
};
pub use connectivity::{
    is_2edge_connected, is_2vertex_connected, report, strong_articulation_points, strong_bridges,
    ConnectivityReport,
};
pub use dominators::{
    dominator_preserving_pair, dominator_tree, edge_dominator_preserving_pair, edge_dominators,
    edge_split_all, edge_split_out, nontrivial_dominators, unguarded_vertices, DominatorTree,
    EdgeSplitGraph, FlowGraph, TreePair,
};
pub use error::{Error, Result};
pub use generate::random_strongly_connected;
pub use graph::{
    biconnected_blocks, connected_components, is_strongly_connected, scc, DiGraph, Edge, Partition,
    Subgraph, UndirectedGraph,
};
pub use mscss::{
    mscss_same_2d, mscss_same_2e, mscss_same_2s, mscss_same_saps, mscss_with, scss_branching,
    twovcss, verify_solution, BranchingUnion, EdgeBudget, FeasibilityReport, MscssConfig,
    ScssRoutine, SolutionKind, SpanningSolution,
};
