//! Small named graphs used by tests, examples and the CLI.

use crate::graph::{DiGraph, Edge};

/// Edges of the twelve-vertex example graph, in vertex labels `1..=12`.
pub const FIG1_LABEL_EDGES: [(u64, u64); 26] = [
    (1, 2),
    (2, 1),
    (1, 3),
    (3, 1),
    (2, 3),
    (3, 2),
    (3, 4),
    (5, 3),
    (5, 7),
    (6, 5),
    (8, 4),
    (9, 8),
    (6, 9),
    (8, 10),
    (10, 6),
    (6, 11),
    (11, 8),
    (6, 12),
    (12, 7),
    (7, 6),
    (4, 6),
    (4, 10),
    (6, 1),
    (10, 11),
    (2, 6),
    (10, 9),
];

/// The twelve-vertex example graph with vertex id `label - 1`.
pub fn fig1() -> DiGraph {
    let edges: Vec<Edge> = FIG1_LABEL_EDGES
        .iter()
        .map(|&(u, v)| (u as usize - 1, v as usize - 1))
        .collect();
    DiGraph::from_edges_unchecked(12, edges)
}

/// Directed cycle `0 -> 1 -> … -> n-1 -> 0`.
pub fn cycle(n: usize) -> DiGraph {
    let edges = if n < 2 {
        Vec::new()
    } else {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    };
    DiGraph::from_edges_unchecked(n, edges)
}

/// Every ordered pair of distinct vertices is an edge.
pub fn bidirected_complete(n: usize) -> DiGraph {
    let edges = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    DiGraph::from_edges_unchecked(n, edges)
}

/// Directed path `0 -> 1 -> … -> n-1`.
pub fn path(n: usize) -> DiGraph {
    DiGraph::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Two vertices joined in both directions.
pub fn two_cycle() -> DiGraph {
    bidirected_complete(2)
}
