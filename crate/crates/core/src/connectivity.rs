//! Strong articulation points, strong bridges and the 2-vertex / 2-edge
//! connectivity tests.

use serde::Serialize;

use crate::dominators::{edge_dominator_ids, DominatorTree};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, scc_labels, DiGraph, Edge};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub saps: Vec<usize>,
    pub bridges: Vec<Edge>,
    pub t_sap: usize,
    pub t_sb: usize,
    pub is2v: bool,
    pub is2e: bool,
}

fn require_strong(g: &DiGraph) -> Result<()> {
    if is_strongly_connected(g) {
        Ok(())
    } else {
        Err(Error::NotStronglyConnected)
    }
}

/// SAPs of a graph already known to be strongly connected.
pub(crate) fn saps_of_strong(g: &DiGraph) -> Vec<usize> {
    if g.n() <= 2 {
        return Vec::new();
    }
    let mut is_sap = vec![false; g.n()];
    for v in DominatorTree::compute(g, 0).nontrivial_dominators() {
        is_sap[v] = true;
    }
    for v in DominatorTree::compute(&g.reverse(), 0).nontrivial_dominators() {
        is_sap[v] = true;
    }
    let (_, components) = scc_labels(g, Some(0), None);
    is_sap[0] = components > 1;
    (0..g.n()).filter(|&v| is_sap[v]).collect()
}

/// Strong-bridge edge ids of a graph already known to be strongly connected.
pub(crate) fn bridge_ids_of_strong(g: &DiGraph) -> Vec<usize> {
    if g.n() <= 1 {
        return Vec::new();
    }
    let reversed = g.reverse();
    let mut ids = edge_dominator_ids(g, 0);
    ids.extend(edge_dominator_ids(&reversed, 0).into_iter().map(|id| {
        let (u, v) = reversed.edge(id);
        g.edge_id(v, u).expect("reversed edge exists")
    }));
    ids.sort_unstable();
    ids.dedup();
    ids
}

/// Vertices whose deletion leaves a graph that is not strongly connected.
pub fn strong_articulation_points(g: &DiGraph) -> Result<Vec<usize>> {
    require_strong(g)?;
    Ok(saps_of_strong(g))
}

/// Edges whose deletion leaves a graph that is not strongly connected.
pub fn strong_bridges(g: &DiGraph) -> Result<Vec<Edge>> {
    require_strong(g)?;
    Ok(bridge_ids_of_strong(g)
        .into_iter()
        .map(|id| g.edge(id))
        .collect())
}

pub fn is_2vertex_connected(g: &DiGraph) -> bool {
    g.n() >= 3 && is_strongly_connected(g) && saps_of_strong(g).is_empty()
}

pub fn is_2edge_connected(g: &DiGraph) -> bool {
    is_strongly_connected(g) && bridge_ids_of_strong(g).is_empty()
}

pub fn report(g: &DiGraph) -> Result<ConnectivityReport> {
    require_strong(g)?;
    let saps = saps_of_strong(g);
    let bridges: Vec<Edge> = bridge_ids_of_strong(g)
        .into_iter()
        .map(|id| g.edge(id))
        .collect();
    Ok(ConnectivityReport {
        t_sap: saps.len(),
        t_sb: bridges.len(),
        is2v: g.n() >= 3 && saps.is_empty(),
        is2e: bridges.is_empty(),
        saps,
        bridges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{bidirected_complete, cycle, fig1, path, two_cycle};

    #[test]
    fn small_examples() {
        assert_eq!(
            strong_articulation_points(&cycle(3)).unwrap(),
            vec![0, 1, 2]
        );
        assert!(strong_articulation_points(&bidirected_complete(3))
            .unwrap()
            .is_empty());
        assert!(strong_articulation_points(&two_cycle()).unwrap().is_empty());
        assert_eq!(
            strong_bridges(&cycle(3)).unwrap(),
            vec![(0, 1), (1, 2), (2, 0)]
        );
        assert!(strong_bridges(&bidirected_complete(3)).unwrap().is_empty());
        assert_eq!(strong_bridges(&two_cycle()).unwrap(), vec![(0, 1), (1, 0)]);
        assert_eq!(
            strong_articulation_points(&path(3)),
            Err(Error::NotStronglyConnected)
        );
        assert_eq!(strong_bridges(&path(3)), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn connectivity_flags() {
        assert!(is_2vertex_connected(&bidirected_complete(3)));
        assert!(!is_2vertex_connected(&cycle(3)));
        assert!(!is_2vertex_connected(&two_cycle()));
        assert!(is_2edge_connected(&bidirected_complete(3)));
        assert!(!is_2edge_connected(&cycle(3)));
        assert!(!is_2edge_connected(&fig1()));
        assert!(!is_2edge_connected(&path(2)));
    }

    #[test]
    fn fig1_frozen() {
        // Oracle values in labels: SAPs {6,7,8}; bridges (6,5),(6,12),(7,6),
        // (9,8),(11,8),(12,7).
        let g = fig1();
        assert_eq!(strong_articulation_points(&g).unwrap(), vec![5, 6, 7]);
        assert_eq!(
            strong_bridges(&g).unwrap(),
            vec![(5, 4), (5, 11), (6, 5), (8, 7), (10, 7), (11, 6)]
        );
    }

    #[test]
    fn root_vertex_is_tested_directly() {
        // Two bidirected triangles sharing vertex 0.
        let mut edges = Vec::new();
        for (a, b) in [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)] {
            edges.extend([(a, b), (b, a)]);
        }
        let g = DiGraph::from_edge_list(5, &edges).unwrap();
        assert_eq!(strong_articulation_points(&g).unwrap(), vec![0]);
    }

    #[test]
    fn report_bundles() {
        let r = report(&cycle(3)).unwrap();
        assert_eq!((r.t_sap, r.t_sb, r.is2v, r.is2e), (3, 3, false, false));
        let r = report(&bidirected_complete(3)).unwrap();
        assert_eq!((r.t_sap, r.t_sb, r.is2v, r.is2e), (0, 0, true, true));
        let r = report(&fig1()).unwrap();
        assert_eq!((r.t_sap, r.t_sb, r.is2v, r.is2e), (3, 6, false, false));
    }
}
