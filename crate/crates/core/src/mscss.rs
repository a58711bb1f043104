//! Sparse strongly connected spanning subgraphs that keep the strong
//! articulation points, the 2-strong blocks, the 2-edge blocks or the
//! 2-directed blocks of the input.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocks::{compute_blocks, BlockKind, Strategy};
use crate::connectivity::{bridge_ids_of_strong, saps_of_strong};
use crate::dominators::{
    dominator_preserving_pair, edge_dominator_preserving_pair, FlowGraph, TreePair,
};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, scc_labels, DiGraph, Edge, REMOVED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SolutionKind {
    #[serde(rename = "2vcss")]
    TwoVertexConnected,
    #[serde(rename = "saps")]
    Saps,
    #[serde(rename = "2s")]
    TwoStrong,
    #[serde(rename = "2e")]
    TwoEdge,
    #[serde(rename = "2d")]
    TwoDirected,
}

impl SolutionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SolutionKind::TwoVertexConnected => "2vcss",
            SolutionKind::Saps => "saps",
            SolutionKind::TwoStrong => "2s",
            SolutionKind::TwoEdge => "2e",
            SolutionKind::TwoDirected => "2d",
        }
    }
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolutionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "2vcss" => Ok(SolutionKind::TwoVertexConnected),
            "saps" => Ok(SolutionKind::Saps),
            "2s" => Ok(SolutionKind::TwoStrong),
            "2e" => Ok(SolutionKind::TwoEdge),
            "2d" => Ok(SolutionKind::TwoDirected),
            other => Err(format!(
                "unknown structure `{other}` (expected saps, 2s, 2e, 2d or 2vcss)"
            )),
        }
    }
}

/// Analytic edge bound for a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeBudget {
    pub bound: usize,
    /// The bound is `<` rather than `<=`.
    pub strict: bool,
    /// A tree pair needed repair edges beyond `2(n-1)`, so `bound` was
    /// raised to the pair's actual size.
    pub recomputed: bool,
}

impl EdgeBudget {
    pub fn holds(&self, edge_count: usize) -> bool {
        if self.strict {
            edge_count < self.bound
        } else {
            edge_count <= self.bound
        }
    }

    fn plus(self, other: EdgeBudget) -> EdgeBudget {
        EdgeBudget {
            bound: self.bound + other.bound,
            strict: self.strict || other.strict,
            recomputed: self.recomputed || other.recomputed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningSolution {
    pub kind: SolutionKind,
    pub edges: Vec<Edge>,
    pub edge_count: usize,
    pub budget: EdgeBudget,
    pub feasible: bool,
}

impl SpanningSolution {
    fn finish(g: &DiGraph, kind: SolutionKind, mut edges: Vec<Edge>, budget: EdgeBudget) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut s = SpanningSolution {
            kind,
            edge_count: edges.len(),
            edges,
            budget,
            feasible: false,
        };
        s.feasible = verify_solution(g, &s).feasible();
        s
    }

    pub fn within_budget(&self) -> bool {
        self.budget.holds(self.edge_count)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub subset: bool,
    pub strongly_connected: bool,
    pub structure_preserved: bool,
    pub edge_count: usize,
    pub input_edge_count: usize,
    pub within_budget: bool,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.subset && self.strongly_connected && self.structure_preserved
    }
}

/// A strongly connected spanning subgraph routine.
pub trait ScssRoutine {
    fn solve(&self, g: &DiGraph) -> Vec<Edge>;
    /// Worst-case edge count on a strongly connected graph with `n` vertices.
    fn max_edges(&self, n: usize) -> usize;
}

/// Out-branching plus in-branching at vertex 0.
#[derive(Clone, Copy, Debug, Default)]
pub struct BranchingUnion;

impl ScssRoutine for BranchingUnion {
    fn solve(&self, g: &DiGraph) -> Vec<Edge> {
        branching_union(g, 0)
    }

    fn max_edges(&self, n: usize) -> usize {
        2 * n.saturating_sub(1)
    }
}

#[derive(Clone, Copy)]
pub struct MscssConfig<'a> {
    pub scss: &'a dyn ScssRoutine,
    /// Skip SCCs with no vertex in any 2-strong block when patching.
    pub skip_blockless: bool,
}

impl Default for MscssConfig<'_> {
    fn default() -> Self {
        MscssConfig {
            scss: &BranchingUnion,
            skip_blockless: false,
        }
    }
}

fn require_strong(g: &DiGraph) -> Result<()> {
    if is_strongly_connected(g) {
        Ok(())
    } else {
        Err(Error::NotStronglyConnected)
    }
}

fn bfs_tree_edges(g: &DiGraph, root: usize) -> Vec<Edge> {
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut edges = Vec::with_capacity(g.n().saturating_sub(1));
    while let Some(u) = queue.pop_front() {
        for w in g.successors(u) {
            if !seen[w] {
                seen[w] = true;
                edges.push((u, w));
                queue.push_back(w);
            }
        }
    }
    edges
}

fn branching_union(g: &DiGraph, root: usize) -> Vec<Edge> {
    let mut edges = bfs_tree_edges(g, root);
    edges.extend(
        bfs_tree_edges(&g.reverse(), root)
            .into_iter()
            .map(|(a, b)| (b, a)),
    );
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Union of a BFS out-tree and a BFS in-tree rooted at `root`.
pub fn scss_branching(g: &DiGraph, root: usize) -> Result<Vec<Edge>> {
    if root >= g.n() {
        return Err(Error::UnknownVertex {
            vertex: root,
            n: g.n(),
        });
    }
    require_strong(g)?;
    Ok(branching_union(g, root))
}

/// Tree pairs on `g` at `v` and on the reverse graph at `v`, mapped back to
/// edges of `g`, with the budget they were allowed.
fn two_pairs(
    g: &DiGraph,
    v: usize,
    pair: fn(&FlowGraph<'_>) -> TreePair,
) -> (Vec<Edge>, EdgeBudget) {
    let n = g.n();
    let reversed = g.reverse();
    let forward = pair(&FlowGraph::new(g, v).expect("strongly connected"));
    let backward = pair(&FlowGraph::new(&reversed, v).expect("strongly connected"));
    let per_pair = 2 * n.saturating_sub(1);
    let (a, b) = (forward.union_len(), backward.union_len());
    let mut edges = forward.union();
    edges.extend(backward.union().into_iter().map(|(x, y)| (y, x)));
    let budget = EdgeBudget {
        bound: a.max(per_pair) + b.max(per_pair),
        strict: false,
        recomputed: a > per_pair || b > per_pair,
    };
    (edges, budget)
}

/// SCSS of `g` without vertex `v`, in ids of `g`.
fn scss_without(g: &DiGraph, v: usize, scss: &dyn ScssRoutine) -> Vec<Edge> {
    let rest = g.delete_vertices(&[v]);
    scss.solve(&rest.graph)
        .into_iter()
        .map(|e| rest.edge_to_parent(e))
        .collect()
}

fn twovcss_edges(g: &DiGraph, scss: &dyn ScssRoutine) -> (Vec<Edge>, EdgeBudget) {
    let (mut edges, budget) = two_pairs(g, 0, dominator_preserving_pair);
    edges.extend(scss_without(g, 0, scss));
    let budget = budget.plus(EdgeBudget {
        bound: scss.max_edges(g.n() - 1),
        strict: false,
        recomputed: false,
    });
    (edges, budget)
}

/// 2-vertex-connected spanning subgraph from two tree pairs at vertex 0 and
/// an SCSS of the graph without vertex 0.
pub fn twovcss(g: &DiGraph) -> Result<SpanningSolution> {
    twovcss_with(g, &MscssConfig::default())
}

pub fn twovcss_with(g: &DiGraph, config: &MscssConfig<'_>) -> Result<SpanningSolution> {
    require_strong(g)?;
    if g.n() < 3 || !saps_of_strong(g).is_empty() {
        return Err(Error::NotTwoVertexConnected);
    }
    let (edges, budget) = twovcss_edges(g, config.scss);
    Ok(SpanningSolution::finish(
        g,
        SolutionKind::TwoVertexConnected,
        edges,
        budget,
    ))
}

/// The SAP-preserving edge set together with its budget and the SAPs of `g`.
fn saps_core(g: &DiGraph, scss: &dyn ScssRoutine) -> (Vec<Edge>, EdgeBudget, Vec<usize>) {
    let n = g.n();
    let saps = saps_of_strong(g);
    if n <= 1 {
        return (
            Vec::new(),
            EdgeBudget {
                bound: 0,
                strict: false,
                recomputed: false,
            },
            saps,
        );
    }
    if n >= 3 && saps.is_empty() {
        let (edges, budget) = twovcss_edges(g, scss);
        return (edges, budget, saps);
    }
    if saps.len() == n {
        let budget = EdgeBudget {
            bound: scss.max_edges(n),
            strict: false,
            recomputed: false,
        };
        return (scss.solve(g), budget, saps);
    }
    let v = (0..n)
        .find(|v| saps.binary_search(v).is_err())
        .expect("some non-SAP");
    let (mut edges, budget) = two_pairs(g, v, dominator_preserving_pair);
    edges.extend(scss_without(g, v, scss));
    let budget = budget.plus(EdgeBudget {
        bound: scss.max_edges(n - 1),
        strict: false,
        recomputed: false,
    });
    (edges, budget, saps)
}

pub fn mscss_same_saps(g: &DiGraph) -> Result<SpanningSolution> {
    mscss_with(g, SolutionKind::Saps, &MscssConfig::default())
}

pub fn mscss_same_2s(g: &DiGraph) -> Result<SpanningSolution> {
    mscss_with(g, SolutionKind::TwoStrong, &MscssConfig::default())
}

pub fn mscss_same_2e(g: &DiGraph) -> Result<SpanningSolution> {
    mscss_with(g, SolutionKind::TwoEdge, &MscssConfig::default())
}

pub fn mscss_same_2d(g: &DiGraph) -> Result<SpanningSolution> {
    mscss_with(g, SolutionKind::TwoDirected, &MscssConfig::default())
}

/// Whether the vertices of `cell` induce a strongly connected subgraph of
/// the graph on `n` vertices with edge set `edges`.
fn induces_strong(n: usize, edges: &[Edge], cell: &[usize]) -> bool {
    let mut inside = vec![false; n];
    for &v in cell {
        inside[v] = true;
    }
    let local: Vec<Edge> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| inside[a] && inside[b])
        .collect();
    let sub = DiGraph::from_edges_unchecked(n, local)
        .induced_subgraph(cell)
        .graph;
    sub.n() <= 1 || is_strongly_connected(&sub)
}

/// For each SCC `C` of `g` minus the masked vertex or edge that `edges`
/// does not keep strongly connected, adds an SCSS of `g[C]`.
fn patch_components(
    g: &DiGraph,
    edges: &mut Vec<Edge>,
    skip_vertex: Option<usize>,
    skip_edge: Option<usize>,
    scss: &dyn ScssRoutine,
    wanted: impl Fn(&[usize]) -> bool,
) {
    let (labels, count) = scc_labels(g, skip_vertex, skip_edge);
    let mut cells = vec![Vec::new(); count];
    for (v, &c) in labels.iter().enumerate() {
        if c != REMOVED {
            cells[c].push(v);
        }
    }
    cells.sort();
    for cell in &cells {
        if cell.len() < 2 || !wanted(cell) {
            continue;
        }
        if !induces_strong(g.n(), edges, cell) {
            let sub = g.induced_subgraph(cell);
            edges.extend(
                scss.solve(&sub.graph)
                    .into_iter()
                    .map(|e| sub.edge_to_parent(e)),
            );
        }
    }
}

fn two_strong_edges(g: &DiGraph, config: &MscssConfig<'_>) -> (Vec<Edge>, EdgeBudget) {
    let n = g.n();
    let (mut edges, budget, saps) = saps_core(g, config.scss);
    let in_block = if config.skip_blockless {
        let mut mark = vec![false; n];
        for b in compute_blocks(g, BlockKind::TwoStrong, Strategy::Auto).blocks() {
            for &v in b {
                mark[v] = true;
            }
        }
        mark
    } else {
        vec![true; n]
    };
    for &s in &saps {
        patch_components(g, &mut edges, Some(s), None, config.scss, |cell| {
            cell.iter().any(|&v| in_block[v])
        });
    }
    let patches = EdgeBudget {
        bound: 2 * saps.len() * n,
        strict: false,
        recomputed: false,
    };
    (edges, budget.plus(patches))
}

fn two_edge_edges(g: &DiGraph, config: &MscssConfig<'_>) -> (Vec<Edge>, EdgeBudget) {
    let n = g.n();
    if n <= 1 {
        return (
            Vec::new(),
            EdgeBudget {
                bound: 1,
                strict: true,
                recomputed: false,
            },
        );
    }
    let (mut edges, pairs) = two_pairs(g, 0, edge_dominator_preserving_pair);
    let bridges = bridge_ids_of_strong(g);
    for &e in &bridges {
        patch_components(g, &mut edges, None, Some(e), config.scss, |_| true);
    }
    // 4(n-1) < 4n; a repaired pair raises the base to its actual size.
    let base = if pairs.recomputed {
        pairs.bound + 1
    } else {
        4 * n
    };
    let budget = EdgeBudget {
        bound: base + 2 * bridges.len() * n,
        strict: true,
        recomputed: pairs.recomputed,
    };
    (edges, budget)
}

/// Builds the spanning subgraph that preserves the structure named by
/// `kind`.
pub fn mscss_with(
    g: &DiGraph,
    kind: SolutionKind,
    config: &MscssConfig<'_>,
) -> Result<SpanningSolution> {
    require_strong(g)?;
    let (edges, budget) = match kind {
        SolutionKind::TwoVertexConnected => return twovcss_with(g, config),
        SolutionKind::Saps => {
            let (edges, budget, _) = saps_core(g, config.scss);
            (edges, budget)
        }
        SolutionKind::TwoStrong => two_strong_edges(g, config),
        SolutionKind::TwoEdge => two_edge_edges(g, config),
        SolutionKind::TwoDirected => {
            let (mut edges, a) = two_strong_edges(g, config);
            let (more, b) = two_edge_edges(g, config);
            edges.extend(more);
            (edges, a.plus(b))
        }
    };
    Ok(SpanningSolution::finish(g, kind, edges, budget))
}

fn same_blocks(g: &DiGraph, h: &DiGraph, kind: BlockKind) -> bool {
    compute_blocks(g, kind, Strategy::Auto) == compute_blocks(h, kind, Strategy::Auto)
}

/// Recomputes the preserved structure on the solution's edge set and
/// compares it with the input's.
pub fn verify_solution(g: &DiGraph, s: &SpanningSolution) -> FeasibilityReport {
    let subset = s
        .edges
        .iter()
        .all(|&(a, b)| a < g.n() && b < g.n() && g.has_edge(a, b));
    let kept = s
        .edges
        .iter()
        .copied()
        .filter(|&(a, b)| a != b && a < g.n() && b < g.n())
        .collect();
    let h = DiGraph::from_edges_unchecked(g.n(), kept);
    let strongly_connected = is_strongly_connected(&h);
    let structure_preserved = strongly_connected
        && match s.kind {
            SolutionKind::TwoVertexConnected => h.n() >= 3 && saps_of_strong(&h).is_empty(),
            SolutionKind::Saps => {
                is_strongly_connected(g) && saps_of_strong(g) == saps_of_strong(&h)
            }
            SolutionKind::TwoStrong => same_blocks(g, &h, BlockKind::TwoStrong),
            SolutionKind::TwoEdge => same_blocks(g, &h, BlockKind::TwoEdge),
            SolutionKind::TwoDirected => same_blocks(g, &h, BlockKind::TwoDirected),
        };
    FeasibilityReport {
        subset,
        strongly_connected,
        structure_preserved,
        edge_count: s.edges.len(),
        input_edge_count: g.m(),
        within_budget: s.budget.holds(s.edges.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{bidirected_complete, cycle, fig1, path};

    fn bidirected(n: usize, pairs: &[(usize, usize)]) -> DiGraph {
        let edges: Vec<Edge> = pairs.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        DiGraph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn kind_parsing() {
        for k in ["2vcss", "saps", "2s", "2e", "2d"] {
            assert_eq!(k.parse::<SolutionKind>().unwrap().as_str(), k);
        }
        assert!("2x".parse::<SolutionKind>().is_err());
    }

    #[test]
    fn branching_examples() {
        assert_eq!(scss_branching(&cycle(3), 0).unwrap(), cycle(3).edges());
        let k3 = bidirected_complete(3);
        let e = scss_branching(&k3, 0).unwrap();
        assert!(e.len() <= 4);
        assert!(is_strongly_connected(&k3.spanning_subgraph(&e)));
        let g = fig1();
        let e = scss_branching(&g, 0).unwrap();
        assert!(e.len() <= 22);
        assert!(is_strongly_connected(&g.spanning_subgraph(&e)));
        assert_eq!(
            scss_branching(&path(3), 0),
            Err(Error::NotStronglyConnected)
        );
    }

    #[test]
    fn twovcss_examples() {
        let k3 = bidirected_complete(3);
        let s = twovcss(&k3).unwrap();
        assert!(s.feasible && s.edge_count <= 6 && s.within_budget());
        let square = bidirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let s = twovcss(&square).unwrap();
        assert!(s.feasible && s.edge_count <= 16);
        assert_eq!(twovcss(&cycle(4)), Err(Error::NotTwoVertexConnected));
        assert_eq!(twovcss(&path(3)), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn saps_examples() {
        let s = mscss_same_saps(&cycle(3)).unwrap();
        assert_eq!(s.edges, cycle(3).edges());
        assert!(s.feasible);
        let s = mscss_same_saps(&bidirected_complete(3)).unwrap();
        assert!(s.feasible);
        let s = mscss_same_saps(&fig1()).unwrap();
        assert!(s.feasible);
        assert_eq!(s.budget.bound, 64);
        assert!(s.within_budget());
        let s = mscss_same_saps(&bidirected_complete(2)).unwrap();
        assert_eq!(s.edge_count, 2);
        assert!(s.feasible);
    }

    #[test]
    fn block_preserving_examples() {
        let g = fig1();
        for kind in [
            SolutionKind::TwoStrong,
            SolutionKind::TwoEdge,
            SolutionKind::TwoDirected,
        ] {
            let s = mscss_with(&g, kind, &MscssConfig::default()).unwrap();
            assert!(s.feasible, "{kind}");
            assert!(s.within_budget(), "{kind}");
            assert!(s.edge_count >= g.n());
        }
        let s = mscss_same_2s(&g).unwrap();
        let kept = g.spanning_subgraph(&s.edges);
        let strong = compute_blocks(&kept, BlockKind::TwoStrong, Strategy::Auto);
        assert_eq!(strong.len(), 6);
        assert_eq!(strong, compute_blocks(&g, BlockKind::TwoStrong, Strategy::Auto));
        let s = mscss_same_2e(&cycle(3)).unwrap();
        assert_eq!((s.edge_count, s.budget.bound), (3, 30));
        let s = mscss_same_2e(&bidirected_complete(3)).unwrap();
        assert!(s.feasible && s.edge_count < 12);
        assert_eq!(mscss_same_2d(&cycle(3)).unwrap().edge_count, 3);
        assert!(mscss_same_2d(&bidirected_complete(3)).unwrap().feasible);
    }

    #[test]
    fn skip_rule_keeps_feasibility() {
        let g = fig1();
        let config = MscssConfig {
            skip_blockless: true,
            ..MscssConfig::default()
        };
        let s = mscss_with(&g, SolutionKind::TwoStrong, &config).unwrap();
        assert!(s.feasible);
        assert!(s.edge_count <= mscss_same_2s(&g).unwrap().edge_count);
    }

    #[test]
    fn verification_flags() {
        let c3 = cycle(3);
        let broken = SpanningSolution {
            kind: SolutionKind::Saps,
            edges: vec![(0, 1), (1, 2)],
            edge_count: 2,
            budget: EdgeBudget {
                bound: 10,
                strict: false,
                recomputed: false,
            },
            feasible: false,
        };
        let r = verify_solution(&c3, &broken);
        assert!(r.subset && !r.strongly_connected && !r.feasible());
        let k3 = bidirected_complete(3);
        let full = SpanningSolution {
            kind: SolutionKind::TwoEdge,
            edges: k3.edges().to_vec(),
            edge_count: 6,
            budget: EdgeBudget {
                bound: 12,
                strict: true,
                recomputed: false,
            },
            feasible: false,
        };
        assert!(verify_solution(&k3, &full).feasible());
        let foreign = SpanningSolution {
            edges: vec![(0, 2), (2, 0), (0, 1), (1, 0)],
            ..broken
        };
        assert!(!verify_solution(&c3, &foreign).subset);
    }

    #[test]
    fn rejects_non_strong_input() {
        assert_eq!(mscss_same_saps(&path(3)), Err(Error::NotStronglyConnected));
        assert_eq!(mscss_same_2d(&path(3)), Err(Error::NotStronglyConnected));
    }
}
