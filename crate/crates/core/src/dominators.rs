//! Dominator trees of flowgraphs, edge dominators through the edge-splitting
//! transform, and sparse spanning-tree pairs that keep a flowgraph's
//! dominators or edge dominators.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge};

const NONE: usize = usize::MAX;

/// A directed graph with a start vertex that reaches every vertex.
#[derive(Clone, Copy, Debug)]
pub struct FlowGraph<'a> {
    graph: &'a DiGraph,
    root: usize,
}

impl<'a> FlowGraph<'a> {
    pub fn new(graph: &'a DiGraph, root: usize) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::UnknownVertex {
                vertex: root,
                n: graph.n(),
            });
        }
        let mut seen = vec![false; graph.n()];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for w in graph.successors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(vertex) = seen.iter().position(|&s| !s) {
            return Err(Error::Unreachable { root, vertex });
        }
        Ok(FlowGraph { graph, root })
    }

    pub fn graph(&self) -> &'a DiGraph {
        self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }
}

/// Immediate-dominator tree of a flowgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatorTree {
    root: usize,
    idom: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    // Entry/exit times of a DFS over the tree, for O(1) ancestor tests.
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl DominatorTree {
    /// Lengauer–Tarjan with path compression. Vertices not reachable from
    /// `root` are left out of the tree.
    pub(crate) fn compute(g: &DiGraph, root: usize) -> Self {
        let n = g.n();
        let mut pre = vec![NONE; n];
        let mut vertex = Vec::with_capacity(n);
        let mut parent = Vec::with_capacity(n);

        // Iterative preorder DFS; `parent` is indexed by preorder number.
        let mut frames: Vec<(usize, std::ops::Range<usize>)> = Vec::new();
        pre[root] = 0;
        vertex.push(root);
        parent.push(NONE);
        frames.push((root, g.out_edge_ids(root)));
        while let Some((v, ids)) = frames.last_mut() {
            match ids.next() {
                Some(id) => {
                    let w = g.edge(id).1;
                    if pre[w] == NONE {
                        pre[w] = vertex.len();
                        parent.push(pre[*v]);
                        vertex.push(w);
                        frames.push((w, g.out_edge_ids(w)));
                    }
                }
                None => {
                    frames.pop();
                }
            }
        }

        let count = vertex.len();
        let mut semi: Vec<usize> = (0..count).collect();
        let mut label: Vec<usize> = (0..count).collect();
        let mut ancestor = vec![NONE; count];
        let mut idom = vec![NONE; count];
        let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); count];
        let mut path = Vec::new();

        for w in (1..count).rev() {
            for p in g.predecessors(vertex[w]) {
                let v = pre[p];
                if v == NONE {
                    continue;
                }
                let u = eval(v, &mut ancestor, &mut label, &semi, &mut path);
                if semi[u] < semi[w] {
                    semi[w] = semi[u];
                }
            }
            bucket[semi[w]].push(w);
            let pw = parent[w];
            ancestor[w] = pw;
            for v in std::mem::take(&mut bucket[pw]) {
                let u = eval(v, &mut ancestor, &mut label, &semi, &mut path);
                idom[v] = if semi[u] < semi[v] { u } else { pw };
            }
        }
        for w in 1..count {
            if idom[w] != semi[w] {
                idom[w] = idom[idom[w]];
            }
        }

        let mut tree_idom = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for w in 1..count {
            let (v, d) = (vertex[w], vertex[idom[w]]);
            tree_idom[v] = Some(d);
            children[d].push(v);
        }
        for list in &mut children {
            list.sort_unstable();
        }
        Self::with_times(root, tree_idom, children)
    }

    fn with_times(root: usize, idom: Vec<Option<usize>>, children: Vec<Vec<usize>>) -> Self {
        let n = idom.len();
        let mut enter = vec![NONE; n];
        let mut exit = vec![NONE; n];
        let mut clock = 0;
        let mut stack = vec![(root, 0usize)];
        enter[root] = clock;
        clock += 1;
        while let Some((v, i)) = stack.last_mut() {
            if let Some(&c) = children[*v].get(*i) {
                *i += 1;
                enter[c] = clock;
                clock += 1;
                stack.push((c, 0));
            } else {
                exit[*v] = clock;
                clock += 1;
                stack.pop();
            }
        }
        DominatorTree {
            root,
            idom,
            children,
            enter,
            exit,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.idom.len()
    }

    /// Immediate dominator of `w`; `None` for the root.
    pub fn idom(&self, w: usize) -> Option<usize> {
        self.idom[w]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn is_reachable(&self, v: usize) -> bool {
        self.enter[v] != NONE
    }

    /// True iff `a` dominates `b` (every vertex dominates itself).
    pub fn dominates(&self, a: usize, b: usize) -> bool {
        self.is_reachable(a)
            && self.is_reachable(b)
            && self.enter[a] <= self.enter[b]
            && self.exit[b] <= self.exit[a]
    }

    /// `dom(w)` listed from `w` up to the root.
    pub fn dominators(&self, w: usize) -> Vec<usize> {
        let mut chain = vec![w];
        let mut cur = w;
        while let Some(d) = self.idom[cur] {
            chain.push(d);
            cur = d;
        }
        chain
    }

    /// Non-root vertices that immediately dominate some vertex.
    pub fn nontrivial_dominators(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| v != self.root && !self.children[v].is_empty())
            .collect()
    }

    /// Vertices in DFS preorder of the tree.
    fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        order
    }
}

fn eval(
    v: usize,
    ancestor: &mut [usize],
    label: &mut [usize],
    semi: &[usize],
    path: &mut Vec<usize>,
) -> usize {
    if ancestor[v] == NONE {
        return v;
    }
    path.clear();
    let mut x = v;
    while ancestor[ancestor[x]] != NONE {
        path.push(x);
        x = ancestor[x];
    }
    while let Some(x) = path.pop() {
        let a = ancestor[x];
        if semi[label[a]] < semi[label[x]] {
            label[x] = label[a];
        }
        ancestor[x] = ancestor[a];
    }
    label[v]
}

pub fn dominator_tree(f: &FlowGraph<'_>) -> DominatorTree {
    DominatorTree::compute(f.graph, f.root)
}

/// `D(v)`: vertices other than the root that dominate some vertex besides
/// themselves.
pub fn nontrivial_dominators(t: &DominatorTree) -> Vec<usize> {
    t.nontrivial_dominators()
}

/// A graph in which selected edges `(x, y)` are replaced by a path
/// `x -> φ(e) -> y` through a fresh auxiliary vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSplitGraph {
    base_n: usize,
    split: DiGraph,
    phi: Vec<Option<usize>>,
    aux_edge: Vec<usize>,
}

impl EdgeSplitGraph {
    fn build(g: &DiGraph, select: impl Fn(usize) -> bool) -> Self {
        let n = g.n();
        let mut phi = vec![None; g.m()];
        let mut aux_edge = Vec::new();
        let mut edges = Vec::with_capacity(g.m() * 2);
        for (id, &(x, y)) in g.edges().iter().enumerate() {
            if select(id) {
                let aux = n + aux_edge.len();
                phi[id] = Some(aux);
                aux_edge.push(id);
                edges.push((x, aux));
                edges.push((aux, y));
            } else {
                edges.push((x, y));
            }
        }
        EdgeSplitGraph {
            base_n: n,
            split: DiGraph::from_edges_unchecked(n + aux_edge.len(), edges),
            phi,
            aux_edge,
        }
    }

    pub fn split(&self) -> &DiGraph {
        &self.split
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    /// Auxiliary vertex standing for base edge `edge_id`, if it was split.
    pub fn phi(&self, edge_id: usize) -> Option<usize> {
        self.phi[edge_id]
    }

    pub fn is_original(&self, v: usize) -> bool {
        v < self.base_n
    }

    /// Base edge id of auxiliary vertex `v`.
    pub fn edge_of_aux(&self, v: usize) -> Option<usize> {
        v.checked_sub(self.base_n)
            .and_then(|i| self.aux_edge.get(i).copied())
    }

    pub fn aux_count(&self) -> usize {
        self.aux_edge.len()
    }
}

/// Splits every edge. Auxiliary ids are `n, n+1, …` in canonical edge order.
pub fn edge_split_all(g: &DiGraph) -> EdgeSplitGraph {
    EdgeSplitGraph::build(g, |_| true)
}

/// Splits only the edges leaving `v`.
pub fn edge_split_out(g: &DiGraph, v: usize) -> EdgeSplitGraph {
    let out = g.out_edge_ids(v);
    EdgeSplitGraph::build(g, |id| out.contains(&id))
}

/// Marks, for a dominator tree of a split graph, which vertices have an
/// auxiliary proper ancestor (that is, an edge dominator in the base graph).
fn guarded_by_aux(split: &EdgeSplitGraph, tree: &DominatorTree) -> Vec<bool> {
    let mut guarded = vec![false; split.split().n()];
    for v in tree.preorder() {
        let flag = guarded[v] || !split.is_original(v);
        for &c in tree.children(v) {
            guarded[c] = flag;
        }
    }
    guarded
}

/// `U(root)` computed on an already split-everything graph.
pub(crate) fn unguarded_in_split(split: &EdgeSplitGraph, root: usize) -> Vec<usize> {
    let tree = DominatorTree::compute(split.split(), root);
    let guarded = guarded_by_aux(split, &tree);
    (0..split.base_n())
        .filter(|&w| w != root && tree.is_reachable(w) && !guarded[w])
        .collect()
}

/// `U(v)`: vertices other than the root that have no edge dominator.
pub fn unguarded_vertices(f: &FlowGraph<'_>) -> Vec<usize> {
    unguarded_in_split(&edge_split_all(f.graph), f.root)
}

/// Ids of edges that are an edge dominator of at least one vertex.
pub(crate) fn edge_dominator_ids(g: &DiGraph, root: usize) -> Vec<usize> {
    let split = edge_split_all(g);
    let tree = DominatorTree::compute(split.split(), root);
    (g.n()..split.split().n())
        .filter(|&a| !tree.children(a).is_empty())
        .filter_map(|a| split.edge_of_aux(a))
        .collect()
}

/// Edges that are edge dominators of some vertex of the flowgraph.
pub fn edge_dominators(f: &FlowGraph<'_>) -> Vec<Edge> {
    edge_dominator_ids(f.graph, f.root)
        .into_iter()
        .map(|id| f.graph.edge(id))
        .collect()
}

/// Two spanning trees of a flowgraph plus any repair edges that were needed
/// to make their union keep the wanted (edge) dominators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TreePair {
    pub first: Vec<Edge>,
    pub second: Vec<Edge>,
    pub extra: Vec<Edge>,
}

impl TreePair {
    /// Sorted, deduplicated union of both trees and the repair edges.
    pub fn union(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self
            .first
            .iter()
            .chain(&self.second)
            .chain(&self.extra)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn union_len(&self) -> usize {
        self.union().len()
    }

    /// Whether the union fits in `2(n-1)` edges.
    pub fn within_budget(&self, n: usize) -> bool {
        self.union_len() <= 2 * n.saturating_sub(1)
    }
}

/// BFS tree from the root; returns the parent edge id of each vertex.
fn bfs_tree(g: &DiGraph, root: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for id in g.out_edge_ids(u) {
            let w = g.edge(id).1;
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(id);
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Shortest-path tree where edges flagged in `costly` weigh 1 and all other
/// edges weigh 0, optionally avoiding one vertex or one edge. Returns the
/// parent edge id of each reached vertex.
fn zero_one_tree(
    g: &DiGraph,
    root: usize,
    costly: &[bool],
    avoid_vertex: Option<usize>,
    avoid_edge: Option<usize>,
) -> Vec<Option<usize>> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![None; g.n()];
    let mut done = vec![false; g.n()];
    dist[root] = 0;
    let mut deque = VecDeque::from([root]);
    while let Some(u) = deque.pop_front() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for id in g.out_edge_ids(u) {
            let w = g.edge(id).1;
            if Some(w) == avoid_vertex || Some(id) == avoid_edge || done[w] {
                continue;
            }
            let cost = usize::from(costly[id]);
            if dist[u] + cost < dist[w] {
                dist[w] = dist[u] + cost;
                parent[w] = Some(id);
                if cost == 0 {
                    deque.push_front(w);
                } else {
                    deque.push_back(w);
                }
            }
        }
    }
    parent
}

/// Edge ids on the tree path from the root to `target`.
fn tree_path(g: &DiGraph, parent: &[Option<usize>], target: usize) -> Vec<usize> {
    let mut ids = Vec::new();
    let mut cur = target;
    while let Some(id) = parent[cur] {
        ids.push(id);
        cur = g.edge(id).0;
    }
    ids
}

/// Depth-first tree from the root; returns the parent edge id of each vertex.
/// Out-edges are tried in reverse order when `backwards` is set.
fn dfs_tree(g: &DiGraph, root: usize, backwards: bool) -> Vec<Option<usize>> {
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut stack = vec![(root, g.out_edge_ids(root))];
    while let Some((_, iter)) = stack.last_mut() {
        let next = if backwards {
            iter.next_back()
        } else {
            iter.next()
        };
        match next {
            Some(id) => {
                let w = g.edge(id).1;
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(id);
                    stack.push((w, g.out_edge_ids(w)));
                }
            }
            None => {
                stack.pop();
            }
        }
    }
    parent
}

/// The second tree is a shortest-path tree that pays for every edge it
/// shares with the first, so the two diverge wherever the graph allows.
fn initial_pair(g: &DiGraph, root: usize, first: Vec<Option<usize>>) -> (Vec<usize>, Vec<usize>) {
    let mut in_first = vec![false; g.m()];
    for id in first.iter().flatten() {
        in_first[*id] = true;
    }
    let second = zero_one_tree(g, root, &in_first, None, None);
    (
        first.into_iter().flatten().collect(),
        second.into_iter().flatten().collect(),
    )
}

#[derive(Clone, Copy)]
enum Preserve {
    Dominators,
    EdgeDominators,
}

/// Grows the union of the two trees until the wanted dominance structure of
/// `g` is reproduced. Each round finds one spurious (edge) dominator and adds
/// the non-union edges of a cheapest root path that bypasses it.
fn repaired_pair(f: &FlowGraph<'_>, preserve: Preserve, first: Vec<Option<usize>>) -> TreePair {
    let g = f.graph;
    let root = f.root;
    let (first, second) = initial_pair(g, root, first);
    let mut in_union = vec![false; g.m()];
    for &id in first.iter().chain(&second) {
        in_union[id] = true;
    }
    let mut extra = Vec::new();

    let wanted_vertices: Vec<bool> = match preserve {
        Preserve::Dominators => {
            let mut mark = vec![false; g.n()];
            for v in DominatorTree::compute(g, root).nontrivial_dominators() {
                mark[v] = true;
            }
            mark
        }
        Preserve::EdgeDominators => Vec::new(),
    };
    let wanted_edges: Vec<bool> = match preserve {
        Preserve::Dominators => Vec::new(),
        Preserve::EdgeDominators => {
            let mut mark = vec![false; g.m()];
            for id in edge_dominator_ids(g, root) {
                mark[id] = true;
            }
            mark
        }
    };

    loop {
        let union_edges: Vec<Edge> = (0..g.m())
            .filter(|&id| in_union[id])
            .map(|id| g.edge(id))
            .collect();
        let h = DiGraph::from_edges_unchecked(g.n(), union_edges);

        // (vertex or edge to bypass in g, vertex it wrongly dominates)
        let spurious = match preserve {
            Preserve::Dominators => {
                let tree = DominatorTree::compute(&h, root);
                tree.nontrivial_dominators()
                    .into_iter()
                    .find(|&u| !wanted_vertices[u])
                    .map(|u| (Some(u), None, tree.children(u)[0]))
            }
            Preserve::EdgeDominators => {
                let split = edge_split_all(&h);
                let tree = DominatorTree::compute(split.split(), root);
                (h.n()..split.split().n())
                    .filter(|&a| !tree.children(a).is_empty())
                    .filter_map(|a| {
                        let (x, y) = h.edge(split.edge_of_aux(a)?);
                        let id = g.edge_id(x, y).expect("union edge comes from g");
                        (!wanted_edges[id]).then_some((None, Some(id), y))
                    })
                    .next()
            }
        };
        let Some((avoid_vertex, avoid_edge, target)) = spurious else {
            break;
        };

        let costly: Vec<bool> = in_union.iter().map(|&u| !u).collect();
        let parent = zero_one_tree(g, root, &costly, avoid_vertex, avoid_edge);
        let path = tree_path(g, &parent, target);
        debug_assert!(!path.is_empty(), "g must bypass a spurious dominator");
        let before = extra.len();
        for id in path {
            if !in_union[id] {
                in_union[id] = true;
                extra.push(g.edge(id));
            }
        }
        assert!(extra.len() > before, "repair made no progress");
    }

    let mut pair = TreePair {
        first: first.into_iter().map(|id| g.edge(id)).collect(),
        second: second.into_iter().map(|id| g.edge(id)).collect(),
        extra,
    };
    pair.first.sort_unstable();
    pair.second.sort_unstable();
    pair.extra.sort_unstable();
    pair
}

/// Runs the repair from a BFS first tree and, when that needs repair edges,
/// from two DFS first trees as well, keeping the smallest union.
fn preserving_pair(f: &FlowGraph<'_>, preserve: Preserve) -> TreePair {
    let mut best = repaired_pair(f, preserve, bfs_tree(f.graph, f.root));
    for backwards in [false, true] {
        if best.extra.is_empty() {
            break;
        }
        let other = repaired_pair(f, preserve, dfs_tree(f.graph, f.root, backwards));
        if other.union_len() < best.union_len() {
            best = other;
        }
    }
    best
}

/// Two spanning trees whose union has the same non-trivial dominators as the
/// flowgraph. Repair edges, if any, are reported in [`TreePair::extra`].
pub fn dominator_preserving_pair(f: &FlowGraph<'_>) -> TreePair {
    preserving_pair(f, Preserve::Dominators)
}

/// Two spanning trees whose union has exactly the same edge dominators as
/// the flowgraph.
pub fn edge_dominator_preserving_pair(f: &FlowGraph<'_>) -> TreePair {
    preserving_pair(f, Preserve::EdgeDominators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{bidirected_complete, cycle, fig1};

    fn tree_of(g: &DiGraph, root: usize) -> DominatorTree {
        dominator_tree(&FlowGraph::new(g, root).unwrap())
    }

    #[test]
    fn flowgraph_rejects_unreachable() {
        let g = DiGraph::from_edge_list(3, &[(0, 1), (2, 0)]).unwrap();
        assert_eq!(
            FlowGraph::new(&g, 0).err(),
            Some(Error::Unreachable { root: 0, vertex: 2 })
        );
        assert!(FlowGraph::new(&g, 2).is_ok());
        assert!(matches!(
            FlowGraph::new(&g, 3),
            Err(Error::UnknownVertex { .. })
        ));
    }

    #[test]
    fn small_trees() {
        let t = tree_of(&cycle(3), 0);
        assert_eq!(t.idom(0), None);
        assert_eq!(t.idom(1), Some(0));
        assert_eq!(t.idom(2), Some(1));
        assert_eq!(nontrivial_dominators(&t), vec![1]);

        let t = tree_of(&bidirected_complete(3), 0);
        assert_eq!(t.idom(1), Some(0));
        assert_eq!(t.idom(2), Some(0));
        assert!(nontrivial_dominators(&t).is_empty());
    }

    #[test]
    fn fig1_tree_rooted_at_label_1() {
        // Frozen from the deletion oracle, in labels: idom(5)=6, idom(7)=6,
        // idom(12)=6, every other vertex is a child of 1.
        let t = tree_of(&fig1(), 0);
        let expected_labels = [
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 6),
            (6, 1),
            (7, 6),
            (8, 1),
            (9, 1),
            (10, 1),
            (11, 1),
            (12, 6),
        ];
        for (w, d) in expected_labels {
            assert_eq!(t.idom(w - 1), Some(d - 1), "idom of label {w}");
        }
        assert_eq!(nontrivial_dominators(&t), vec![5]);
        assert!(t.dominates(5, 11));
        assert!(!t.dominates(11, 5));
        assert_eq!(t.dominators(11), vec![11, 5, 0]);
    }

    #[test]
    fn split_sizes() {
        let s = edge_split_all(&cycle(3));
        assert_eq!((s.split().n(), s.split().m()), (6, 6));
        let s = edge_split_all(&bidirected_complete(2));
        assert_eq!((s.split().n(), s.split().m()), (4, 4));
        let s = edge_split_all(&fig1());
        assert_eq!((s.split().n(), s.split().m()), (38, 52));
        for a in 12..38 {
            assert_eq!(s.split().in_degree(a), 1);
            assert_eq!(s.split().out_degree(a), 1);
        }
        // phi follows canonical edge order
        assert_eq!(s.phi(0), Some(12));
        assert_eq!(s.edge_of_aux(13), Some(1));
    }

    #[test]
    fn split_out_sizes() {
        let s = edge_split_out(&cycle(3), 0);
        assert_eq!(s.split().n(), 4);
        let g = fig1();
        // label 6 has out-degree 5
        let s = edge_split_out(&g, 5);
        assert_eq!(s.split().n(), 12 + 5);
        assert_eq!(s.split().m(), 26 + 5);
        let sink = DiGraph::from_edge_list(2, &[(0, 1)]).unwrap();
        let s = edge_split_out(&sink, 1);
        assert_eq!(s.split(), &sink);
    }

    #[test]
    fn split_tree_contracts_to_base_tree() {
        let g = fig1();
        let split = edge_split_all(&g);
        for root in 0..g.n() {
            let base = tree_of(&g, root);
            let t = DominatorTree::compute(split.split(), root);
            for w in 0..g.n() {
                let lifted = t
                    .dominators(w)
                    .into_iter()
                    .skip(1)
                    .find(|&d| split.is_original(d));
                assert_eq!(lifted, base.idom(w));
            }
        }
    }

    #[test]
    fn unguarded_examples() {
        let k3 = bidirected_complete(3);
        assert_eq!(
            unguarded_vertices(&FlowGraph::new(&k3, 0).unwrap()),
            vec![1, 2]
        );
        let c3 = cycle(3);
        assert!(unguarded_vertices(&FlowGraph::new(&c3, 0).unwrap()).is_empty());
        // Frozen oracle value: U(1) = {2,3,4,6,7,8,9,10,11} in labels.
        let g = fig1();
        let u = unguarded_vertices(&FlowGraph::new(&g, 0).unwrap());
        assert_eq!(u, vec![1, 2, 3, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn edge_dominator_examples() {
        let c3 = cycle(3);
        let f = FlowGraph::new(&c3, 0).unwrap();
        assert_eq!(edge_dominators(&f), vec![(0, 1), (1, 2)]);
        let k3 = bidirected_complete(3);
        assert!(edge_dominators(&FlowGraph::new(&k3, 0).unwrap()).is_empty());
    }

    fn check_pair(g: &DiGraph, root: usize, pair: &TreePair) {
        for tree in [&pair.first, &pair.second] {
            assert_eq!(tree.len(), g.n() - 1);
            let t = DiGraph::from_edge_list(g.n(), tree).unwrap();
            assert!(FlowGraph::new(&t, root).is_ok());
            assert!(tree.iter().all(|&(u, v)| g.has_edge(u, v)));
        }
    }

    #[test]
    fn dominator_pair_examples() {
        let k3 = bidirected_complete(3);
        let pair = dominator_preserving_pair(&FlowGraph::new(&k3, 0).unwrap());
        check_pair(&k3, 0, &pair);
        let h = k3.spanning_subgraph(&pair.union());
        assert!(tree_of(&h, 0).nontrivial_dominators().is_empty());
        assert!(pair.within_budget(3));

        let c3 = cycle(3);
        let pair = dominator_preserving_pair(&FlowGraph::new(&c3, 0).unwrap());
        assert_eq!(pair.first, vec![(0, 1), (1, 2)]);
        assert_eq!(pair.second, vec![(0, 1), (1, 2)]);
        assert!(pair.extra.is_empty());

        let g = fig1();
        for root in 0..g.n() {
            let pair = dominator_preserving_pair(&FlowGraph::new(&g, root).unwrap());
            check_pair(&g, root, &pair);
            let h = g.spanning_subgraph(&pair.union());
            assert_eq!(
                tree_of(&h, root).nontrivial_dominators(),
                tree_of(&g, root).nontrivial_dominators()
            );
        }
    }

    #[test]
    fn edge_dominator_pair_examples() {
        let c3 = cycle(3);
        let pair = edge_dominator_preserving_pair(&FlowGraph::new(&c3, 0).unwrap());
        assert_eq!(pair.union(), vec![(0, 1), (1, 2)]);

        let k3 = bidirected_complete(3);
        let pair = edge_dominator_preserving_pair(&FlowGraph::new(&k3, 0).unwrap());
        let h = k3.spanning_subgraph(&pair.union());
        assert_eq!(
            unguarded_vertices(&FlowGraph::new(&h, 0).unwrap()),
            vec![1, 2]
        );

        let g = fig1();
        for root in 0..g.n() {
            let f = FlowGraph::new(&g, root).unwrap();
            let pair = edge_dominator_preserving_pair(&f);
            check_pair(&g, root, &pair);
            let h = g.spanning_subgraph(&pair.union());
            let fh = FlowGraph::new(&h, root).unwrap();
            assert_eq!(edge_dominators(&fh), edge_dominators(&f));
            assert_eq!(unguarded_vertices(&fh), unguarded_vertices(&f));
        }
    }
}
