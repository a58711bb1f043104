//! Directed and undirected graphs over dense vertex ids, plus the baseline
//! decompositions (strongly connected components, connected components and
//! biconnected blocks) the rest of the crate is built on.
//!
//! Graphs are immutable once built. Every vertex set and edge list handed
//! out by this module is in canonical order: members ascending, cells and
//! blocks ordered lexicographically (hence by their minimum vertex).

use std::ops::Range;

use crate::error::{Error, Result};

/// A directed edge `(source, target)`.
pub type Edge = (usize, usize);

/// Simple directed graph on vertices `0..n`.
///
/// Edges are kept sorted by `(source, target)`; an edge's position in that
/// order is its edge id. Out- and in-adjacency are stored in compressed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    edges: Vec<Edge>,
    out_start: Vec<usize>,
    in_start: Vec<usize>,
    in_edges: Vec<usize>,
}

impl DiGraph {
    /// Builds a graph from an arbitrary list of pairs. Duplicate pairs are
    /// dropped; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, pairs: &[Edge]) -> Result<Self> {
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        Ok(Self::from_edges_unchecked(n, pairs.to_vec()))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_edges_unchecked(n, Vec::new())
    }

    /// Caller guarantees endpoints are in range and there are no self-loops.
    pub(crate) fn from_edges_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|&(u, v)| u < n && v < n && u != v));

        let mut out_start = vec![0; n + 1];
        let mut in_count = vec![0; n + 1];
        for &(u, v) in &edges {
            out_start[u + 1] += 1;
            in_count[v + 1] += 1;
        }
        for i in 0..n {
            out_start[i + 1] += out_start[i];
            in_count[i + 1] += in_count[i];
        }
        let in_start = in_count.clone();
        let mut fill = in_count;
        let mut in_edges = vec![0; edges.len()];
        // Edge ids are visited in (source, target) order, so every in-list
        // ends up sorted by source.
        for (id, &(_, v)) in edges.iter().enumerate() {
            in_edges[fill[v]] = id;
            fill[v] += 1;
        }
        DiGraph {
            n,
            edges,
            out_start,
            in_start,
            in_edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// All edges in canonical order; the index is the edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn out_edge_ids(&self, u: usize) -> Range<usize> {
        self.out_start[u]..self.out_start[u + 1]
    }

    pub fn in_edge_ids(&self, v: usize) -> &[usize] {
        &self.in_edges[self.in_start[v]..self.in_start[v + 1]]
    }

    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges[self.out_edge_ids(u)].iter().map(|&(_, v)| v)
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edge_ids(v).iter().map(move |&id| self.edges[id].0)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_start[u + 1] - self.out_start[u]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_start[v + 1] - self.in_start[v]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        let range = self.out_edge_ids(u);
        let start = range.start;
        self.edges[range]
            .binary_search(&(u, v))
            .ok()
            .map(|i| start + i)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// The reversal graph: `(u, v)` becomes `(v, u)`.
    pub fn reverse(&self) -> DiGraph {
        let edges = self.edges.iter().map(|&(u, v)| (v, u)).collect();
        Self::from_edges_unchecked(self.n, edges)
    }

    /// Spanning subgraph on the same vertex set keeping only `edges`.
    /// Edges not present in `self` are ignored.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> DiGraph {
        let kept = edges
            .iter()
            .copied()
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect();
        Self::from_edges_unchecked(self.n, kept)
    }

    /// Removes every vertex in `removed` together with its incident edges.
    pub fn delete_vertices(&self, removed: &[usize]) -> Subgraph {
        let mut keep = vec![true; self.n];
        for &v in removed {
            if v < self.n {
                keep[v] = false;
            }
        }
        let vertices: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        self.induced_subgraph(&vertices)
    }

    /// Subgraph induced by `vertices`, which must be sorted and distinct.
    /// New ids follow the order of `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &u in vertices {
            for w in self.successors(u) {
                if local[w] != usize::MAX {
                    edges.push((local[u], local[w]));
                }
            }
        }
        Subgraph {
            graph: Self::from_edges_unchecked(vertices.len(), edges),
            original: vertices.to_vec(),
        }
    }

    /// Removes the listed edges; pairs that are not edges are ignored.
    pub fn delete_edges(&self, removed: &[Edge]) -> DiGraph {
        let mut drop = vec![false; self.m()];
        for &(u, v) in removed {
            if let Some(id) = self.edge_id(u, v) {
                drop[id] = true;
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(drop)
            .filter(|(_, d)| !d)
            .map(|(&e, _)| e)
            .collect();
        Self::from_edges_unchecked(self.n, edges)
    }
}

/// A subgraph together with the map from its vertex ids back to the parent
/// graph's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: DiGraph,
    /// `original[local] = parent id`.
    pub original: Vec<usize>,
}

impl Subgraph {
    pub fn to_parent(&self, local: usize) -> usize {
        self.original[local]
    }

    pub fn edge_to_parent(&self, (u, v): Edge) -> Edge {
        (self.original[u], self.original[v])
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    /// Builds a graph from unordered pairs; `{u,v}` and `{v,u}` are the same
    /// edge and are stored once.
    pub fn new(n: usize, pairs: &[Edge]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_edges_unchecked(n, edges))
    }

    pub(crate) fn from_edges_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        UndirectedGraph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }
}

/// Disjoint vertex sets covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    /// Builds a canonical partition from a per-vertex label.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut first_seen: Vec<Option<usize>> = Vec::new();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        // Vertices are scanned in increasing order, so cells come out
        // ordered by their minimum member and internally sorted.
        for (v, &label) in labels.iter().enumerate() {
            if label >= first_seen.len() {
                first_seen.resize(label + 1, None);
            }
            let cell = *first_seen[label].get_or_insert_with(|| {
                cells.push(Vec::new());
                cells.len() - 1
            });
            cells[cell].push(v);
        }
        let mut cell_of = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        Partition { cells, cell_of }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    pub fn same_cell(&self, u: usize, v: usize) -> bool {
        self.cell_of[u] == self.cell_of[v]
    }
}

/// Marker for vertices removed from an SCC labelling.
pub(crate) const REMOVED: usize = usize::MAX;

/// Tarjan's algorithm on `g` with optionally one vertex and one edge id
/// masked out. Returns per-vertex component labels ([`REMOVED`] for the
/// masked vertex) and the number of components.
pub(crate) fn scc_labels(
    g: &DiGraph,
    skip_vertex: Option<usize>,
    skip_edge: Option<usize>,
) -> (Vec<usize>, usize) {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut label = vec![REMOVED; n];
    let mut stack = Vec::new();
    let mut frames: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut components = 0;

    for start in 0..n {
        if index[start] != UNSEEN || Some(start) == skip_vertex {
            continue;
        }
        index[start] = counter;
        low[start] = counter;
        counter += 1;
        stack.push(start);
        on_stack[start] = true;
        frames.push((start, g.out_start[start]));

        while let Some(&mut (v, ref mut next)) = frames.last_mut() {
            if *next < g.out_start[v + 1] {
                let id = *next;
                *next += 1;
                let w = g.edges[id].1;
                if Some(id) == skip_edge || Some(w) == skip_vertex {
                    continue;
                }
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, g.out_start[w]));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        label[w] = components;
                        if w == v {
                            break;
                        }
                    }
                    components += 1;
                }
            }
        }
    }
    (label, components)
}

/// Strongly connected components.
pub fn scc(g: &DiGraph) -> Partition {
    let (labels, _) = scc_labels(g, None, None);
    Partition::from_labels(&labels)
}

fn reaches_all(g: &DiGraph, root: usize, forward: bool) -> bool {
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut count = 1;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        let next: Box<dyn Iterator<Item = usize>> = if forward {
            Box::new(g.successors(u))
        } else {
            Box::new(g.predecessors(u))
        };
        for w in next {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n()
}

/// True iff `g` has at least one vertex and a single strongly connected
/// component.
pub fn is_strongly_connected(g: &DiGraph) -> bool {
    g.n() >= 1 && reaches_all(g, 0, true) && reaches_all(g, 0, false)
}

/// Connected components of an undirected graph.
pub fn connected_components(u: &UndirectedGraph) -> Partition {
    let n = u.n();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in u.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    Partition::from_labels(&label)
}

/// Vertex sets of the blocks (maximal biconnected pieces, bridges included
/// as two-vertex blocks) of an undirected graph. Isolated vertices belong to
/// no block. Output is canonical.
pub fn biconnected_blocks(u: &UndirectedGraph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = u.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut counter = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();
    // (vertex, dfs parent, next neighbour index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for s in 0..n {
        if disc[s] != UNSEEN || u.neighbors(s).is_empty() {
            continue;
        }
        disc[s] = counter;
        low[s] = counter;
        counter += 1;
        frames.push((s, UNSEEN, 0));

        while let Some(&mut (v, parent, ref mut next)) = frames.last_mut() {
            let adj = u.neighbors(v);
            if *next < adj.len() {
                let w = adj[*next];
                *next += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.retain(|b| b.len() > 1);
    blocks.sort();
    blocks
}
