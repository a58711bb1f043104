//! Brute-force definitional versions of every relation and block family.
//! Each query deletes a vertex or edge and recounts SCCs or reachability;
//! nothing here uses dominators.

use crate::blocks::{BlockFamily, BlockKind, PairRelation};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, scc, DiGraph, Edge, Partition, UndirectedGraph};

/// Largest graph accepted by the exponential block enumeration.
pub const BLOCK_LIMIT: usize = 12;
/// Largest graph accepted by simple-path enumeration.
pub const PATH_LIMIT: usize = 8;
/// Largest edge count accepted by the exact spanning-subgraph search.
pub const SUBSET_EDGE_LIMIT: usize = 24;

fn check_pair(g: &DiGraph, x: usize, y: usize) -> Result<()> {
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::UnknownVertex {
                vertex: v,
                n: g.n(),
            });
        }
    }
    if x == y {
        return Err(Error::SameVertex(x));
    }
    Ok(())
}

fn co_scc_without_vertex(g: &DiGraph, z: usize, x: usize, y: usize) -> bool {
    let sub = g.delete_vertices(&[z]);
    let local = |v: usize| {
        sub.original
            .iter()
            .position(|&o| o == v)
            .expect("kept vertex")
    };
    scc(&sub.graph).same_cell(local(x), local(y))
}

fn co_scc_without_edges(g: &DiGraph, removed: &[Edge], x: usize, y: usize) -> bool {
    scc(&g.delete_edges(removed)).same_cell(x, y)
}

/// Same SCC after deleting any third vertex and after deleting the edges
/// between `x` and `y`.
pub fn oracle_2d_pair(g: &DiGraph, x: usize, y: usize) -> Result<bool> {
    check_pair(g, x, y)?;
    Ok(scc(g).same_cell(x, y)
        && (0..g.n())
            .filter(|&z| z != x && z != y)
            .all(|z| co_scc_without_vertex(g, z, x, y))
        && co_scc_without_edges(g, &[(x, y), (y, x)], x, y))
}

/// Same SCC after deleting any third vertex.
pub fn oracle_2s_pair(g: &DiGraph, x: usize, y: usize) -> Result<bool> {
    check_pair(g, x, y)?;
    Ok(scc(g).same_cell(x, y)
        && (0..g.n())
            .filter(|&z| z != x && z != y)
            .all(|z| co_scc_without_vertex(g, z, x, y)))
}

/// Same SCC after deleting any single edge.
pub fn oracle_2e_pair(g: &DiGraph, x: usize, y: usize) -> Result<bool> {
    check_pair(g, x, y)?;
    Ok(scc(g).same_cell(x, y)
        && g.edges()
            .iter()
            .all(|&e| co_scc_without_edges(g, &[e], x, y)))
}

pub fn oracle_pair(g: &DiGraph, kind: BlockKind, x: usize, y: usize) -> Result<bool> {
    match kind {
        BlockKind::TwoDirected => oracle_2d_pair(g, x, y),
        BlockKind::TwoStrong => oracle_2s_pair(g, x, y),
        BlockKind::TwoEdge => oracle_2e_pair(g, x, y),
    }
}

/// The full pair relation of `kind`, one oracle query per pair.
pub fn oracle_relation(g: &DiGraph, kind: BlockKind) -> PairRelation {
    let mut rel = PairRelation::new(g.n());
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if oracle_pair(g, kind, x, y).expect("distinct in-range pair") {
                rel.insert(x, y);
            }
        }
    }
    rel
}

/// Maximal cliques (Bron–Kerbosch with pivoting).
fn maximal_cliques(rel: &PairRelation) -> Vec<Vec<usize>> {
    fn expand(
        rel: &PairRelation,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| rel.contains(u, v)).count())
            .expect("p or x is non-empty");
        let mut p = p;
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| !rel.contains(pivot, v))
            .collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| rel.contains(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| rel.contains(v, w)).collect();
            expand(rel, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(
        rel,
        &mut Vec::new(),
        (0..rel.n()).collect(),
        Vec::new(),
        &mut out,
    );
    out
}

/// Every maximal vertex set of size at least two whose pairs are all
/// related under `kind`.
pub fn oracle_blocks(g: &DiGraph, kind: BlockKind) -> Result<BlockFamily> {
    if g.n() > BLOCK_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: BLOCK_LIMIT,
        });
    }
    let rel = oracle_relation(g, kind);
    Ok(BlockFamily::new(kind, maximal_cliques(&rel)))
}

fn require_strong(g: &DiGraph) -> Result<()> {
    if is_strongly_connected(g) {
        Ok(())
    } else {
        Err(Error::NotStronglyConnected)
    }
}

/// Vertices whose deletion leaves a non-empty graph that is not strongly
/// connected.
pub fn oracle_saps(g: &DiGraph) -> Result<Vec<usize>> {
    require_strong(g)?;
    Ok((0..g.n())
        .filter(|&v| {
            let rest = g.delete_vertices(&[v]).graph;
            rest.n() > 0 && !is_strongly_connected(&rest)
        })
        .collect())
}

pub fn oracle_bridges(g: &DiGraph) -> Result<Vec<Edge>> {
    require_strong(g)?;
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|&e| !is_strongly_connected(&g.delete_edges(&[e])))
        .collect())
}

fn reachable(
    g: &DiGraph,
    from: usize,
    skip_vertex: Option<usize>,
    skip_edge: Option<Edge>,
) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    if Some(from) == skip_vertex {
        return seen;
    }
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for w in g.successors(u) {
            if !seen[w] && Some(w) != skip_vertex && Some((u, w)) != skip_edge {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Immediate dominators by deletion: `u` dominates `w` iff deleting `u`
/// cuts every `root -> w` path.
pub fn oracle_idom(g: &DiGraph, root: usize) -> Vec<Option<usize>> {
    let n = g.n();
    let base = reachable(g, root, None, None);
    // dominated[u][w]: u is a proper dominator of w
    let dominated: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            if u == root {
                return (0..n).map(|w| w != root && base[w]).collect();
            }
            let cut = reachable(g, root, Some(u), None);
            (0..n).map(|w| w != u && base[w] && !cut[w]).collect()
        })
        .collect();
    (0..n)
        .map(|w| {
            if w == root || !base[w] {
                return None;
            }
            // the deepest proper dominator has the most dominators itself
            (0..n)
                .filter(|&u| dominated[u][w])
                .max_by_key(|&u| (0..n).filter(|&d| dominated[d][u]).count())
        })
        .collect()
}

/// Vertices other than `root` that stay reachable after deleting any one edge.
pub fn oracle_unguarded(g: &DiGraph, root: usize) -> Vec<usize> {
    let cuts: Vec<Vec<bool>> = g
        .edges()
        .iter()
        .map(|&e| reachable(g, root, None, Some(e)))
        .collect();
    let base = reachable(g, root, None, None);
    (0..g.n())
        .filter(|&w| w != root && base[w] && cuts.iter().all(|c| c[w]))
        .collect()
}

/// Vertices `w` with two internally vertex-disjoint `v -> w` paths: no
/// third vertex separates them and the direct edge, if any, is not the only
/// route.
pub fn oracle_two_reach(g: &DiGraph, v: usize) -> Vec<usize> {
    let cuts: Vec<Vec<bool>> = (0..g.n()).map(|z| reachable(g, v, Some(z), None)).collect();
    (0..g.n())
        .filter(|&w| {
            w != v
                && (0..g.n()).filter(|&z| z != v && z != w).all(|z| cuts[z][w])
                && reachable(g, v, None, Some((v, w)))[w]
        })
        .collect()
}

fn simple_paths(g: &DiGraph, from: usize, to: usize) -> Vec<Vec<usize>> {
    fn walk(
        g: &DiGraph,
        to: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().expect("non-empty path");
        if u == to {
            out.push(path.clone());
            return;
        }
        for w in g.successors(u) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                walk(g, to, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.n()];
    on[from] = true;
    let mut out = Vec::new();
    walk(g, to, &mut vec![from], &mut on, &mut out);
    out
}

fn two_disjoint_paths(g: &DiGraph, from: usize, to: usize) -> bool {
    let paths = simple_paths(g, from, to);
    let interior = |p: &Vec<usize>| -> Vec<usize> { p[1..p.len() - 1].to_vec() };
    paths.iter().enumerate().any(|(i, p)| {
        let a = interior(p);
        paths[i + 1..]
            .iter()
            .any(|q| interior(q).iter().all(|v| !a.contains(v)))
    })
}

/// Two internally vertex-disjoint paths in each direction, found by
/// enumerating every simple path.
pub fn oracle_menger_2d(g: &DiGraph, x: usize, y: usize) -> Result<bool> {
    check_pair(g, x, y)?;
    if g.n() > PATH_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: PATH_LIMIT,
        });
    }
    Ok(two_disjoint_paths(g, x, y) && two_disjoint_paths(g, y, x))
}

/// Chordality by repeatedly removing a simplicial vertex.
pub fn is_chordal(u: &UndirectedGraph) -> bool {
    let n = u.n();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = u
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| alive[w])
                    .collect();
                nb.iter()
                    .enumerate()
                    .all(|(i, &a)| nb[i + 1..].iter().all(|&b| u.has_edge(a, b)))
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// Connected components of a relation graph.
pub fn relation_components(rel: &PairRelation) -> Partition {
    crate::graph::connected_components(&rel.to_undirected())
}

/// Size of a smallest spanning subgraph of `g` satisfying `accept`, by
/// trying edge subsets in order of increasing size. The search keeps only
/// subsets in which every vertex has an entering and a leaving edge.
pub fn oracle_min_spanning(g: &DiGraph, accept: impl Fn(&DiGraph) -> bool) -> Result<usize> {
    if g.m() > SUBSET_EDGE_LIMIT {
        return Err(Error::TooLarge {
            n: g.m(),
            limit: SUBSET_EDGE_LIMIT,
        });
    }
    let edges = g.edges();
    let m = edges.len();
    for k in g.n().min(m)..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let chosen: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            let mut out = vec![false; g.n()];
            let mut inn = vec![false; g.n()];
            for &(a, b) in &chosen {
                out[a] = true;
                inn[b] = true;
            }
            if g.n() == 1 || (out.iter().all(|&f| f) && inn.iter().all(|&f| f)) {
                let h = DiGraph::from_edge_list(g.n(), &chosen).expect("edges of g");
                if accept(&h) {
                    return Ok(k);
                }
            }
            // next k-combination of 0..m
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(m)
}
