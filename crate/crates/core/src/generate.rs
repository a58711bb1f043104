//! Seeded random strongly connected graphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge};

/// A Hamiltonian cycle over a random vertex order plus `m - n` distinct
/// random extra edges. The same `(n, m, seed)` always gives the same graph.
pub fn random_strongly_connected(n: usize, m: usize, seed: u64) -> Result<DiGraph> {
    let max = n * n.saturating_sub(1);
    if n == 0 {
        return Err(Error::Generator {
            n,
            m,
            reason: "need at least one vertex",
        });
    }
    if n == 1 {
        return if m == 0 {
            Ok(DiGraph::empty(1))
        } else {
            Err(Error::Generator {
                n,
                m,
                reason: "a single vertex has no edges",
            })
        };
    }
    if m < n {
        return Err(Error::Generator {
            n,
            m,
            reason: "m must be at least n",
        });
    }
    if m > max {
        return Err(Error::Generator {
            n,
            m,
            reason: "m exceeds n(n-1)",
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges: Vec<Edge> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    let mut present: HashSet<Edge> = edges.iter().copied().collect();

    if 2 * m <= max {
        while edges.len() < m {
            let e = (rng.gen_range(0..n), rng.gen_range(0..n));
            if e.0 != e.1 && present.insert(e) {
                edges.push(e);
            }
        }
    } else {
        let mut rest: Vec<Edge> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !present.contains(&(u, v)))
            .collect();
        rest.shuffle(&mut rng);
        edges.extend(rest.into_iter().take(m - n));
    }
    DiGraph::from_edge_list(n, &edges)
}
