//! Edge-list files: a header line `n m`, then `m` lines `u v`. Vertex labels
//! are arbitrary non-negative integers, mapped to dense ids in order of first
//! appearance. Lines starting with `#` and blank lines are ignored.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt::Write as _;

use dicon::{DiGraph, Edge};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: DiGraph,
    /// `labels[id]` is the original label of dense vertex `id`.
    pub labels: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(u64, u64), ParseError> {
    let mut tokens = text.split_whitespace();
    let mut next = || -> Result<u64, ParseError> {
        let tok = tokens
            .next()
            .ok_or_else(|| err(line, format!("expected two integers, got `{text}`")))?;
        tok.parse::<u64>()
            .map_err(|_| err(line, format!("`{tok}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if let Some(extra) = tokens.next() {
        return Err(err(line, format!("unexpected token `{extra}`")));
    }
    Ok(pair)
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or_else(|| err(0, "missing `n m` header"))?;
        let (n, m) = two_numbers(header_line, header)?;
        let n = usize::try_from(n).map_err(|_| err(header_line, "vertex count too large"))?;
        let m = usize::try_from(m).map_err(|_| err(header_line, "edge count too large"))?;

        let mut labels: Vec<u64> = Vec::new();
        let mut ids: HashMap<u64, usize> = HashMap::new();
        let mut edges: Vec<Edge> = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line, text) in lines {
            if edges.len() == m {
                return Err(err(
                    line,
                    format!("more than the {m} edge lines announced in the header"),
                ));
            }
            let (a, b) = two_numbers(line, text)?;
            if a == b {
                return Err(err(line, format!("self-loop on vertex {a}")));
            }
            let mut id = |label: u64| -> Result<usize, ParseError> {
                if let Some(&id) = ids.get(&label) {
                    return Ok(id);
                }
                if labels.len() == n {
                    return Err(err(
                        line,
                        format!("vertex {label} exceeds the {n} vertices announced in the header"),
                    ));
                }
                ids.insert(label, labels.len());
                labels.push(label);
                Ok(labels.len() - 1)
            };
            edges.push((id(a)?, id(b)?));
            last_line = line;
        }
        if edges.len() < m {
            return Err(err(
                last_line,
                format!(
                    "header announces {m} edges but only {} edge lines follow",
                    edges.len()
                ),
            ));
        }
        // Isolated vertices get the smallest labels not used by any edge.
        let mut candidate = 0u64;
        while labels.len() < n {
            if let Entry::Vacant(slot) = ids.entry(candidate) {
                slot.insert(labels.len());
                labels.push(candidate);
            }
            candidate += 1;
        }
        let graph = DiGraph::from_edge_list(n, &edges).map_err(|e| err(0, e.to_string()))?;
        Ok(GraphFile { graph, labels })
    }

    /// Identity labels `0..n`.
    pub fn unlabeled(graph: DiGraph) -> GraphFile {
        let labels = (0..graph.n() as u64).collect();
        GraphFile { graph, labels }
    }

    pub fn label(&self, id: usize) -> u64 {
        self.labels[id]
    }

    pub fn id_of(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Labels of a vertex set, sorted.
    pub fn label_set(&self, ids: &[usize]) -> Vec<u64> {
        let mut out: Vec<u64> = ids.iter().map(|&v| self.labels[v]).collect();
        out.sort_unstable();
        out
    }

    /// Labels of a family of vertex sets, each sorted, then sorted as a list.
    pub fn label_family(&self, sets: &[Vec<usize>]) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = sets.iter().map(|s| self.label_set(s)).collect();
        out.sort();
        out
    }

    pub fn label_edges(&self, edges: &[Edge]) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = edges
            .iter()
            .map(|&(a, b)| (self.labels[a], self.labels[b]))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn to_text(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for line in c.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        let _ = writeln!(out, "{} {}", self.graph.n(), self.graph.m());
        for &(a, b) in self.graph.edges() {
            let _ = writeln!(out, "{} {}", self.labels[a], self.labels[b]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_appearance_mapping() {
        let f = GraphFile::parse("# comment\n3 3\n10 20\n\n20 30\n30 10\n").unwrap();
        assert_eq!(f.labels, vec![10, 20, 30]);
        assert_eq!(f.graph.edges(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(f.id_of(30), Some(2));
    }

    #[test]
    fn duplicates_are_dropped() {
        let f = GraphFile::parse("2 3\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(f.graph.m(), 2);
    }

    #[test]
    fn isolated_vertices_get_unused_labels() {
        let f = GraphFile::parse("4 2\n0 2\n2 0\n").unwrap();
        assert_eq!(f.labels, vec![0, 2, 1, 3]);
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("", 0, "missing"),
            ("2 1\n0 x\n", 2, "`x`"),
            ("2 1\n0 0\n", 2, "self-loop"),
            ("2 2\n0 1\n", 2, "only 1"),
            ("2 1\n0 1\n1 0\n", 3, "more than"),
            ("2 1\n0 5\n5 7\n", 3, "more than"),
            ("2 2\n0 1\n1 7\n", 3, "exceeds"),
            ("2 1 9\n0 1\n", 1, "unexpected"),
            ("2 1\n-1 1\n", 2, "`-1`"),
        ];
        for (text, line, needle) in cases {
            let e = GraphFile::parse(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
            assert!(e.to_string().contains(needle), "{text:?}: {e}");
        }
    }

    #[test]
    fn text_round_trip() {
        let f = GraphFile::parse("3 3\n7 8\n8 9\n9 7\n").unwrap();
        let again = GraphFile::parse(&f.to_text(Some("note"))).unwrap();
        assert_eq!(again, f);
    }
}
