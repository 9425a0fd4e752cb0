//! Simple undirected graphs with dense 0-based vertex ids.
//!
//! Graphs are immutable after construction; `complement` and
//! `induced_subgraph` return new values. All edges are stored as ordered
//! pairs `(u, v)` with `u < v`, sorted lexicographically.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge line, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("expected {expected} edges, found only {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: trailing data after the declared {expected} edges")]
    TrailingData { line: usize, expected: usize },
}

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// Row-major adjacency bitset, `words_per_row` words per vertex.
    bits: Vec<u64>,
    words_per_row: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are normalized to `(min, max)`;
    /// self-loops, duplicates and out-of-range endpoints are rejected.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let words_per_row = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words_per_row];
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { id: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { id: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            let (u, v) = (a.min(b), a.max(b));
            if bits[u * words_per_row + v / 64] >> (v % 64) & 1 == 1 {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            bits[u * words_per_row + v / 64] |= 1 << (v % 64);
            bits[v * words_per_row + u / 64] |= 1 << (u % 64);
            adj[u].push(v);
            adj[v].push(u);
            normalized.push((u, v));
        }
        normalized.sort_unstable();
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
            bits,
            words_per_row,
        })
    }

    /// Parses the edge-list text format: `#` comment lines, a `n m` header,
    /// then exactly `m` lines `u v`. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut data_lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = data_lines
            .next()
            .ok_or(ParseError::MalformedHeader { line: 1 })?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::MalformedHeader { line: header_line })?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::MalformedHeader { line: header_line })?;
        if it.next().is_some() {
            return Err(ParseError::MalformedHeader { line: header_line });
        }

        let mut seen = std::collections::BTreeSet::new();
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = data_lines.next().ok_or(ParseError::MissingEdges {
                expected: m,
                found: edges.len(),
            })?;
            let mut it = text.split_whitespace();
            let parse_id = |t: Option<&str>| t.and_then(|t| t.parse::<usize>().ok());
            let (a, b) = match (parse_id(it.next()), parse_id(it.next()), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(ParseError::MalformedEdge { line }),
            };
            if a >= n {
                return Err(ParseError::VertexOutOfRange { line, id: a, n });
            }
            if b >= n {
                return Err(ParseError::VertexOutOfRange { line, id: b, n });
            }
            if a == b {
                return Err(ParseError::SelfLoop { line, v: a });
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(ParseError::DuplicateEdge { line, u, v });
            }
            edges.push((u, v));
        }
        if let Some((line, _)) = data_lines.next() {
            return Err(ParseError::TrailingData { line, expected: m });
        }
        Ok(Graph::new(n, edges).expect("edge list validated during parsing"))
    }

    /// Serializes to the same edge-list format, edges sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    /// The complement graph: `{u, v}` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("complement of a valid graph is valid")
    }

    /// The subgraph induced by `keep`, relabeled contiguously in increasing
    /// id order. Returns the old-to-new index map so solutions on the
    /// subgraph can be translated back.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, BTreeMap<usize, usize>) {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        assert!(kept.iter().all(|&v| v < self.n), "keep set out of range");
        let old_to_new: BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        let sub =
            Graph::new(kept.len(), edges).expect("induced subgraph of a valid graph is valid");
        (sub, old_to_new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p5() -> Graph {
        Graph::parse("5 4\n0 1\n1 2\n2 3\n3 4").unwrap()
    }

    #[test]
    fn parse_p5() {
        let g = p5();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn parse_single_vertex() {
        let g = Graph::parse("1 0").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_triangle() {
        let g = Graph::parse("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn parse_comments_and_blanks() {
        let g = Graph::parse("# a path\n\n5 4\n0 1\n# middle\n1 2\n2 3\n\n3 4\n").unwrap();
        assert_eq!(g, p5());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            Graph::parse("x y"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            Graph::parse("2 1\n0 5"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                id: 5,
                n: 2
            })
        );
        assert_eq!(
            Graph::parse("# c\n3 2\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge {
                line: 4,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            Graph::parse("3 1\n2 2"),
            Err(ParseError::SelfLoop { line: 2, v: 2 })
        );
        assert_eq!(
            Graph::parse("3 2\n0 1"),
            Err(ParseError::MissingEdges {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            Graph::parse("3 1\n0 1\n1 2"),
            Err(ParseError::TrailingData {
                line: 3,
                expected: 1
            })
        );
        assert_eq!(
            Graph::parse("3 1\n0 1 2"),
            Err(ParseError::MalformedEdge { line: 2 })
        );
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let k3 = Graph::parse("3 3\n0 1\n1 2\n0 2").unwrap();
        let c = k3.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.n(), 3);
    }

    #[test]
    fn complement_of_p5() {
        let c = p5().complement();
        assert_eq!(c.edges(), &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn complement_is_involution() {
        assert_eq!(p5().complement().complement(), p5());
    }

    #[test]
    fn induced_subgraph_edge() {
        let (sub, map) = p5().induced_subgraph(&[3, 4]);
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.edges(), &[(0, 1)]);
        assert_eq!(map[&3], 0);
        assert_eq!(map[&4], 1);
    }

    #[test]
    fn induced_subgraph_identity() {
        let (sub, map) = p5().induced_subgraph(&[0, 1, 2, 3, 4]);
        assert_eq!(sub, p5());
        assert!(map.iter().all(|(&old, &new)| old == new));
    }

    #[test]
    fn induced_subgraph_independent_set() {
        // 0, 2, 4 are pairwise non-adjacent in the path.
        let (sub, _) = p5().induced_subgraph(&[0, 2, 4]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn serialize_round_trip() {
        let g = p5();
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
        let empty = Graph::new(0, []).unwrap();
        assert_eq!(empty.to_edge_list(), "0 0\n");
        assert_eq!(Graph::parse(&empty.to_edge_list()).unwrap(), empty);
    }
}
