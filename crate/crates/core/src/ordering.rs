//! Co-comparability vertex orderings.
//!
//! An ordering of a co-comparability graph is any vertex order in which
//! non-adjacency is transitive: whenever `u < v < w` with `uv` and `vw`
//! non-edges, `uw` is a non-edge as well. Equivalently, it is a transitive
//! ordering of the complement (a comparability graph).
//!
//! [`verify_ordering`] validates a claimed order against that property;
//! [`compute_ordering`] finds one from scratch by transitively orienting the
//! complement with the classical implication-class forcing procedure.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::collections::BinaryHeap;
use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("ordering is not a permutation of 0..{n}")]
    NotPermutation { n: usize },
    #[error("ordering file: {token:?} is not a vertex id")]
    MalformedOrderingFile { token: String },
    #[error(
        "not a co-comparability ordering: {u} \u{227a} {v} \u{227a} {w} with \
         {{{u},{v}}} and {{{v},{w}}} non-edges but {{{u},{w}}} an edge"
    )]
    NotCocoOrdering { u: usize, v: usize, w: usize },
    /// The complement admits no transitive orientation. The witness is a pair
    /// of oriented complement edges whose forced orientations clash.
    #[error(
        "not a co-comparability graph: complement orientation ({},{}) forces a \
         conflict on ({},{})",
        first.0, first.1, second.0, second.1
    )]
    NotCoComparability {
        first: (usize, usize),
        second: (usize, usize),
    },
}

/// A vertex order validated to satisfy the non-adjacency transitivity
/// property of the graph it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocoOrdering {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl CocoOrdering {
    pub(crate) fn new_unchecked(order: Vec<usize>) -> Self {
        let mut rank = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        CocoOrdering { order, rank }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Vertices in order: `order()[i]` is the `i`-th vertex.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of `v` in the order.
    pub fn rank_of(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.rank[u] < self.rank[v]
    }

    /// Restriction to an induced subgraph, relabeled through `old_to_new`.
    /// Orderings of induced subgraphs inherit validity, so no re-check is
    /// needed.
    pub(crate) fn restrict(&self, old_to_new: &BTreeMap<usize, usize>) -> CocoOrdering {
        let order = self
            .order
            .iter()
            .filter_map(|v| old_to_new.get(v).copied())
            .collect();
        CocoOrdering::new_unchecked(order)
    }

    /// One line of whitespace-separated vertex ids.
    pub fn to_line(&self) -> String {
        self.order
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses the one-line ordering file format.
pub fn parse_ordering(text: &str) -> Result<Vec<usize>, OrderingError> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| OrderingError::MalformedOrderingFile {
                    token: t.to_string(),
                })
        })
        .collect()
}

/// Checks that `order` is a permutation of the vertices of `g` in which
/// non-adjacency is transitive. On failure reports the first violating
/// triple in scan order (middle vertex outermost).
pub fn verify_ordering(g: &Graph, order: &[usize]) -> Result<CocoOrdering, OrderingError> {
    let n = g.n();
    if order.len() != n {
        return Err(OrderingError::NotPermutation { n });
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(OrderingError::NotPermutation { n });
        }
        seen[v] = true;
    }
    let ord = CocoOrdering::new_unchecked(order.to_vec());
    // Scan per middle vertex over its non-neighbors on each side.
    for mid_rank in 0..n {
        let v = ord.order[mid_rank];
        let left: Vec<usize> = (0..mid_rank)
            .map(|i| ord.order[i])
            .filter(|&u| !g.has_edge(u, v))
            .collect();
        if left.is_empty() {
            continue;
        }
        for w_rank in (mid_rank + 1)..n {
            let w = ord.order[w_rank];
            if g.has_edge(v, w) {
                continue;
            }
            for &u in &left {
                if g.has_edge(u, w) {
                    return Err(OrderingError::NotCocoOrdering { u, v, w });
                }
            }
        }
    }
    Ok(ord)
}

/// Symmetric bitset over vertex pairs.
struct PairBits {
    words: usize,
    bits: Vec<u64>,
}

impl PairBits {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        PairBits {
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
        self.bits[b * self.words + a / 64] |= 1 << (a % 64);
    }
}

/// Computes a co-comparability ordering of `g`, or proves there is none.
///
/// The complement is oriented class by class: pick an unoriented edge, orient
/// it, and propagate every forced orientation (two edges sharing an endpoint
/// force each other when their far ends are non-adjacent among the not yet
/// oriented edges). A conflict inside a class means the complement is not a
/// comparability graph. The finished orientation is re-verified for
/// transitivity rather than trusted, then topologically sorted with ties
/// broken by smallest vertex id.
pub fn compute_ordering(g: &Graph) -> Result<CocoOrdering, OrderingError> {
    let n = g.n();
    if n == 0 {
        return Ok(CocoOrdering::new_unchecked(Vec::new()));
    }
    let h = g.complement();

    // orient[a*n + b] = 1 means a -> b; kept antisymmetric.
    let mut orient: Vec<i8> = vec![0; n * n];
    // Complement edges whose implication class is already finished. The
    // forcing relation of later classes is taken over the remaining edges
    // only, so finished edges count as absent.
    let mut done = PairBits::new(n);
    let in_remaining =
        |h: &Graph, done: &PairBits, a: usize, b: usize| h.has_edge(a, b) && !done.get(a, b);

    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let mut class_edges: Vec<(usize, usize)> = Vec::new();
    for &(eu, ev) in h.edges() {
        if orient[eu * n + ev] != 0 {
            continue;
        }
        class_edges.clear();
        orient[eu * n + ev] = 1;
        orient[ev * n + eu] = -1;
        class_edges.push((eu, ev));
        queue.push_back((eu, ev));
        while let Some((a, b)) = queue.pop_front() {
            // a -> b forces a -> c for remaining edges ac whose far ends b, c
            // are non-adjacent in the remaining graph.
            for &c in h.neighbors(a) {
                if c == b || done.get(a, c) || in_remaining(&h, &done, b, c) {
                    continue;
                }
                match orient[a * n + c] {
                    0 => {
                        orient[a * n + c] = 1;
                        orient[c * n + a] = -1;
                        class_edges.push((a, c));
                        queue.push_back((a, c));
                    }
                    1 => {}
                    _ => {
                        return Err(OrderingError::NotCoComparability {
                            first: (a, b),
                            second: (c, a),
                        })
                    }
                }
            }
            // a -> b forces c -> b for remaining edges cb with a, c
            // non-adjacent in the remaining graph.
            for &c in h.neighbors(b) {
                if c == a || done.get(b, c) || in_remaining(&h, &done, a, c) {
                    continue;
                }
                match orient[c * n + b] {
                    0 => {
                        orient[c * n + b] = 1;
                        orient[b * n + c] = -1;
                        class_edges.push((c, b));
                        queue.push_back((c, b));
                    }
                    1 => {}
                    _ => {
                        return Err(OrderingError::NotCoComparability {
                            first: (a, b),
                            second: (b, c),
                        })
                    }
                }
            }
        }
        for &(x, y) in &class_edges {
            done.set(x, y);
        }
    }

    // Re-verify transitivity of the full orientation.
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in h.edges() {
        let (from, to) = if orient[u * n + v] == 1 {
            (u, v)
        } else {
            (v, u)
        };
        out_arcs[from].push(to);
        in_arcs[to].push(from);
    }
    for b in 0..n {
        for &a in &in_arcs[b] {
            for &c in &out_arcs[b] {
                if a != c && orient[a * n + c] != 1 {
                    return Err(OrderingError::NotCoComparability {
                        first: (a, b),
                        second: (b, c),
                    });
                }
            }
        }
    }

    // A transitive irreflexive orientation is a strict partial order, so the
    // topological sort below must consume every vertex.
    let mut indeg: Vec<usize> = (0..n).map(|v| in_arcs[v].len()).collect();
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &w in &out_arcs[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    assert_eq!(order.len(), n, "transitive orientation must be acyclic");
    Ok(CocoOrdering::new_unchecked(order))
}
