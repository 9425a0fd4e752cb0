//! Layered digraph reductions to minimum s-t vertex cut.
//!
//! For threshold `d`, the transversal digraph holds `d` level copies of every
//! vertex that lies in a maximum independent set; the blocker digraph holds
//! `d` level copies of every vertex whose largest containing independent set
//! has at least `alpha - d + 1` elements. An arc runs from copy `x` of `u` to
//! copy `y` of `v` when the pair qualifies (max-extendable for the
//! transversal, merely non-adjacent for the blocker) and the copies satisfy
//!
//! ```text
//! pos(y) - pos(x) - 1 = level(y) - level(x) >= 0
//! ```
//!
//! with the source fixed at position 0 / level 1 and the sink at position
//! `alpha + 1` / level `d`. Every s-t path then spells out exactly one
//! qualifying independent set of size `alpha - d + 1` (skipped positions
//! raise the level), so hitting sets of those correspond to vertex cuts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::layers::{pair_max_extendable, LevelStructure, NonEdgeDag};
use crate::mincut::DiGraph;
use crate::ordering::CocoOrdering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Transversal,
    Blocker,
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Problem::Transversal => write!(f, "transversal"),
            Problem::Blocker => write!(f, "blocker"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("threshold d = {d} out of range, must satisfy 1 <= d <= alpha = {alpha}")]
    ThresholdOutOfRange { d: usize, alpha: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeOrigin {
    Source,
    Sink,
    Vertex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayeredNode {
    pub orig: NodeOrigin,
    pub level: usize,
    pub beta: usize,
    pub pos: usize,
}

#[derive(Debug, Clone)]
pub struct LayeredDigraph {
    nodes: Vec<LayeredNode>,
    s: usize,
    t: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    kind: Problem,
    d: usize,
    alpha: usize,
    /// Vertex of the original graph -> its node copies by increasing level.
    copies: BTreeMap<usize, Vec<usize>>,
}

impl LayeredDigraph {
    pub fn kind(&self) -> Problem {
        self.kind
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn nodes(&self) -> &[LayeredNode] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Number of nodes excluding source and sink.
    pub fn internal_count(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Original vertex of a node, `None` for source and sink.
    pub fn origin_of(&self, node: usize) -> Option<usize> {
        match self.nodes[node].orig {
            NodeOrigin::Vertex(v) => Some(v),
            _ => None,
        }
    }

    /// Node copies of an original vertex, sorted by increasing level.
    pub fn copies_of(&self, v: usize) -> &[usize] {
        self.copies.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn to_digraph(&self) -> DiGraph {
        DiGraph {
            n: self.nodes.len(),
            arcs: self.arcs.clone(),
        }
    }

    /// Original vertices along an s-t path, source and sink skipped.
    pub fn project_path(&self, path: &[usize]) -> Vec<usize> {
        path.iter().filter_map(|&x| self.origin_of(x)).collect()
    }

    /// Number of s-t paths, saturating.
    pub fn count_st_paths(&self) -> u128 {
        // Arcs strictly increase pos, so sorting nodes by pos is topological.
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&i| self.nodes[i].pos);
        let mut ways = vec![0u128; self.nodes.len()];
        ways[self.s] = 1;
        for &i in &order {
            if ways[i] == 0 {
                continue;
            }
            for &j in &self.out[i] {
                ways[j] = ways[j].saturating_add(ways[i]);
            }
        }
        ways[self.t]
    }

    /// All s-t paths as node index sequences, or `None` once `limit` is
    /// exceeded.
    pub fn enumerate_st_paths(&self, limit: usize) -> Option<Vec<Vec<usize>>> {
        let mut paths = Vec::new();
        let mut stack = vec![self.s];
        // Iterative DFS with an explicit child cursor per depth.
        let mut cursors = vec![0usize];
        while let Some(&node) = stack.last() {
            if node == self.t {
                if paths.len() == limit {
                    return None;
                }
                paths.push(stack.clone());
                stack.pop();
                cursors.pop();
                continue;
            }
            let cursor = *cursors.last().unwrap();
            if cursor < self.out[node].len() {
                *cursors.last_mut().unwrap() += 1;
                stack.push(self.out[node][cursor]);
                cursors.push(0);
            } else {
                stack.pop();
                cursors.pop();
            }
        }
        Some(paths)
    }

    fn reachable_from(&self, start: usize, banned: &[bool], forward: bool) -> Vec<bool> {
        let adj = if forward { &self.out } else { &self.inn };
        let mut seen = vec![false; self.nodes.len()];
        if banned[start] {
            return seen;
        }
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] && !banned[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Is there an s-t path through `node` that avoids the banned nodes?
    ///
    /// Positions strictly increase along arcs, so a prefix reaching `node`
    /// and a suffix leaving it can never share another node and always
    /// concatenate into a simple path.
    pub fn path_exists_through(&self, node: usize, banned: &[bool]) -> bool {
        if banned[node] {
            return false;
        }
        let fwd = self.reachable_from(self.s, banned, true);
        if !fwd[node] {
            return false;
        }
        let back = self.reachable_from(self.t, banned, false);
        back[node]
    }

    /// Does removing `banned` destroy every s-t path?
    pub fn is_vertex_cut(&self, banned: &[bool]) -> bool {
        !self.reachable_from(self.s, banned, true)[self.t]
    }

    /// Copy with every node that lies on no s-t path removed. Such nodes are
    /// never part of a minimum cut, so the min-cut value is unchanged.
    pub fn pruned(&self) -> LayeredDigraph {
        let none = vec![false; self.nodes.len()];
        let fwd = self.reachable_from(self.s, &none, true);
        let back = self.reachable_from(self.t, &none, false);
        let keep: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| fwd[i] && back[i] || i == self.s || i == self.t)
            .collect();
        let mut remap = vec![usize::MAX; self.nodes.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let nodes: Vec<LayeredNode> = keep.iter().map(|&i| self.nodes[i]).collect();
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(x, y)| remap[x] != usize::MAX && remap[y] != usize::MAX)
            .map(|&(x, y)| (remap[x], remap[y]))
            .collect();
        LayeredDigraph::assemble(
            nodes,
            arcs,
            remap[self.s],
            remap[self.t],
            self.kind,
            self.d,
            self.alpha,
        )
    }

    /// Deterministic DOT rendering; one line per node, one per arc.
    pub fn export_dot(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::from("digraph reduction {\n  rankdir=LR;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let label = match node.orig {
                NodeOrigin::Source => "s".to_string(),
                NodeOrigin::Sink => "t".to_string(),
                NodeOrigin::Vertex(v) => format!("v{v}@L{},b{}", node.level, node.beta),
            };
            let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
        }
        for &(x, y) in &self.arcs {
            let _ = writeln!(out, "  n{x} -> n{y};");
        }
        out.push_str("}\n");
        out
    }

    /// JSON dump of nodes and arc index pairs.
    pub fn export_json(&self) -> String {
        #[derive(Serialize)]
        struct Dump<'a> {
            kind: Problem,
            d: usize,
            alpha: usize,
            s: usize,
            t: usize,
            nodes: &'a [LayeredNode],
            arcs: &'a [(usize, usize)],
        }
        serde_json::to_string_pretty(&Dump {
            kind: self.kind,
            d: self.d,
            alpha: self.alpha,
            s: self.s,
            t: self.t,
            nodes: &self.nodes,
            arcs: &self.arcs,
        })
        .expect("digraph dump serializes")
    }

    fn assemble(
        nodes: Vec<LayeredNode>,
        arcs: Vec<(usize, usize)>,
        s: usize,
        t: usize,
        kind: Problem,
        d: usize,
        alpha: usize,
    ) -> LayeredDigraph {
        let mut out = vec![Vec::new(); nodes.len()];
        let mut inn = vec![Vec::new(); nodes.len()];
        for &(x, y) in &arcs {
            out[x].push(y);
            inn[y].push(x);
        }
        let mut copies: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, node) in nodes.iter().enumerate() {
            if let NodeOrigin::Vertex(v) = node.orig {
                copies.entry(v).or_default().push(i);
            }
        }
        for list in copies.values_mut() {
            list.sort_by_key(|&i| nodes[i].level);
        }
        let dg = LayeredDigraph {
            nodes,
            s,
            t,
            arcs,
            out,
            inn,
            kind,
            d,
            alpha,
            copies,
        };
        dg.debug_validate_arcs();
        dg
    }

    /// Arc arithmetic invariant: positions strictly increase, levels never
    /// decrease, and the position gap equals the level gap plus one.
    fn debug_validate_arcs(&self) {
        if cfg!(debug_assertions) {
            for &(x, y) in &self.arcs {
                let (nx, ny) = (&self.nodes[x], &self.nodes[y]);
                assert!(ny.pos > nx.pos, "arc must increase pos");
                assert!(ny.level >= nx.level, "arc must not decrease level");
                assert_eq!(ny.pos - nx.pos - 1, ny.level - nx.level, "arc arithmetic");
            }
        }
    }
}

fn build(
    members: Vec<usize>,
    qualifies: impl Fn(usize, usize) -> bool,
    ls: &LevelStructure,
    kind: Problem,
    d: usize,
) -> Result<LayeredDigraph, ReductionError> {
    let alpha = ls.alpha();
    if d < 1 || d > alpha {
        return Err(ReductionError::ThresholdOutOfRange { d, alpha });
    }

    let mut nodes = Vec::with_capacity(members.len() * d + 2);
    for level in 1..=d {
        for &v in &members {
            nodes.push(LayeredNode {
                orig: NodeOrigin::Vertex(v),
                level,
                beta: ls.beta(v),
                pos: ls.pos(v),
            });
        }
    }
    let s = nodes.len();
    nodes.push(LayeredNode {
        orig: NodeOrigin::Source,
        level: 1,
        beta: alpha,
        pos: 0,
    });
    let t = nodes.len();
    nodes.push(LayeredNode {
        orig: NodeOrigin::Sink,
        level: d,
        beta: alpha,
        pos: alpha + 1,
    });

    let mut arcs = Vec::new();
    let internal = s; // nodes 0..s are the layered copies
    for (x, nx) in nodes.iter().enumerate().take(internal) {
        for (y, ny) in nodes.iter().enumerate().take(internal) {
            if ny.pos <= nx.pos || ny.level < nx.level {
                continue;
            }
            if ny.pos - nx.pos - 1 != ny.level - nx.level {
                continue;
            }
            let (u, v) = match (nx.orig, ny.orig) {
                (NodeOrigin::Vertex(u), NodeOrigin::Vertex(v)) => (u, v),
                _ => unreachable!("internal nodes carry vertices"),
            };
            if qualifies(u, v) {
                arcs.push((x, y));
            }
        }
    }
    for (x, node) in nodes.iter().enumerate().take(internal) {
        // Source arcs skip the positions below pos(x); sink arcs the ones
        // above, with the remaining levels absorbing exactly those skips.
        if node.pos == node.level {
            arcs.push((s, x));
        }
        if node.pos + d == node.level + alpha {
            arcs.push((x, t));
        }
    }
    Ok(LayeredDigraph::assemble(nodes, arcs, s, t, kind, d, alpha))
}

/// The transversal reduction: `d` copies of the vertices in maximum
/// independent sets, arcs between max-extendable pairs.
pub fn build_transversal_digraph(
    _g: &Graph,
    _ord: &CocoOrdering,
    ls: &LevelStructure,
    dag: &NonEdgeDag,
    d: usize,
) -> Result<LayeredDigraph, ReductionError> {
    let members = ls.mis_vertices().to_vec();
    build(
        members,
        |u, v| pair_max_extendable(ls, dag, u, v),
        ls,
        Problem::Transversal,
        d,
    )
}

/// The blocker reduction: `d` copies of every vertex with beta at least
/// `alpha - d + 1`, arcs between non-adjacent pairs.
pub fn build_blocker_digraph(
    g: &Graph,
    ord: &CocoOrdering,
    ls: &LevelStructure,
    d: usize,
) -> Result<LayeredDigraph, ReductionError> {
    let alpha = ls.alpha();
    if d < 1 || d > alpha {
        return Err(ReductionError::ThresholdOutOfRange { d, alpha });
    }
    let members: Vec<usize> = ord
        .order()
        .iter()
        .copied()
        .filter(|&v| ls.beta(v) > alpha - d)
        .collect();
    build(members, |u, v| !g.has_edge(u, v), ls, Problem::Blocker, d)
}
