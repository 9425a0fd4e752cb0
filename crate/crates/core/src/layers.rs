//! Per-vertex extension sizes, positions, and the layer partition.
//!
//! For a co-comparability graph with a validated ordering, one increasing
//! sweep computes for every vertex the size of a largest independent set
//! entirely before it and non-adjacent to it (`leftext`), and a decreasing
//! sweep the symmetric `rightext`. From these:
//!
//! * `beta(v) = leftext(v) + rightext(v) + 1` is the size of a largest
//!   independent set containing `v`,
//! * `pos(v) = leftext(v) + 1` is the (well-defined) position of `v` inside
//!   every such set,
//! * `alpha = max beta` is the independence number,
//! * `layer(p, b)` groups the vertices with `pos = p` and `beta = b`.
//!
//! [`NonEdgeDag`] additionally tabulates, for every non-adjacent pair
//! `u \u{227a} v`, the maximum number of vertices on a chain from `u` to `v`
//! whose consecutive elements are non-adjacent. Non-adjacency is transitive
//! along the ordering, so every such chain is an independent set, which makes
//! [`pair_max_extendable`] a constant-time table lookup.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::Graph;
use crate::ordering::CocoOrdering;

#[derive(Debug, Clone)]
pub struct LevelStructure {
    alpha: usize,
    leftext: Vec<usize>,
    rightext: Vec<usize>,
    /// (pos, beta) -> member vertices in ordering order.
    layers: BTreeMap<(usize, usize), Vec<usize>>,
    /// Vertices contained in some maximum independent set, in ordering order.
    mis_vertices: Vec<usize>,
}

impl LevelStructure {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn leftext(&self, v: usize) -> usize {
        self.leftext[v]
    }

    pub fn rightext(&self, v: usize) -> usize {
        self.rightext[v]
    }

    /// Size of a largest independent set containing `v`.
    pub fn beta(&self, v: usize) -> usize {
        self.leftext[v] + self.rightext[v] + 1
    }

    /// Position of `v` in every largest independent set containing it.
    pub fn pos(&self, v: usize) -> usize {
        self.leftext[v] + 1
    }

    /// Members of the layer with position `p` among vertices of beta `b`.
    pub fn layer(&self, p: usize, b: usize) -> &[usize] {
        self.layers.get(&(p, b)).map_or(&[], Vec::as_slice)
    }

    pub fn layers(&self) -> impl Iterator<Item = (usize, usize, &[usize])> {
        self.layers
            .iter()
            .map(|(&(p, b), vs)| (p, b, vs.as_slice()))
    }

    /// Vertices contained in some maximum independent set, in ordering order.
    pub fn mis_vertices(&self) -> &[usize] {
        &self.mis_vertices
    }

    /// One line per vertex, `v pos beta leftext rightext`, sorted by the
    /// ordering.
    pub fn debug_dump(&self, ord: &CocoOrdering) -> String {
        let mut out = String::new();
        for &v in ord.order() {
            let _ = writeln!(
                out,
                "{v} {} {} {} {}",
                self.pos(v),
                self.beta(v),
                self.leftext[v],
                self.rightext[v]
            );
        }
        out
    }
}

/// Computes extension sizes and the layer partition in O(n^2).
pub fn build_levels(g: &Graph, ord: &CocoOrdering) -> LevelStructure {
    let n = g.n();
    debug_assert_eq!(ord.n(), n, "ordering must belong to this graph");
    let mut leftext = vec![0usize; n];
    for i in 0..n {
        let v = ord.order()[i];
        for j in 0..i {
            let u = ord.order()[j];
            if !g.has_edge(u, v) {
                leftext[v] = leftext[v].max(leftext[u] + 1);
            }
        }
    }
    let mut rightext = vec![0usize; n];
    for i in (0..n).rev() {
        let v = ord.order()[i];
        for j in (i + 1)..n {
            let u = ord.order()[j];
            if !g.has_edge(u, v) {
                rightext[v] = rightext[v].max(rightext[u] + 1);
            }
        }
    }

    let alpha = (0..n)
        .map(|v| leftext[v] + rightext[v] + 1)
        .max()
        .unwrap_or(0);
    let mut layers: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut mis_vertices = Vec::new();
    for &v in ord.order() {
        let beta = leftext[v] + rightext[v] + 1;
        let pos = leftext[v] + 1;
        debug_assert!(1 <= pos && pos <= beta && beta <= alpha);
        layers.entry((pos, beta)).or_default().push(v);
        if beta == alpha {
            mis_vertices.push(v);
        }
    }
    LevelStructure {
        alpha,
        leftext,
        rightext,
        layers,
        mis_vertices,
    }
}

/// Longest-chain table over the DAG whose arcs are the non-edges oriented by
/// the ordering.
#[derive(Debug, Clone)]
pub struct NonEdgeDag {
    n: usize,
    /// `longest[u*n + v]`, 0 when no chain exists (adjacent pairs, pairs
    /// against the ordering, u = v).
    longest: Vec<usize>,
}

impl NonEdgeDag {
    /// Maximum number of vertices on a chain `u = w_1 < ... < w_k = v` with
    /// consecutive pairs non-adjacent; 0 when there is none. At least 2
    /// whenever `u` precedes `v` and they are non-adjacent.
    pub fn longest_chain(&self, u: usize, v: usize) -> usize {
        self.longest[u * self.n + v]
    }
}

/// All-pairs longest chains by one DAG sweep per source, O(n * non-edges).
pub fn build_nonedge_dag(g: &Graph, ord: &CocoOrdering) -> NonEdgeDag {
    let n = g.n();
    debug_assert_eq!(ord.n(), n, "ordering must belong to this graph");
    // Earlier non-neighbors of each vertex, in ordering order.
    let mut nonadj_before: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let v = ord.order()[i];
        for j in 0..i {
            let u = ord.order()[j];
            if !g.has_edge(u, v) {
                nonadj_before[v].push(u);
            }
        }
    }

    let mut longest = vec![0usize; n * n];
    let mut best = vec![0usize; n];
    for i in 0..n {
        let u = ord.order()[i];
        best.fill(0);
        best[u] = 1;
        for j in (i + 1)..n {
            let w = ord.order()[j];
            let reach = nonadj_before[w].iter().map(|&x| best[x]).max().unwrap_or(0);
            if reach > 0 {
                best[w] = reach + 1;
                longest[u * n + w] = best[w];
            }
        }
    }
    NonEdgeDag { n, longest }
}

/// Does some maximum independent set contain both `u` and `v`?
///
/// For distinct non-adjacent vertices the largest independent set through
/// both is a maximum left extension of the earlier one, a longest chain
/// between them, and a maximum right extension of the later one; the pair is
/// max-extendable exactly when those add up to alpha. Argument order is
/// irrelevant; for `u = v` this asks whether `v` lies in some maximum
/// independent set.
pub fn pair_max_extendable(ls: &LevelStructure, dag: &NonEdgeDag, u: usize, v: usize) -> bool {
    if u == v {
        return ls.beta(u) == ls.alpha();
    }
    // A positive chain length identifies the pair as non-adjacent and
    // orients it along the ordering.
    let (a, b) = if dag.longest_chain(u, v) > 0 {
        (u, v)
    } else {
        (v, u)
    };
    let chain = dag.longest_chain(a, b);
    chain > 0 && ls.leftext(a) + chain + ls.rightext(b) == ls.alpha()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::ordering::verify_ordering;

    fn p5() -> (Graph, CocoOrdering) {
        let g = Graph::parse("5 4\n0 1\n1 2\n2 3\n3 4").unwrap();
        let ord = verify_ordering(&g, &[0, 1, 2, 3, 4]).unwrap();
        (g, ord)
    }

    #[test]
    fn p5_level_structure() {
        let (g, ord) = p5();
        let ls = build_levels(&g, &ord);
        assert_eq!(ls.alpha(), 3);
        assert_eq!(
            (0..5).map(|v| ls.leftext(v)).collect::<Vec<_>>(),
            vec![0, 0, 1, 1, 2]
        );
        assert_eq!(
            (0..5).map(|v| ls.rightext(v)).collect::<Vec<_>>(),
            vec![2, 1, 1, 0, 0]
        );
        assert_eq!(
            (0..5).map(|v| ls.pos(v)).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 3]
        );
        assert_eq!(
            (0..5).map(|v| ls.beta(v)).collect::<Vec<_>>(),
            vec![3, 2, 3, 2, 3]
        );
        assert_eq!(ls.mis_vertices(), &[0, 2, 4]);
        assert_eq!(ls.layer(1, 2), &[1]);
        assert_eq!(ls.layer(2, 2), &[3]);
        assert_eq!(ls.layer(1, 3), &[0]);
        assert_eq!(ls.layer(3, 3), &[4]);
    }

    #[test]
    fn k3_level_structure() {
        let g = Graph::parse("3 3\n0 1\n1 2\n0 2").unwrap();
        let ord = verify_ordering(&g, &[0, 1, 2]).unwrap();
        let ls = build_levels(&g, &ord);
        assert_eq!(ls.alpha(), 1);
        assert_eq!(ls.layer(1, 1), &[0, 1, 2]);
    }

    #[test]
    fn empty_graph_levels() {
        let g = Graph::new(4, []).unwrap();
        let ord = verify_ordering(&g, &[0, 1, 2, 3]).unwrap();
        let ls = build_levels(&g, &ord);
        assert_eq!(ls.alpha(), 4);
        for v in 0..4 {
            assert_eq!(ls.pos(v), ord.rank_of(v) + 1);
            assert_eq!(ls.layer(v + 1, 4), &[v]);
        }
    }

    #[test]
    fn zero_and_one_vertex() {
        let g = Graph::new(0, []).unwrap();
        let ord = verify_ordering(&g, &[]).unwrap();
        assert_eq!(build_levels(&g, &ord).alpha(), 0);
        let g = Graph::new(1, []).unwrap();
        let ord = verify_ordering(&g, &[0]).unwrap();
        let ls = build_levels(&g, &ord);
        assert_eq!(ls.alpha(), 1);
        assert_eq!(ls.pos(0), 1);
    }

    #[test]
    fn p5_nonedge_chains() {
        let (g, ord) = p5();
        let dag = build_nonedge_dag(&g, &ord);
        assert_eq!(dag.longest_chain(0, 4), 3); // 0, 2, 4
        assert_eq!(dag.longest_chain(0, 2), 2);
        assert_eq!(dag.longest_chain(2, 0), 0);
        assert_eq!(dag.longest_chain(0, 1), 0); // adjacent
    }

    #[test]
    fn k3_has_no_chains() {
        let g = Graph::parse("3 3\n0 1\n1 2\n0 2").unwrap();
        let ord = verify_ordering(&g, &[0, 1, 2]).unwrap();
        let dag = build_nonedge_dag(&g, &ord);
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(dag.longest_chain(u, v), 0);
            }
        }
    }

    #[test]
    fn p5_pair_extendability() {
        let (g, ord) = p5();
        let ls = build_levels(&g, &ord);
        let dag = build_nonedge_dag(&g, &ord);
        assert!(pair_max_extendable(&ls, &dag, 0, 4));
        assert!(pair_max_extendable(&ls, &dag, 4, 0));
        assert!(!pair_max_extendable(&ls, &dag, 1, 3));
        assert!(pair_max_extendable(&ls, &dag, 0, 0));
        assert!(!pair_max_extendable(&ls, &dag, 1, 1));
    }

    /// Exhaustive chain enumeration, independent of the DP.
    fn brute_longest_chain(g: &Graph, ord: &CocoOrdering, u: usize, v: usize) -> usize {
        fn extend(g: &Graph, ord: &CocoOrdering, last: usize, v: usize, len: usize) -> usize {
            if last == v {
                return len;
            }
            let mut best = 0;
            for w in 0..g.n() {
                if ord.precedes(last, w) && !ord.precedes(v, w) && w != last && !g.has_edge(last, w)
                {
                    best = best.max(extend(g, ord, w, v, len + 1));
                }
            }
            best
        }
        if u == v || !ord.precedes(u, v) {
            return 0;
        }
        extend(g, ord, u, v, 1)
    }

    #[test]
    fn chain_table_matches_enumeration() {
        for seed in 0..60u64 {
            let n = 2 + (seed as usize % 6);
            let (g, ord) = oracle::gen_cocomparability(n, 0.5, seed);
            let dag = build_nonedge_dag(&g, &ord);
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(
                        dag.longest_chain(u, v),
                        brute_longest_chain(&g, &ord, u, v),
                        "seed {seed} pair ({u},{v})"
                    );
                }
            }
        }
    }

    #[test]
    fn beta_pos_and_extendability_match_oracle() {
        for seed in 0..120u64 {
            let n = 1 + (seed as usize % 10);
            let density = [0.2, 0.5, 0.8][seed as usize % 3];
            let (g, ord) = oracle::gen_cocomparability(n, density, seed);
            let ls = build_levels(&g, &ord);
            let dag = build_nonedge_dag(&g, &ord);
            assert_eq!(ls.alpha(), oracle::independence_number(&g).unwrap());
            for v in 0..n {
                let beta = oracle::largest_independent_set_containing(&g, v).unwrap();
                assert_eq!(ls.beta(v), beta, "seed {seed} vertex {v}");
                // The position of v is the same in every largest independent
                // set containing it.
                for set in oracle::enumerate_independent_sets(&g, beta).unwrap() {
                    if !set.contains(&v) {
                        continue;
                    }
                    let mut sorted = set.clone();
                    sorted.sort_by_key(|&u| ord.rank_of(u));
                    let idx = sorted.iter().position(|&u| u == v).unwrap();
                    assert_eq!(idx + 1, ls.pos(v), "seed {seed} vertex {v} set {set:?}");
                }
            }
            for u in 0..n {
                for v in 0..n {
                    let expected = if u == v {
                        oracle::is_max_extendable(&g, &[u]).unwrap()
                    } else {
                        oracle::is_max_extendable(&g, &[u, v]).unwrap()
                    };
                    assert_eq!(
                        pair_max_extendable(&ls, &dag, u, v),
                        expected,
                        "seed {seed} pair ({u},{v})"
                    );
                }
            }
        }
    }

    #[test]
    fn ordering_and_position_agree_on_nonedges() {
        for seed in 0..60u64 {
            let n = 2 + (seed as usize % 9);
            let (g, ord) = oracle::gen_cocomparability(n, 0.5, seed);
            let ls = build_levels(&g, &ord);
            for u in 0..n {
                for v in 0..n {
                    if u != v && !g.has_edge(u, v) {
                        assert_eq!(
                            ls.pos(u) < ls.pos(v),
                            ord.precedes(u, v),
                            "seed {seed} pair ({u},{v})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn top_layers_are_cliques() {
        for seed in 0..60u64 {
            let n = 1 + (seed as usize % 10);
            let (g, ord) = oracle::gen_cocomparability(n, 0.5, seed);
            let ls = build_levels(&g, &ord);
            for p in 1..=ls.alpha() {
                let members = ls.layer(p, ls.alpha());
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        assert!(g.has_edge(u, v), "seed {seed}: layer ({p}) not a clique");
                    }
                }
            }
        }
    }

    #[test]
    fn debug_dump_format() {
        let (g, ord) = p5();
        let ls = build_levels(&g, &ord);
        let dump = ls.debug_dump(&ord);
        assert_eq!(dump.lines().next().unwrap(), "0 1 3 0 2");
        assert_eq!(dump.lines().count(), 5);
    }
}
