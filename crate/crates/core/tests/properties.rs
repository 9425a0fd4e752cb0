//! Randomized invariant checks.

use std::collections::HashMap;

use proptest::prelude::*;

use alphacut::graph::Graph;
use alphacut::mincut::{min_vertex_cut, DiGraph};
use alphacut::oracle;
use alphacut::ordering::verify_ordering;

/// Graphs on up to 12 vertices with an arbitrary edge subset.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..=12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |include| {
            let edges = pairs
                .iter()
                .zip(&include)
                .filter(|(_, &inc)| inc)
                .map(|(&e, _)| e)
                .collect::<Vec<_>>();
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn complement_is_involution(g in arb_graph()) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_partitions_pairs(g in arb_graph()) {
        let c = g.complement();
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn parse_serialize_parse_is_identity(g in arb_graph()) {
        let reparsed = Graph::parse(&g.to_edge_list()).unwrap();
        prop_assert_eq!(&reparsed, &g);
        prop_assert_eq!(reparsed.to_edge_list(), g.to_edge_list());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_inner_edges(
        g in arb_graph(),
        keep_bits in proptest::collection::vec(any::<bool>(), 12),
    ) {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| keep_bits[v]).collect();
        let (sub, old_to_new) = g.induced_subgraph(&keep);
        let want = g
            .edges()
            .iter()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .count();
        prop_assert_eq!(sub.edge_count(), want);
        for (u, v) in g.edges() {
            if let (Some(&a), Some(&b)) = (old_to_new.get(u), old_to_new.get(v)) {
                prop_assert!(sub.has_edge(a, b));
            }
        }
    }

    /// Every sampled instance comes with an ordering the validator accepts.
    #[test]
    fn generated_orderings_validate(n in 0usize..=12, di in 0usize..3, seed in any::<u64>()) {
        let density = [0.2, 0.5, 0.8][di];
        let (g, ord) = oracle::gen_cocomparability(n, density, seed);
        prop_assert!(verify_ordering(&g, ord.order()).is_ok());
    }

    /// Menger duality: the flow-based cut size equals the maximum number of
    /// internally vertex-disjoint s-t paths, checked by exhaustive packing.
    #[test]
    fn cut_size_equals_disjoint_path_packing(
        internal in 1usize..=7,
        di in 0usize..4,
        seed in any::<u64>(),
    ) {
        let density = [0.2, 0.4, 0.6, 0.8][di];
        let (dg, s, t) = oracle::gen_random_dag(internal, density, seed);
        let cut = min_vertex_cut(&dg, s, t).unwrap();
        prop_assert_eq!(cut.size, max_disjoint_paths(&dg, s, t));
    }
}

/// Exhaustive packing of internally vertex-disjoint s-t paths: enumerate all
/// simple paths as internal-node bitmasks, then maximize over disjoint
/// subsets with a memoized search on the available-node mask.
fn max_disjoint_paths(dg: &DiGraph, s: usize, t: usize) -> usize {
    let adj = dg.out_adjacency();
    let mut masks: Vec<u32> = Vec::new();
    let mut stack: Vec<(usize, u32)> = vec![(s, 0)];
    while let Some((node, mask)) = stack.pop() {
        for &next in &adj[node] {
            if next == t {
                masks.push(mask);
            } else if next != s && mask >> next & 1 == 0 {
                stack.push((next, mask | 1 << next));
            }
        }
    }
    masks.sort_unstable();
    masks.dedup();

    fn best(available: u32, masks: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if let Some(&b) = memo.get(&available) {
            return b;
        }
        let mut result = 0;
        for &m in masks {
            if m & !available == 0 {
                result = result.max(1 + best(available & !m, masks, memo));
            }
        }
        memo.insert(available, result);
        result
    }
    let all: u32 = (0..dg.n)
        .filter(|&v| v != s && v != t)
        .map(|v| 1 << v)
        .sum();
    best(all, &masks, &mut HashMap::new())
}
