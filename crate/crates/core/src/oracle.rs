//! Exponential-time ground truth for testing.
//!
//! Everything here is a direct transcription of a definition: independent
//! sets by subset enumeration, optima by searching over all subsets, vertex
//! cuts by trying every internal subset. Size guards fail loudly instead of
//! truncating. The generator samples a random partial order and complements
//! its comparability graph, which makes the returned ordering valid by
//! construction (it is still re-verified).

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::mincut::DiGraph;
use crate::ordering::{verify_ordering, CocoOrdering};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for the brute-force oracle: {n} > {limit}")]
    TooLarge { n: usize, limit: usize },
}

const ENUM_LIMIT: usize = 24;
const MASK_LIMIT: usize = 20;
const SUBSET_LIMIT: usize = 16;
const CUT_LIMIT: usize = 18;

fn guard(n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        Err(OracleError::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

fn neighbor_masks(g: &Graph) -> Vec<u32> {
    let mut masks = vec![0u32; g.n()];
    for &(u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

/// Independence number of every induced subgraph, indexed by vertex mask.
fn alpha_by_mask(g: &Graph) -> Result<Vec<u8>, OracleError> {
    guard(g.n(), MASK_LIMIT)?;
    let nbr = neighbor_masks(g);
    let mut table = vec![0u8; 1 << g.n()];
    for mask in 1u32..(1 << g.n()) {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        let take = 1 + table[(without & !nbr[v]) as usize];
        table[mask as usize] = take.max(table[without as usize]);
    }
    Ok(table)
}

/// All independent sets of exactly the given size, in lexicographic order.
pub fn enumerate_independent_sets(g: &Graph, size: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    guard(g.n(), ENUM_LIMIT)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        g: &Graph,
        size: usize,
        next: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        if g.n() - next < size - current.len() {
            return;
        }
        for v in next..g.n() {
            if current.iter().all(|&u| !g.has_edge(u, v)) {
                current.push(v);
                rec(g, size, v + 1, current, out);
                current.pop();
            }
        }
    }
    rec(g, size, 0, &mut current, &mut out);
    Ok(out)
}

pub fn independence_number(g: &Graph) -> Result<usize, OracleError> {
    let table = alpha_by_mask(g)?;
    Ok(table[(1usize << g.n()) - 1] as usize)
}

pub fn maximum_independent_sets(g: &Graph) -> Result<Vec<Vec<usize>>, OracleError> {
    let alpha = independence_number(g)?;
    enumerate_independent_sets(g, alpha)
}

/// Size of a largest independent set containing `v`.
pub fn largest_independent_set_containing(g: &Graph, v: usize) -> Result<usize, OracleError> {
    let table = alpha_by_mask(g)?;
    let nbr = neighbor_masks(g);
    let others = ((1u32 << g.n()) - 1) & !(1 << v) & !nbr[v];
    Ok(1 + table[others as usize] as usize)
}

/// Is `set` an independent set contained in some maximum independent set?
pub fn is_max_extendable(g: &Graph, set: &[usize]) -> Result<bool, OracleError> {
    let table = alpha_by_mask(g)?;
    let nbr = neighbor_masks(g);
    let mut set_mask = 0u32;
    for &v in set {
        set_mask |= 1 << v;
    }
    for &v in set {
        if nbr[v] & set_mask != 0 {
            return Ok(false);
        }
    }
    let mut compatible = ((1u32 << g.n()) - 1) & !set_mask;
    for &v in set {
        compatible &= !nbr[v];
    }
    let alpha = table[(1usize << g.n()) - 1] as usize;
    Ok(set.len() + table[compatible as usize] as usize == alpha)
}

pub fn count_max_extendable_of_size(g: &Graph, size: usize) -> Result<usize, OracleError> {
    let mut count = 0;
    for set in enumerate_independent_sets(g, size)? {
        if is_max_extendable(g, &set)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Exact minimum d-transversal size by subset search; `None` if infeasible.
pub fn brute_transversal(g: &Graph, d: usize) -> Result<Option<usize>, OracleError> {
    guard(g.n(), SUBSET_LIMIT)?;
    let mis = maximum_independent_sets(g)?;
    let mis_masks: Vec<u32> = mis
        .iter()
        .map(|set| set.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let mut best: Option<usize> = None;
    for s_mask in 0u32..(1 << g.n()) {
        let size = s_mask.count_ones() as usize;
        if best.is_some_and(|b| b <= size) {
            continue;
        }
        if mis_masks
            .iter()
            .all(|&i| (i & s_mask).count_ones() as usize >= d)
        {
            best = Some(size);
        }
    }
    Ok(best)
}

/// Exact minimum d-deletion-blocker size by subset search; `None` if infeasible.
pub fn brute_blocker(g: &Graph, d: usize) -> Result<Option<usize>, OracleError> {
    guard(g.n(), SUBSET_LIMIT)?;
    let table = alpha_by_mask(g)?;
    let full = (1usize << g.n()) - 1;
    let alpha = table[full] as usize;
    if d > alpha {
        return Ok(None);
    }
    let target = alpha - d;
    let mut best: Option<usize> = None;
    for s_mask in 0u32..(1 << g.n()) {
        let size = s_mask.count_ones() as usize;
        if best.is_some_and(|b| b <= size) {
            continue;
        }
        if table[full & !(s_mask as usize)] as usize <= target {
            best = Some(size);
        }
    }
    Ok(best)
}

/// Exact minimum s-t vertex cut by subset enumeration; `None` when s and t
/// cannot be separated (a direct s-t arc).
pub fn brute_vertex_cut(dg: &DiGraph, s: usize, t: usize) -> Result<Option<usize>, OracleError> {
    let internal: Vec<usize> = (0..dg.n).filter(|&v| v != s && v != t).collect();
    guard(internal.len(), CUT_LIMIT)?;
    if dg.arcs.contains(&(s, t)) {
        return Ok(None);
    }
    let mut best = internal.len();
    for mask in 0u32..(1 << internal.len()) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut removed = vec![false; dg.n];
        for (i, &v) in internal.iter().enumerate() {
            if mask >> i & 1 == 1 {
                removed[v] = true;
            }
        }
        if !dg.reaches_avoiding(s, t, &removed) {
            best = size;
        }
    }
    Ok(Some(best))
}

/// Samples a co-comparability graph together with a valid ordering.
///
/// A random permutation serves as linear extension of a random partial
/// order: each order-respecting pair is related with the given probability
/// and the relation is closed transitively (by repeated relational
/// squaring). The complement of the resulting comparability graph is
/// returned with the linear extension as its ordering.
pub fn gen_cocomparability(n: usize, density: f64, seed: u64) -> (Graph, CocoOrdering) {
    assert!((0.0..=1.0).contains(&density), "density must be in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);

    // rel[i], over positions, as bitset rows.
    let words = n.div_ceil(64).max(1);
    let mut rel = vec![0u64; n * words];
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(density) {
                rel[i * words + j / 64] |= 1 << (j % 64);
            }
        }
    }
    // Transitive closure: square the boolean matrix until it stops changing.
    loop {
        let mut next = rel.clone();
        for i in 0..n {
            for j in (i + 1)..n {
                if rel[i * words + j / 64] >> (j % 64) & 1 == 1 {
                    for w in 0..words {
                        next[i * words + w] |= rel[j * words + w];
                    }
                }
            }
        }
        if next == rel {
            break;
        }
        rel = next;
    }

    let mut comparability_edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rel[i * words + j / 64] >> (j % 64) & 1 == 1 {
                comparability_edges.push((perm[i], perm[j]));
            }
        }
    }
    let comparability =
        Graph::new(n, comparability_edges).expect("sampled relation is a simple graph");
    let g = comparability.complement();
    let ord = verify_ordering(&g, &perm)
        .expect("a linear extension of the sampled order is a valid ordering");
    (g, ord)
}

/// Random DAG for cut-engine tests: node 0 is the source, `internal + 1` the
/// sink, arcs only go forward, and the direct source-sink arc is never
/// emitted so a finite cut always exists.
pub fn gen_random_dag(internal: usize, density: f64, seed: u64) -> (DiGraph, usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = internal + 2;
    let (s, t) = (0, n - 1);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if (u, v) != (s, t) && rng.random_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    (DiGraph { n, arcs }, s, t)
}

/// Everything the oracle can say about one instance.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub alpha: usize,
    pub all_mis: Vec<Vec<usize>>,
    /// Exact optimum per threshold, index `d - 1`, `None` when infeasible.
    pub best_transversal: Vec<Option<usize>>,
    pub best_blocker: Vec<Option<usize>>,
}

pub fn report(g: &Graph) -> Result<OracleReport, OracleError> {
    let alpha = independence_number(g)?;
    let all_mis = maximum_independent_sets(g)?;
    let mut best_transversal = Vec::new();
    let mut best_blocker = Vec::new();
    for d in 1..=alpha {
        best_transversal.push(brute_transversal(g, d)?);
        best_blocker.push(brute_blocker(g, d)?);
    }
    Ok(OracleReport {
        alpha,
        all_mis,
        best_transversal,
        best_blocker,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Graph {
        Graph::parse("5 4\n0 1\n1 2\n2 3\n3 4").unwrap()
    }

    fn k3() -> Graph {
        Graph::parse("3 3\n0 1\n1 2\n0 2").unwrap()
    }

    #[test]
    fn independent_sets_of_p5() {
        assert_eq!(
            enumerate_independent_sets(&p5(), 3).unwrap(),
            vec![vec![0, 2, 4]]
        );
        let pairs = enumerate_independent_sets(&p5(), 2).unwrap();
        assert_eq!(
            pairs,
            vec![
                vec![0, 2],
                vec![0, 3],
                vec![0, 4],
                vec![1, 3],
                vec![1, 4],
                vec![2, 4]
            ]
        );
        assert!(enumerate_independent_sets(&k3(), 2).unwrap().is_empty());
    }

    #[test]
    fn figure_one_optima() {
        assert_eq!(brute_transversal(&p5(), 2).unwrap(), Some(2));
        assert_eq!(brute_blocker(&p5(), 2).unwrap(), Some(3));
        assert_eq!(brute_transversal(&p5(), 1).unwrap(), Some(1));
        assert_eq!(brute_blocker(&p5(), 1).unwrap(), Some(1));
        assert_eq!(brute_blocker(&p5(), 4).unwrap(), None);
    }

    #[test]
    fn beta_and_extendability_on_p5() {
        let betas: Vec<usize> = (0..5)
            .map(|v| largest_independent_set_containing(&p5(), v).unwrap())
            .collect();
        assert_eq!(betas, vec![3, 2, 3, 2, 3]);
        assert!(is_max_extendable(&p5(), &[0, 4]).unwrap());
        assert!(!is_max_extendable(&p5(), &[1, 3]).unwrap());
        assert!(is_max_extendable(&p5(), &[0]).unwrap());
        assert!(!is_max_extendable(&p5(), &[0, 1]).unwrap());
        assert_eq!(count_max_extendable_of_size(&p5(), 2).unwrap(), 3);
    }

    #[test]
    fn vertex_cut_oracle() {
        let two_paths = DiGraph {
            n: 4,
            arcs: vec![(0, 1), (1, 3), (0, 2), (2, 3)],
        };
        assert_eq!(brute_vertex_cut(&two_paths, 0, 3).unwrap(), Some(2));
        let diamond = DiGraph {
            n: 5,
            arcs: vec![(0, 1), (1, 2), (2, 4), (1, 3), (3, 4)],
        };
        assert_eq!(brute_vertex_cut(&diamond, 0, 4).unwrap(), Some(1));
        let direct = DiGraph {
            n: 3,
            arcs: vec![(0, 2)],
        };
        assert_eq!(brute_vertex_cut(&direct, 0, 2).unwrap(), None);
    }

    #[test]
    fn generator_density_extremes() {
        let (complete, _) = gen_cocomparability(6, 0.0, 1);
        assert_eq!(complete.edge_count(), 15);
        assert_eq!(independence_number(&complete).unwrap(), 1);
        let (empty, ord) = gen_cocomparability(6, 1.0, 1);
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(independence_number(&empty).unwrap(), 6);
        assert_eq!(ord.n(), 6);
    }

    #[test]
    fn generator_is_reproducible_and_valid() {
        for seed in 0..200u64 {
            let n = 1 + (seed as usize % 9);
            let density = [0.2, 0.5, 0.8][seed as usize % 3];
            let (g1, o1) = gen_cocomparability(n, density, seed);
            let (g2, o2) = gen_cocomparability(n, density, seed);
            assert_eq!(g1, g2);
            assert_eq!(o1, o2);
            assert!(verify_ordering(&g1, o1.order()).is_ok());
        }
    }

    #[test]
    fn brute_optima_monotone_in_d() {
        for seed in 0..40u64 {
            let (g, _) = gen_cocomparability(8, 0.5, seed);
            let rep = report(&g).unwrap();
            for d in 1..rep.alpha {
                assert!(rep.best_transversal[d - 1] <= rep.best_transversal[d]);
                assert!(rep.best_blocker[d - 1] <= rep.best_blocker[d]);
            }
        }
    }

    #[test]
    fn size_guards_fail_loudly() {
        let big = Graph::new(25, []).unwrap();
        assert!(matches!(
            enumerate_independent_sets(&big, 1),
            Err(OracleError::TooLarge { .. })
        ));
        let big = Graph::new(17, []).unwrap();
        assert!(matches!(
            brute_transversal(&big, 1),
            Err(OracleError::TooLarge { .. })
        ));
        assert!(matches!(
            brute_blocker(&big, 1),
            Err(OracleError::TooLarge { .. })
        ));
        let dg = DiGraph {
            n: 21,
            arcs: vec![],
        };
        assert!(matches!(
            brute_vertex_cut(&dg, 0, 20),
            Err(OracleError::TooLarge { .. })
        ));
    }
}
