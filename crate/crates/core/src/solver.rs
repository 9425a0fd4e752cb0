//! End-to-end solving and solution verification.
//!
//! A minimum cut of the reduction digraph projects (with duplicate copies
//! collapsed) to a feasible solution no larger than the cut, while the cut
//! construction of [`cut_from_solution`] turns any minimal feasible solution
//! into a cut of exactly its size. Together these sandwich the projected set
//! at the optimum, which is what [`solve`] returns.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::layers::{build_levels, build_nonedge_dag, LevelStructure};
use crate::mincut::min_vertex_cut;
use crate::ordering::{compute_ordering, CocoOrdering, OrderingError};
use crate::reduction::{build_blocker_digraph, build_transversal_digraph, LayeredDigraph, Problem};

/// Outcome of one solve, in the shape of the published JSON schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub problem: Problem,
    pub n: usize,
    pub alpha: usize,
    pub d: usize,
    pub feasible: bool,
    pub min_size: Option<usize>,
    #[serde(rename = "solution")]
    pub vertices: Vec<usize>,
}

impl Solution {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("solution serializes")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutConstructionError {
    #[error(transparent)]
    Ordering(#[from] OrderingError),
    #[error("the given set is not a feasible solution")]
    NotFeasible,
    #[error("vertex {v} has no addable copy; the solution is not minimal")]
    NotMinimal { v: usize },
}

/// An s-t cut produced from a minimal solution, one layered node per
/// solution vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmOneCut {
    pub cut_nodes: Vec<usize>,
    pub minimal_solution: Vec<usize>,
}

fn resolve<'a>(
    g: &Graph,
    ord: Option<&'a CocoOrdering>,
    slot: &'a mut Option<CocoOrdering>,
) -> Result<&'a CocoOrdering, OrderingError> {
    match ord {
        Some(o) => {
            assert_eq!(o.n(), g.n(), "ordering belongs to a different graph");
            Ok(o)
        }
        None => {
            *slot = Some(compute_ordering(g)?);
            Ok(slot.as_ref().unwrap())
        }
    }
}

fn canonical_set(g: &Graph, set: &[usize]) -> Vec<usize> {
    let dedup: BTreeSet<usize> = set.iter().copied().collect();
    assert!(
        dedup.iter().all(|&v| v < g.n()),
        "solution set out of range"
    );
    dedup.into_iter().collect()
}

/// Marks every layered copy of the given vertices.
fn copies_banned(gp: &LayeredDigraph, set: &[usize]) -> Vec<bool> {
    let mut banned = vec![false; gp.nodes().len()];
    for &v in set {
        for &i in gp.copies_of(v) {
            banned[i] = true;
        }
    }
    banned
}

/// Independence number after deleting `set`, computed on the induced
/// subgraph with the inherited ordering.
fn alpha_after_removal(g: &Graph, ord: &CocoOrdering, set: &[usize]) -> usize {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !set.contains(v)).collect();
    let (sub, old_to_new) = g.induced_subgraph(&keep);
    let sub_ord = ord.restrict(&old_to_new);
    build_levels(&sub, &sub_ord).alpha()
}

/// Feasibility test bound to one already-built reduction digraph.
enum Checker<'a> {
    Transversal {
        gp: &'a LayeredDigraph,
    },
    Blocker {
        g: &'a Graph,
        ord: &'a CocoOrdering,
        target: usize,
    },
}

impl Checker<'_> {
    fn feasible(&self, set: &[usize]) -> bool {
        match self {
            Checker::Transversal { gp } => gp.is_vertex_cut(&copies_banned(gp, set)),
            Checker::Blocker { g, ord, target } => alpha_after_removal(g, ord, set) <= *target,
        }
    }
}

fn build_digraph(
    g: &Graph,
    ord: &CocoOrdering,
    ls: &LevelStructure,
    problem: Problem,
    d: usize,
) -> LayeredDigraph {
    match problem {
        Problem::Transversal => {
            let dag = build_nonedge_dag(g, ord);
            build_transversal_digraph(g, ord, ls, &dag, d)
        }
        Problem::Blocker => build_blocker_digraph(g, ord, ls, d),
    }
    .expect("threshold was range-checked by the caller")
}

/// Solves either problem to optimality. The ordering is computed when not
/// supplied; thresholds above the independence number yield an infeasible
/// answer instead of an error.
pub fn solve(
    g: &Graph,
    ord: Option<&CocoOrdering>,
    problem: Problem,
    d: usize,
) -> Result<Solution, OrderingError> {
    assert!(d >= 1, "threshold must be at least 1");
    let mut slot = None;
    let ord = resolve(g, ord, &mut slot)?;
    let ls = build_levels(g, ord);
    let alpha = ls.alpha();
    if d > alpha {
        return Ok(Solution {
            problem,
            n: g.n(),
            alpha,
            d,
            feasible: false,
            min_size: None,
            vertices: Vec::new(),
        });
    }

    let gp = build_digraph(g, ord, &ls, problem, d);
    let cut = min_vertex_cut(&gp.to_digraph(), gp.s(), gp.t())
        .expect("reduction digraphs have no direct s-t arc when d <= alpha");
    let vertices: Vec<usize> = cut
        .cut_nodes
        .iter()
        .map(|&i| gp.origin_of(i).expect("cut nodes are internal"))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    assert!(vertices.len() <= cut.size);

    let checker = match problem {
        Problem::Transversal => Checker::Transversal { gp: &gp },
        Problem::Blocker => Checker::Blocker {
            g,
            ord,
            target: alpha - d,
        },
    };
    assert!(
        checker.feasible(&vertices),
        "projected minimum cut must be feasible"
    );

    Ok(Solution {
        problem,
        n: g.n(),
        alpha,
        d,
        feasible: true,
        min_size: Some(vertices.len()),
        vertices,
    })
}

/// Is there a solution of size at most `k`?
pub fn decide(
    g: &Graph,
    ord: Option<&CocoOrdering>,
    problem: Problem,
    d: usize,
    k: usize,
) -> Result<bool, OrderingError> {
    let sol = solve(g, ord, problem, d)?;
    Ok(sol.feasible && sol.min_size.is_some_and(|m| m <= k))
}

/// Checks a claimed solution without solving.
///
/// Blockers are checked by recomputing the independence number of the
/// remaining graph under the inherited ordering; transversals by testing
/// that all layered copies of the set form an s-t cut of the transversal
/// digraph.
pub fn verify_solution(
    g: &Graph,
    ord: Option<&CocoOrdering>,
    problem: Problem,
    d: usize,
    set: &[usize],
) -> Result<bool, OrderingError> {
    assert!(d >= 1, "threshold must be at least 1");
    let set = canonical_set(g, set);
    let mut slot = None;
    let ord = resolve(g, ord, &mut slot)?;
    let ls = build_levels(g, ord);
    if d > ls.alpha() {
        return Ok(false);
    }
    Ok(match problem {
        Problem::Blocker => alpha_after_removal(g, ord, &set) <= ls.alpha() - d,
        Problem::Transversal => {
            let gp = build_digraph(g, ord, &ls, problem, d);
            gp.is_vertex_cut(&copies_banned(&gp, &set))
        }
    })
}

/// Greedily shrinks a feasible solution to an inclusion-minimal one,
/// dropping vertices in decreasing ordering position. Returns `None` when
/// the input is not feasible.
pub fn minimalize_solution(
    g: &Graph,
    ord: Option<&CocoOrdering>,
    problem: Problem,
    d: usize,
    set: &[usize],
) -> Result<Option<Vec<usize>>, OrderingError> {
    assert!(d >= 1, "threshold must be at least 1");
    let set = canonical_set(g, set);
    let mut slot = None;
    let ord = resolve(g, ord, &mut slot)?;
    let ls = build_levels(g, ord);
    if d > ls.alpha() {
        return Ok(None);
    }
    let gp = build_digraph(g, ord, &ls, problem, d);
    let checker = match problem {
        Problem::Transversal => Checker::Transversal { gp: &gp },
        Problem::Blocker => Checker::Blocker {
            g,
            ord,
            target: ls.alpha() - d,
        },
    };
    if !checker.feasible(&set) {
        return Ok(None);
    }
    let mut minimal = set;
    let mut by_rank_desc = minimal.clone();
    by_rank_desc.sort_by_key(|&v| std::cmp::Reverse(ord.rank_of(v)));
    for v in by_rank_desc {
        let without: Vec<usize> = minimal.iter().copied().filter(|&u| u != v).collect();
        if checker.feasible(&without) {
            minimal = without;
        }
    }
    Ok(Some(minimal))
}

/// Builds an s-t cut of the reduction digraph with one node per vertex of a
/// minimal solution: scan the solution in ordering order and take, for each
/// vertex, its lowest-level copy that still lies on an s-t path avoiding the
/// nodes chosen so far. Non-minimal inputs are reduced first.
pub fn cut_from_solution(
    g: &Graph,
    ord: Option<&CocoOrdering>,
    problem: Problem,
    d: usize,
    set: &[usize],
) -> Result<AlgorithmOneCut, CutConstructionError> {
    assert!(d >= 1, "threshold must be at least 1");
    let mut slot = None;
    let ord = resolve(g, ord, &mut slot)?;
    let minimal = minimalize_solution(g, Some(ord), problem, d, set)?
        .ok_or(CutConstructionError::NotFeasible)?;
    let ls = build_levels(g, ord);
    let gp = build_digraph(g, ord, &ls, problem, d);

    let mut by_rank = minimal.clone();
    by_rank.sort_by_key(|&v| ord.rank_of(v));
    let mut banned = vec![false; gp.nodes().len()];
    let mut cut_nodes = Vec::with_capacity(by_rank.len());
    for &u in &by_rank {
        let mut chosen = None;
        for &copy in gp.copies_of(u) {
            if !banned[copy] && gp.path_exists_through(copy, &banned) {
                chosen = Some(copy);
                break;
            }
        }
        match chosen {
            Some(copy) => {
                banned[copy] = true;
                cut_nodes.push(copy);
            }
            None => return Err(CutConstructionError::NotMinimal { v: u }),
        }
    }
    assert!(
        gp.is_vertex_cut(&banned),
        "constructed node set must cut s from t"
    );
    assert_eq!(cut_nodes.len(), minimal.len());
    Ok(AlgorithmOneCut {
        cut_nodes,
        minimal_solution: minimal,
    })
}

/// Clique-flavored variants via complementation: solving on the complement
/// answers the same questions about maximum cliques of `g`. The `alpha`
/// field of the result is then the clique number of `g`.
pub fn solve_clique_variant(
    g: &Graph,
    problem: Problem,
    d: usize,
) -> Result<Solution, OrderingError> {
    solve(&g.complement(), None, problem, d)
}
