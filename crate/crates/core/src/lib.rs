//! Minimum d-transversals and d-deletion blockers of maximum independent
//! sets in co-comparability graphs.
//!
//! Both problems reduce to minimum s-t vertex cut on a layered digraph whose
//! s-t paths enumerate exactly the independent sets a solution must hit. The
//! pipeline is: validate or compute a vertex ordering in which non-adjacency
//! is transitive ([`ordering`]), derive per-vertex extension sizes and the
//! layer partition ([`layers`]), build the reduction digraph ([`reduction`]),
//! and cut it ([`mincut`]). [`solver`] wires these together and re-verifies
//! every answer; [`oracle`] provides exponential-time ground truth for tests
//! and the `oracle-check` command.

pub mod graph;
pub mod layers;
pub mod mincut;
pub mod oracle;
pub mod ordering;
pub mod reduction;
pub mod solver;

pub use graph::{Graph, GraphError, ParseError};
pub use layers::{
    build_levels, build_nonedge_dag, pair_max_extendable, LevelStructure, NonEdgeDag,
};
pub use mincut::{min_vertex_cut, CutError, CutResult, DiGraph};
pub use ordering::{
    compute_ordering, parse_ordering, verify_ordering, CocoOrdering, OrderingError,
};
pub use reduction::{
    build_blocker_digraph, build_transversal_digraph, LayeredDigraph, LayeredNode, NodeOrigin,
    Problem, ReductionError,
};
pub use solver::{
    cut_from_solution, decide, minimalize_solution, solve, solve_clique_variant, verify_solution,
    AlgorithmOneCut, CutConstructionError, Solution,
};
