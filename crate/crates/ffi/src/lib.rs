//! C ABI for the solver.
//!
//! Graphs and solutions are opaque handles created and destroyed by this
//! library; every fallible call returns an [`AlphacutStatus`] and writes its
//! result through an out pointer. On any non-OK status a human-readable
//! message is available from [`alphacut_last_error_message`] until the next
//! call on the same thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use alphacut::reduction::Problem;
use alphacut::solver::{self, Solution};
use alphacut::Graph;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphacutStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The edge-list text failed to parse.
    ParseError = 3,
    /// The graph (or, in clique mode, its complement) is not a
    /// co-comparability graph.
    NotCocomparability = 4,
    /// The threshold d must be at least 1.
    InvalidThreshold = 5,
    /// A vertex id was out of range for the graph.
    VertexOutOfRange = 6,
    /// Unexpected internal failure.
    Internal = 7,
}

/// Which quantity to attack.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphacutProblem {
    Transversal = 0,
    Blocker = 1,
}

impl From<AlphacutProblem> for Problem {
    fn from(p: AlphacutProblem) -> Problem {
        match p {
            AlphacutProblem::Transversal => Problem::Transversal,
            AlphacutProblem::Blocker => Problem::Blocker,
        }
    }
}

/// Opaque graph handle.
pub struct AlphacutGraph {
    inner: Graph,
}

/// Opaque solution handle.
pub struct AlphacutSolution {
    inner: Solution,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(status: AlphacutStatus, message: &str) -> AlphacutStatus {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
    status
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn alphacut_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses edge-list text ("n m" header, one "u v" line per edge) into a new
/// graph handle. The handle must be released with [`alphacut_graph_free`].
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out_graph` to writable
/// storage for one pointer; both stay borrowed only for the call.
#[no_mangle]
pub unsafe extern "C" fn alphacut_graph_parse(
    text: *const c_char,
    out_graph: *mut *mut AlphacutGraph,
) -> AlphacutStatus {
    if text.is_null() || out_graph.is_null() {
        return set_error(AlphacutStatus::NullArgument, "null argument");
    }
    let text = unsafe { CStr::from_ptr(text) };
    let Ok(text) = text.to_str() else {
        return set_error(AlphacutStatus::InvalidUtf8, "input is not valid UTF-8");
    };
    match Graph::parse(text) {
        Ok(g) => {
            clear_error();
            unsafe { *out_graph = Box::into_raw(Box::new(AlphacutGraph { inner: g })) };
            AlphacutStatus::Ok
        }
        Err(e) => set_error(AlphacutStatus::ParseError, &e.to_string()),
    }
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `graph` must be null or a handle from [`alphacut_graph_parse`] that has
/// not been freed; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn alphacut_graph_free(graph: *mut AlphacutGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from [`alphacut_graph_parse`].
#[no_mangle]
pub unsafe extern "C" fn alphacut_graph_vertex_count(graph: *const AlphacutGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.inner.n())
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from [`alphacut_graph_parse`].
#[no_mangle]
pub unsafe extern "C" fn alphacut_graph_edge_count(graph: *const AlphacutGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.inner.edge_count())
}

fn solve_impl(
    graph: *const AlphacutGraph,
    problem: AlphacutProblem,
    d: usize,
    clique: bool,
    out_solution: *mut *mut AlphacutSolution,
) -> AlphacutStatus {
    if graph.is_null() || out_solution.is_null() {
        return set_error(AlphacutStatus::NullArgument, "null argument");
    }
    if d == 0 {
        return set_error(
            AlphacutStatus::InvalidThreshold,
            "threshold d must be at least 1",
        );
    }
    let g = &unsafe { &*graph }.inner;
    let result = catch_unwind(AssertUnwindSafe(|| {
        if clique {
            solver::solve_clique_variant(g, problem.into(), d)
        } else {
            solver::solve(g, None, problem.into(), d)
        }
    }));
    match result {
        Ok(Ok(solution)) => {
            clear_error();
            unsafe {
                *out_solution = Box::into_raw(Box::new(AlphacutSolution { inner: solution }))
            };
            AlphacutStatus::Ok
        }
        Ok(Err(e)) => set_error(AlphacutStatus::NotCocomparability, &e.to_string()),
        Err(_) => set_error(AlphacutStatus::Internal, "internal solver failure"),
    }
}

/// Solves for a minimum d-transversal or d-deletion blocker. Thresholds
/// above the independence number yield an infeasible solution handle, not an
/// error. The handle must be released with [`alphacut_solution_free`].
///
/// # Safety
/// `graph` must be null or a live graph handle and `out_solution` null or
/// writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solve(
    graph: *const AlphacutGraph,
    problem: AlphacutProblem,
    d: usize,
    out_solution: *mut *mut AlphacutSolution,
) -> AlphacutStatus {
    solve_impl(graph, problem, d, false, out_solution)
}

/// Like [`alphacut_solve`] but on the complement, answering the maximum
/// clique variants; the solution's alpha is then the clique number.
///
/// # Safety
/// Same contract as [`alphacut_solve`].
#[no_mangle]
pub unsafe extern "C" fn alphacut_solve_clique(
    graph: *const AlphacutGraph,
    problem: AlphacutProblem,
    d: usize,
    out_solution: *mut *mut AlphacutSolution,
) -> AlphacutStatus {
    solve_impl(graph, problem, d, true, out_solution)
}

/// Checks a claimed solution. Writes the verdict to `out_valid`.
///
/// # Safety
/// `graph` must be a live graph handle or null, `vertices` must point to
/// `vertex_count` readable ids (null only when the count is 0), and
/// `out_valid` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn alphacut_verify(
    graph: *const AlphacutGraph,
    problem: AlphacutProblem,
    d: usize,
    vertices: *const usize,
    vertex_count: usize,
    out_valid: *mut bool,
) -> AlphacutStatus {
    if graph.is_null() || out_valid.is_null() || (vertices.is_null() && vertex_count > 0) {
        return set_error(AlphacutStatus::NullArgument, "null argument");
    }
    if d == 0 {
        return set_error(
            AlphacutStatus::InvalidThreshold,
            "threshold d must be at least 1",
        );
    }
    let g = &unsafe { &*graph }.inner;
    let set: &[usize] = if vertex_count == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(vertices, vertex_count) }
    };
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return set_error(
            AlphacutStatus::VertexOutOfRange,
            &format!("vertex {v} out of range (n = {})", g.n()),
        );
    }
    let result = catch_unwind(AssertUnwindSafe(|| {
        solver::verify_solution(g, None, problem.into(), d, set)
    }));
    match result {
        Ok(Ok(valid)) => {
            clear_error();
            unsafe { *out_valid = valid };
            AlphacutStatus::Ok
        }
        Ok(Err(e)) => set_error(AlphacutStatus::NotCocomparability, &e.to_string()),
        Err(_) => set_error(AlphacutStatus::Internal, "internal verifier failure"),
    }
}

/// Releases a solution handle. Null is ignored.
///
/// # Safety
/// `solution` must be null or an unfreed handle from a solve call; it must
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solution_free(solution: *mut AlphacutSolution) {
    if !solution.is_null() {
        drop(unsafe { Box::from_raw(solution) });
    }
}

/// False when no solution exists for the requested threshold.
///
/// # Safety
/// `solution` must be null or a live handle from a solve call.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solution_feasible(solution: *const AlphacutSolution) -> bool {
    unsafe { solution.as_ref() }.is_some_and(|s| s.inner.feasible)
}

/// Independence number of the solved graph (clique number in clique mode).
///
/// # Safety
/// `solution` must be null or a live handle from a solve call.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solution_alpha(solution: *const AlphacutSolution) -> usize {
    unsafe { solution.as_ref() }.map_or(0, |s| s.inner.alpha)
}

/// Optimal size; 0 when infeasible, so check feasibility first.
///
/// # Safety
/// `solution` must be null or a live handle from a solve call.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solution_min_size(solution: *const AlphacutSolution) -> usize {
    unsafe { solution.as_ref() }
        .and_then(|s| s.inner.min_size)
        .unwrap_or(0)
}

/// Number of vertices in the optimal set.
///
/// # Safety
/// `solution` must be null or a live handle from a solve call.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solution_vertex_count(
    solution: *const AlphacutSolution,
) -> usize {
    unsafe { solution.as_ref() }.map_or(0, |s| s.inner.vertices.len())
}

/// Copies up to `capacity` solution vertices (sorted, 0-based) into `buffer`
/// and returns how many were written. Call with the count from
/// [`alphacut_solution_vertex_count`] to get all of them.
///
/// # Safety
/// `solution` must be null or a live handle, and `buffer` must have room
/// for `capacity` values unless it is null.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solution_vertices(
    solution: *const AlphacutSolution,
    buffer: *mut usize,
    capacity: usize,
) -> usize {
    let Some(sol) = (unsafe { solution.as_ref() }) else {
        return 0;
    };
    if buffer.is_null() {
        return 0;
    }
    let count = sol.inner.vertices.len().min(capacity);
    let out = unsafe { std::slice::from_raw_parts_mut(buffer, count) };
    out.copy_from_slice(&sol.inner.vertices[..count]);
    count
}

/// Serializes the solution as one JSON object. The returned string must be
/// released with [`alphacut_string_free`]; null on a null handle.
///
/// # Safety
/// `solution` must be null or a live handle from a solve call.
#[no_mangle]
pub unsafe extern "C" fn alphacut_solution_to_json(
    solution: *const AlphacutSolution,
) -> *mut c_char {
    let Some(sol) = (unsafe { solution.as_ref() }) else {
        return ptr::null_mut();
    };
    match CString::new(sol.inner.to_json()) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn alphacut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P5: &str = "5 4\n0 1\n1 2\n2 3\n3 4\n";
    const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";

    fn parse(text: &str) -> *mut AlphacutGraph {
        let c = CString::new(text).unwrap();
        let mut graph: *mut AlphacutGraph = ptr::null_mut();
        assert_eq!(
            unsafe { alphacut_graph_parse(c.as_ptr(), &mut graph) },
            AlphacutStatus::Ok
        );
        assert!(!graph.is_null());
        graph
    }

    #[test]
    fn parse_solve_inspect_free() {
        unsafe {
            let graph = parse(P5);
            assert_eq!(alphacut_graph_vertex_count(graph), 5);
            assert_eq!(alphacut_graph_edge_count(graph), 4);

            let mut solution: *mut AlphacutSolution = ptr::null_mut();
            let status = alphacut_solve(graph, AlphacutProblem::Blocker, 2, &mut solution);
            assert_eq!(status, AlphacutStatus::Ok);
            assert!(alphacut_solution_feasible(solution));
            assert_eq!(alphacut_solution_alpha(solution), 3);
            assert_eq!(alphacut_solution_min_size(solution), 3);

            let count = alphacut_solution_vertex_count(solution);
            assert_eq!(count, 3);
            let mut buffer = vec![0usize; count];
            assert_eq!(
                alphacut_solution_vertices(solution, buffer.as_mut_ptr(), count),
                count
            );
            assert!(buffer.windows(2).all(|w| w[0] < w[1]));

            let mut valid = false;
            let status = alphacut_verify(
                graph,
                AlphacutProblem::Blocker,
                2,
                buffer.as_ptr(),
                buffer.len(),
                &mut valid,
            );
            assert_eq!(status, AlphacutStatus::Ok);
            assert!(valid);

            let json = alphacut_solution_to_json(solution);
            assert!(!json.is_null());
            let text = CStr::from_ptr(json).to_str().unwrap().to_string();
            assert!(text.contains("\"min_size\":3"), "{text}");
            alphacut_string_free(json);

            alphacut_solution_free(solution);
            alphacut_graph_free(graph);
        }
    }

    #[test]
    fn infeasible_threshold_is_a_solution_not_an_error() {
        unsafe {
            let graph = parse(P5);
            let mut solution: *mut AlphacutSolution = ptr::null_mut();
            assert_eq!(
                alphacut_solve(graph, AlphacutProblem::Transversal, 9, &mut solution),
                AlphacutStatus::Ok
            );
            assert!(!alphacut_solution_feasible(solution));
            assert_eq!(alphacut_solution_min_size(solution), 0);
            alphacut_solution_free(solution);
            alphacut_graph_free(graph);
        }
    }

    #[test]
    fn error_paths_set_messages() {
        unsafe {
            let mut graph: *mut AlphacutGraph = ptr::null_mut();
            assert_eq!(
                alphacut_graph_parse(ptr::null(), &mut graph),
                AlphacutStatus::NullArgument
            );

            let bad = CString::new("2 1\n0 7\n").unwrap();
            assert_eq!(
                alphacut_graph_parse(bad.as_ptr(), &mut graph),
                AlphacutStatus::ParseError
            );
            let msg = CStr::from_ptr(alphacut_last_error_message());
            assert!(msg.to_str().unwrap().contains("line 2"));

            let c5 = parse(C5);
            let mut solution: *mut AlphacutSolution = ptr::null_mut();
            assert_eq!(
                alphacut_solve(c5, AlphacutProblem::Blocker, 1, &mut solution),
                AlphacutStatus::NotCocomparability
            );
            assert_eq!(
                alphacut_solve(c5, AlphacutProblem::Blocker, 0, &mut solution),
                AlphacutStatus::InvalidThreshold
            );
            alphacut_graph_free(c5);

            let p5 = parse(P5);
            let mut valid = false;
            let too_big = [9usize];
            assert_eq!(
                alphacut_verify(
                    p5,
                    AlphacutProblem::Blocker,
                    1,
                    too_big.as_ptr(),
                    1,
                    &mut valid
                ),
                AlphacutStatus::VertexOutOfRange
            );
            alphacut_graph_free(p5);
        }
    }

    #[test]
    fn clique_variant_reports_clique_number() {
        unsafe {
            let graph = parse("3 3\n0 1\n1 2\n0 2\n");
            let mut solution: *mut AlphacutSolution = ptr::null_mut();
            assert_eq!(
                alphacut_solve_clique(graph, AlphacutProblem::Blocker, 1, &mut solution),
                AlphacutStatus::Ok
            );
            assert_eq!(alphacut_solution_alpha(solution), 3);
            assert_eq!(alphacut_solution_min_size(solution), 1);
            alphacut_solution_free(solution);
            alphacut_graph_free(graph);
        }
    }

    #[test]
    fn free_functions_ignore_null() {
        unsafe {
            alphacut_graph_free(ptr::null_mut());
            alphacut_solution_free(ptr::null_mut());
            alphacut_string_free(ptr::null_mut());
        }
    }
}
