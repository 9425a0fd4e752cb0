//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for negative decision answers (`decide`,
//! `verify`, `oracle-check` mismatches), 2 for input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use alphacut::graph::Graph;
use alphacut::layers::{build_levels, build_nonedge_dag};
use alphacut::ordering::{compute_ordering, parse_ordering, verify_ordering, CocoOrdering};
use alphacut::reduction::{build_blocker_digraph, build_transversal_digraph, Problem};
use alphacut::solver::{decide, solve, verify_solution, Solution};
use alphacut::{oracle, OrderingError};

#[derive(Parser)]
#[command(
    name = "alphacut",
    version,
    about = "Minimum d-transversals and d-deletion blockers of maximum independent sets in co-comparability graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Graph in edge-list format ("n m" header, one "u v" line per edge).
    #[arg(long)]
    input: PathBuf,
    /// Optional ordering file (one line, a permutation of the vertex ids).
    /// Computed from scratch when absent.
    #[arg(long)]
    ordering: Option<PathBuf>,
    /// Work on the complement: answers then concern maximum cliques of the
    /// input, and a supplied ordering must belong to the complement.
    #[arg(long)]
    clique: bool,
}

#[derive(Args)]
struct ProblemArgs {
    /// Which quantity to attack.
    #[arg(long, value_enum)]
    problem: ProblemArg,
    /// Threshold d.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ProblemArg {
    Transversal,
    Blocker,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Transversal => Problem::Transversal,
            ProblemArg::Blocker => Problem::Blocker,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a minimum solution.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        problem: ProblemArgs,
        /// Emit the result as one JSON object.
        #[arg(long)]
        json: bool,
        /// Also write the reduction digraph in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide whether a solution of size at most k exists (exit 1 if not).
    Decide {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        problem: ProblemArgs,
        /// Size budget k.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check a claimed solution (exit 1 if it is not one).
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        problem: ProblemArgs,
        /// File with the claimed vertex set, whitespace-separated ids.
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a random co-comparability graph on standard output.
    Gen {
        #[arg(long)]
        n: usize,
        /// Probability of relating each order-respecting vertex pair.
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check the solver against brute force on a small instance
    /// (exit 1 on any mismatch).
    OracleCheck {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Check a single threshold instead of every feasible one.
        #[arg(long)]
        d: Option<u64>,
    },
    /// Export the reduction digraph (DOT by default, --json for node/arc
    /// records) without solving.
    Export {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        problem: ProblemArgs,
        /// Write DOT here instead of standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Dump nodes and arcs as JSON on standard output instead of DOT.
        #[arg(long)]
        json: bool,
    },
}

/// Input-level failures all map to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_instance(args: &InstanceArgs) -> Result<(Graph, CocoOrdering), InputError> {
    let parsed = Graph::parse(&read_file(&args.input)?)?;
    let g = if args.clique {
        parsed.complement()
    } else {
        parsed
    };
    let ord = match &args.ordering {
        Some(path) => {
            let perm = parse_ordering(&read_file(path)?)?;
            verify_ordering(&g, &perm)?
        }
        None => compute_ordering(&g)?,
    };
    Ok((g, ord))
}

fn print_solution(sol: &Solution, json: bool) {
    if json {
        println!("{}", sol.to_json());
        return;
    }
    println!("problem: {}", sol.problem);
    println!("n: {}", sol.n);
    println!("alpha: {}", sol.alpha);
    println!("d: {}", sol.d);
    println!("feasible: {}", sol.feasible);
    match sol.min_size {
        Some(m) => println!("min_size: {m}"),
        None => println!("min_size: -"),
    }
    let ids: Vec<String> = sol.vertices.iter().map(|v| v.to_string()).collect();
    println!("solution: {}", ids.join(" "));
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Solve {
            instance,
            problem,
            json,
            dot,
        } => {
            let (g, ord) = load_instance(&instance)?;
            let d = problem.d as usize;
            let kind: Problem = problem.problem.into();
            if let Some(path) = dot {
                let ls = build_levels(&g, &ord);
                if d <= ls.alpha() {
                    let gp = match kind {
                        Problem::Transversal => {
                            let dag = build_nonedge_dag(&g, &ord);
                            build_transversal_digraph(&g, &ord, &ls, &dag, d)?
                        }
                        Problem::Blocker => build_blocker_digraph(&g, &ord, &ls, d)?,
                    };
                    fs::write(&path, gp.export_dot())
                        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
                }
            }
            let sol = solve(&g, Some(&ord), kind, d).map_err(ordering_failure)?;
            print_solution(&sol, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Decide {
            instance,
            problem,
            k,
            json,
        } => {
            let (g, ord) = load_instance(&instance)?;
            let kind: Problem = problem.problem.into();
            let answer = decide(&g, Some(&ord), kind, problem.d as usize, k as usize)
                .map_err(ordering_failure)?;
            if json {
                println!("{{\"answer\": {answer}, \"k\": {k}}}");
            } else {
                println!("{}", if answer { "yes" } else { "no" });
            }
            Ok(if answer {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            instance,
            problem,
            solution,
            json,
        } => {
            let (g, ord) = load_instance(&instance)?;
            let set = parse_solution_file(&read_file(&solution)?, g.n())?;
            let kind: Problem = problem.problem.into();
            let valid = verify_solution(&g, Some(&ord), kind, problem.d as usize, &set)
                .map_err(ordering_failure)?;
            if json {
                println!("{{\"valid\": {valid}}}");
            } else {
                println!("{}", if valid { "valid" } else { "invalid" });
            }
            Ok(if valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen { n, density, seed } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(InputError("density must be in [0, 1]".into()));
            }
            let (g, _) = oracle::gen_cocomparability(n, density, seed);
            print!("{}", g.to_edge_list());
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleCheck { instance, d } => {
            let (g, ord) = load_instance(&instance)?;
            let alpha = build_levels(&g, &ord).alpha();
            let thresholds: Vec<usize> = match d {
                Some(d) => vec![d as usize],
                None => (1..=alpha).collect(),
            };
            let mut ok = true;
            for d in thresholds {
                for kind in [Problem::Transversal, Problem::Blocker] {
                    let brute = match kind {
                        Problem::Transversal => oracle::brute_transversal(&g, d)?,
                        Problem::Blocker => oracle::brute_blocker(&g, d)?,
                    };
                    let sol = solve(&g, Some(&ord), kind, d).map_err(ordering_failure)?;
                    let agree = sol.min_size == brute;
                    ok &= agree;
                    println!(
                        "d={d} {kind}: solver={} brute={} {}",
                        display_opt(sol.min_size),
                        display_opt(brute),
                        if agree { "ok" } else { "MISMATCH" }
                    );
                }
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Export {
            instance,
            problem,
            dot,
            json,
        } => {
            let (g, ord) = load_instance(&instance)?;
            let ls = build_levels(&g, &ord);
            let kind: Problem = problem.problem.into();
            let gp = match kind {
                Problem::Transversal => {
                    let dag = build_nonedge_dag(&g, &ord);
                    build_transversal_digraph(&g, &ord, &ls, &dag, problem.d as usize)?
                }
                Problem::Blocker => build_blocker_digraph(&g, &ord, &ls, problem.d as usize)?,
            };
            if json {
                println!("{}", gp.export_json());
            } else if let Some(path) = dot {
                fs::write(&path, gp.export_dot())
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            } else {
                print!("{}", gp.export_dot());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_solution_file(text: &str, n: usize) -> Result<Vec<usize>, InputError> {
    let mut set = Vec::new();
    for token in text.split_whitespace() {
        let v: usize = token
            .parse()
            .map_err(|_| InputError(format!("solution file: {token:?} is not a vertex id")))?;
        if v >= n {
            return Err(InputError(format!(
                "solution file: vertex {v} out of range (n = {n})"
            )));
        }
        set.push(v);
    }
    Ok(set)
}

fn display_opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn ordering_failure(e: OrderingError) -> InputError {
    InputError(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
