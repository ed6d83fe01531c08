//! Command-line surface: solve, verify, construct, check, bench.
//!
//! Exit codes: 0 success (or valid labeling), 2 invalid labeling from
//! `verify`, 3 solver budget exhausted, 64 usage errors, 1 refuted claims
//! from `check`. The `SRDOM_NODE_BUDGET` environment variable caps the
//! number of search nodes the solver may explore.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use srdom::families::{
    construct_fan, construct_friendship, construct_join_cycles, construct_wheel, ClaimKind,
    Construction,
};
use srdom::graph6::{parse_graph6, write_graph6};
use srdom::records::{parse_labels, verification_line, LabelingRecord};
use srdom::suite::{
    check_constructions, check_formulas, check_negative_neighbour_suite, check_structural, run_all,
    CheckStatus, ClaimCheck, SuiteConfig,
};
use srdom::{solve_exact, verify, FamilySpec, Graph, SolveOptions, SolverError};

const EXIT_INVALID: i32 = 2;
const EXIT_BUDGET: i32 = 3;
const EXIT_USAGE: i32 = 64;

const NODE_BUDGET_ENV: &str = "SRDOM_NODE_BUDGET";

#[derive(Parser)]
#[command(
    name = "srdom",
    about = "Signed Roman domination: exact solving, verification, and family constructions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute gamma and an optimal labeling for a graph6 string or a family
    Solve {
        /// graph6 line, optionally with the >>graph6<< header
        graph6: Option<String>,
        /// family kind: path|cycle|complete|empty|matching|wheel|fan|friendship|join-cycles
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// explore independent subtrees in parallel (any optimal witness)
        #[arg(long)]
        parallel: bool,
    },
    /// Check a labeling against both SRDF conditions
    Verify {
        /// graph6 line
        graph6: String,
        /// comma-separated labels in vertex order, e.g. 2,-1,1
        #[arg(long, allow_hyphen_values = true)]
        labels: String,
    },
    /// Emit a known labeling for wheel, fan, friendship, or join-cycles
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run claim checks and print one record per claim
    Check {
        /// all|formulas|constructions|lemma36|structural
        #[arg(long, default_value = "all")]
        suite: String,
        /// largest solver order / enumeration length attempted
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        /// seed for the random corpora
        #[arg(long, default_value_t = 1729)]
        seed: u64,
    },
    /// Time the solver over a family range
    Bench {
        /// currently join-cycles (solves C_k v C_k)
        #[arg(long)]
        family: String,
        /// inclusive range A..B of k
        #[arg(long)]
        range: String,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn usage(message: impl AsRef<str>) -> i32 {
    eprintln!("error: {}", message.as_ref());
    EXIT_USAGE
}

/// Writes one line to stdout, exiting quietly if the pipe closed.
fn emit(line: impl AsRef<str>) {
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{}", line.as_ref()).is_err() {
        std::process::exit(0);
    }
}

fn family_spec(family: &str, n: Option<usize>, m: Option<usize>) -> Result<FamilySpec, String> {
    let need_n = || n.ok_or_else(|| format!("family {family} requires --n"));
    let need_m = || m.ok_or_else(|| format!("family {family} requires --m"));
    let spec = match family {
        "path" => FamilySpec::Path { n: need_n()? },
        "cycle" => FamilySpec::Cycle { n: need_n()? },
        "complete" => FamilySpec::Complete { n: need_n()? },
        "empty" => FamilySpec::Empty { n: need_n()? },
        "matching" => FamilySpec::MatchingCopies { m: need_m()? },
        "wheel" => FamilySpec::Wheel { n: need_n()? },
        "fan" => FamilySpec::Fan { n: need_n()? },
        "friendship" => FamilySpec::Friendship { m: need_m()? },
        "join-cycles" => FamilySpec::JoinOfCycles {
            m: need_m()?,
            n: need_n()?,
        },
        other => return Err(format!("unknown family {other:?}")),
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn node_budget_from_env() -> Result<Option<u64>, String> {
    match std::env::var(NODE_BUDGET_ENV) {
        Err(_) => Ok(None),
        Ok(raw) => raw
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("{NODE_BUDGET_ENV} must be a nonnegative integer, got {raw:?}")),
    }
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Solve {
            graph6,
            family,
            n,
            m,
            parallel,
        } => cmd_solve(graph6, family, n, m, parallel),
        Command::Verify { graph6, labels } => cmd_verify(&graph6, &labels),
        Command::Construct { family, n, m } => cmd_construct(&family, n, m),
        Command::Check {
            suite,
            max_order,
            seed,
        } => cmd_check(&suite, max_order, seed),
        Command::Bench { family, range } => cmd_bench(&family, &range),
    }
}

fn resolve_graph(
    graph6: Option<&str>,
    family: Option<&str>,
    n: Option<usize>,
    m: Option<usize>,
) -> Result<(Graph, Option<String>), String> {
    match (graph6, family) {
        (Some(_), Some(_)) => Err("give either a graph6 string or --family, not both".into()),
        (None, None) => Err("give a graph6 string or --family".into()),
        (Some(text), None) => {
            let g = parse_graph6(text.trim()).map_err(|e| e.to_string())?;
            Ok((g, None))
        }
        (None, Some(kind)) => {
            let spec = family_spec(kind, n, m)?;
            let g = spec.generate().map_err(|e| e.to_string())?;
            Ok((g, Some(spec.to_string())))
        }
    }
}

fn cmd_solve(
    graph6: Option<String>,
    family: Option<String>,
    n: Option<usize>,
    m: Option<usize>,
    parallel: bool,
) -> i32 {
    let (graph, family_desc) = match resolve_graph(graph6.as_deref(), family.as_deref(), n, m) {
        Ok(pair) => pair,
        Err(message) => return usage(message),
    };
    let mut opts = SolveOptions {
        deterministic: !parallel,
        ..SolveOptions::default()
    };
    match node_budget_from_env() {
        Ok(budget) => opts.node_budget = budget,
        Err(message) => return usage(message),
    }
    match solve_exact(&graph, &opts) {
        Ok(result) => {
            let record = LabelingRecord::derive(
                &graph,
                result.witness.clone(),
                family_desc,
                Some(result.gamma),
                format!("solver/{}", result.method.as_str()),
            )
            .expect("solver witness always serializes");
            emit(record.to_line());
            emit(format!(
                "record=solve-stats method={} nodes={}",
                result.method.as_str(),
                result.nodes_explored
            ));
            0
        }
        Err(SolverError::BudgetExhausted {
            lower_bound,
            upper_bound,
            incumbent,
            nodes_explored,
        }) => {
            let record = LabelingRecord::derive(
                &graph,
                incumbent,
                family_desc,
                None,
                "solver/budget-exhausted",
            )
            .expect("incumbent always serializes");
            emit(record.to_line());
            emit(format!(
                "record=solve-aborted lower-bound={lower_bound} upper-bound={upper_bound} nodes={nodes_explored}"
            ));
            EXIT_BUDGET
        }
        Err(SolverError::EmptyGraph) => usage("cannot solve the order-0 graph"),
    }
}

fn cmd_verify(graph6: &str, labels: &str) -> i32 {
    let graph = match parse_graph6(graph6.trim()) {
        Ok(g) => g,
        Err(e) => return usage(e.to_string()),
    };
    let labeling = match parse_labels(labels.trim()) {
        Ok(f) => f,
        Err(e) => return usage(e.to_string()),
    };
    let report = match verify(&graph, &labeling) {
        Ok(report) => report,
        Err(e) => return usage(e.to_string()),
    };
    let canonical = write_graph6(&graph).expect("parsed graph re-encodes");
    emit(verification_line(&canonical, &labeling, &report));
    if report.valid {
        0
    } else {
        EXIT_INVALID
    }
}

fn cmd_construct(family: &str, n: Option<usize>, m: Option<usize>) -> i32 {
    let built: Result<Construction, String> = match family {
        "wheel" => match n {
            Some(n) => construct_wheel(n).map_err(|e| e.to_string()),
            None => Err("family wheel requires --n".into()),
        },
        "fan" => match n {
            Some(n) => construct_fan(n).map_err(|e| e.to_string()),
            None => Err("family fan requires --n".into()),
        },
        "friendship" => match m {
            Some(m) => construct_friendship(m).map_err(|e| e.to_string()),
            None => Err("family friendship requires --m".into()),
        },
        "join-cycles" => match (m, n) {
            (Some(m), Some(n)) => construct_join_cycles(m, n).map_err(|e| e.to_string()),
            _ => Err("family join-cycles requires --m and --n".into()),
        },
        other => Err(format!("no construction for family {other:?}")),
    };
    let construction = match built {
        Ok(c) => c,
        Err(message) => return usage(message),
    };
    let spec_desc = match family {
        "wheel" => format!("wheel(n={})", n.unwrap()),
        "fan" => format!("fan(n={})", n.unwrap()),
        "friendship" => format!("friendship(m={})", m.unwrap()),
        _ => format!("join-cycles(m={},n={})", m.unwrap(), n.unwrap()),
    };
    let gamma = match construction.claim_kind {
        ClaimKind::ExactValue => Some(construction.claimed_weight),
        ClaimKind::UpperBound => None,
    };
    let record = LabelingRecord::derive(
        &construction.graph,
        construction.labeling.clone(),
        Some(spec_desc),
        gamma,
        format!(
            "construction/{}/{}",
            construction.source,
            construction.claim_kind.as_str()
        ),
    )
    .expect("gated constructions always serialize");
    emit(record.to_line());
    0
}

fn cmd_check(suite: &str, max_order: usize, seed: u64) -> i32 {
    let cfg = SuiteConfig { seed, max_order };
    let checks: Vec<ClaimCheck> = match suite {
        "all" => run_all(&cfg),
        "formulas" => check_formulas(&cfg),
        "constructions" => check_constructions(&cfg),
        "lemma36" => check_negative_neighbour_suite(&cfg),
        "structural" => check_structural(&cfg),
        other => return usage(format!("unknown suite {other:?}")),
    };
    let mut confirmed = 0usize;
    let mut refuted = 0usize;
    let mut skipped = 0usize;
    for check in &checks {
        emit(check.to_line());
        match check.status {
            CheckStatus::Confirmed => confirmed += 1,
            CheckStatus::Refuted => refuted += 1,
            CheckStatus::SkippedScale => skipped += 1,
        }
    }
    emit(format!(
        "record=check-summary suite={suite} total={} confirmed={confirmed} refuted={refuted} skipped-scale={skipped} seed={seed}",
        checks.len()
    ));
    if refuted == 0 {
        0
    } else {
        1
    }
}

fn cmd_bench(family: &str, range: &str) -> i32 {
    if family != "join-cycles" {
        return usage(format!(
            "bench supports --family join-cycles, got {family:?}"
        ));
    }
    let Some((start, end)) = range.split_once("..") else {
        return usage(format!("range must look like A..B, got {range:?}"));
    };
    let (Ok(start), Ok(end)) = (start.parse::<usize>(), end.parse::<usize>()) else {
        return usage(format!(
            "range must look like A..B with integers, got {range:?}"
        ));
    };
    if start < 3 || end < start {
        return usage("range requires 3 <= A <= B");
    }
    let mut opts = SolveOptions::default();
    match node_budget_from_env() {
        Ok(budget) => opts.node_budget = budget,
        Err(message) => return usage(message),
    }
    let mut any_aborted = false;
    for k in start..=end {
        let g = FamilySpec::JoinOfCycles { m: k, n: k }
            .generate()
            .expect("k >= 3");
        match solve_exact(&g, &opts) {
            Ok(result) => emit(format!(
                "record=bench family=join-cycles m={k} n={k} order={} gamma={} method={} nodes={} elapsed-ms={}",
                g.order(),
                result.gamma,
                result.method.as_str(),
                result.nodes_explored,
                result.elapsed.as_millis()
            )),
            Err(SolverError::BudgetExhausted {
                lower_bound,
                upper_bound,
                nodes_explored,
                ..
            }) => {
                any_aborted = true;
                emit(format!(
                    "record=bench family=join-cycles m={k} n={k} order={} status=budget-exhausted lower-bound={lower_bound} upper-bound={upper_bound} nodes={nodes_explored}",
                    g.order()
                ));
            }
            Err(SolverError::EmptyGraph) => unreachable!("k >= 3"),
        }
    }
    if any_aborted {
        EXIT_BUDGET
    } else {
        0
    }
}
