//! `latsize`: lattice width, lattice sizes, area bounds and minimal polygons
//! from the command line.
//!
//! Exit codes: 0 success, 1 malformed input or flags, 2 verification
//! failure, 3 resource limit exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latsize::text::{format_polygon, parse_polygon};
use latsize::{
    canonical_form, check_bounds, enumerate_classes, equivalent, generate_minimal, invariants,
    oracle_ls, verify_classification, ConvexEnumerator, ConvexPolygon, Target,
};
use serde_json::json;

/// `println!` that ignores a closed stdout, so piping into `head` is quiet.
macro_rules! emit {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "latsize",
    version,
    about = "Exact lattice width and lattice size of plane convex polygons"
)]
struct Cli {
    /// Worker threads for `enumerate` and `corpus-check` (default: all cores).
    #[arg(long, global = true, env = "LATSIZE_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Width, both lattice sizes, area, reduced basis and certificates as JSON.
    Invariants { file: PathBuf },
    /// Lattice sizes by exhaustive search, compared with the fast path.
    Oracle {
        file: PathBuf,
        /// Only this target; both when omitted.
        #[arg(long, value_enum)]
        target: Option<TargetArg>,
    },
    /// Slacks of the four area bounds and matching equality families.
    VerifyBounds { file: PathBuf },
    /// Canonical representative of the lattice-equivalence class.
    Canonical { file: PathBuf },
    /// Whether two lattice polygons are lattice-equivalent.
    Equivalent { first: PathBuf, second: PathBuf },
    /// Convex lattice polygons with vertices in [0,n]^2, one per line.
    Enumerate {
        #[arg(long)]
        n: i64,
        /// One canonical representative per equivalence class.
        #[arg(long)]
        classes: bool,
        /// Include points and segments.
        #[arg(long)]
        degenerate: bool,
        /// Sort the output.
        #[arg(long)]
        sorted: bool,
    },
    /// Minimal polygons with square lattice size h.
    Minimal {
        #[arg(long)]
        h: i64,
        #[arg(long, value_enum)]
        mode: MinimalMode,
    },
    /// Oracle agreement, area bounds and classification over [0,n]^2.
    CorpusCheck {
        #[arg(long)]
        n: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Square,
    Simplex,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Square => Target::Square,
            TargetArg::Simplex => Target::Simplex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MinimalMode {
    Generate,
    Verify,
}

enum Failure {
    Input(String),
    Verification(String),
    Resource(String),
}

impl From<latsize::Error> for Failure {
    fn from(e: latsize::Error) -> Self {
        match e {
            latsize::Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_polygon(path: &Path) -> Result<ConvexPolygon, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_polygon(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Pretty JSON with object keys sorted.
fn print_json(value: impl serde::Serialize) {
    let value = serde_json::to_value(value).expect("reports serialize");
    emit!(
        "{}",
        serde_json::to_string_pretty(&value).expect("values serialize")
    );
}

fn fmt_q(q: &latsize::Rational) -> String {
    latsize::rational::format_rational(q)
}

fn run_oracle(file: &Path, target: Option<TargetArg>) -> Outcome {
    let p = read_polygon(file)?;
    let report = invariants(&p);
    let targets = match target {
        Some(t) => vec![Target::from(t)],
        None => vec![Target::Square, Target::Simplex],
    };
    let mut out = serde_json::Map::new();
    let mut disagree = Vec::new();
    for t in targets {
        let oracle = oracle_ls(&p, t)?;
        let fast = match t {
            Target::Square => report.ls_square,
            Target::Simplex => report.ls_simplex,
        };
        if oracle != fast {
            disagree.push(format!(
                "{t}: oracle {} vs fast path {}",
                fmt_q(&oracle),
                fmt_q(&fast)
            ));
        }
        out.insert(
            t.to_string(),
            json!({ "oracle": fmt_q(&oracle), "fast": fmt_q(&fast), "agree": oracle == fast }),
        );
    }
    print_json(out);
    if disagree.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(disagree.join("; ")))
    }
}

fn run_verify_bounds(file: &Path) -> Outcome {
    let p = read_polygon(file)?;
    let report = check_bounds(&p)?;
    print_json(&report);
    let violations = report.violations();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(violations.join("; ")))
    }
}

fn run_enumerate(n: i64, classes: bool, degenerate: bool, sorted: bool) -> Outcome {
    if classes {
        for p in enumerate_classes(n, degenerate)? {
            emit!("{p}");
        }
        return Ok(());
    }
    let enumerator = ConvexEnumerator::new(n, degenerate)?;
    if sorted {
        let mut all = enumerator.collect_vec();
        all.sort();
        let mut out = std::io::stdout().lock();
        for p in all {
            if writeln!(out, "{p}").is_err() {
                break;
            }
        }
    } else {
        enumerator.par_for_each(|p| {
            let _ = writeln!(std::io::stdout().lock(), "{p}");
        });
    }
    Ok(())
}

fn run_minimal(h: i64, mode: MinimalMode) -> Outcome {
    match mode {
        MinimalMode::Generate => {
            for class in generate_minimal(h)? {
                emit!("{}\t{}", class.family, class.polygon);
            }
            Ok(())
        }
        MinimalMode::Verify => {
            let report = verify_classification(h)?;
            emit!("{report}");
            if report.matches() {
                Ok(())
            } else {
                for p in &report.missing_from_generator {
                    eprintln!("missing from generator: {p}");
                }
                for p in &report.not_found_by_search {
                    eprintln!("not confirmed by search: {p}");
                }
                Err(Failure::Verification(format!(
                    "classification mismatch for h={h}"
                )))
            }
        }
    }
}

#[derive(Default)]
struct CorpusTally {
    polygons: usize,
    oracle_failures: Vec<String>,
    bound_failures: Vec<String>,
}

impl CorpusTally {
    fn merge(mut self, other: CorpusTally) -> CorpusTally {
        self.polygons += other.polygons;
        self.oracle_failures.extend(other.oracle_failures);
        self.bound_failures.extend(other.bound_failures);
        self
    }
}

fn run_corpus_check(n: i64) -> Outcome {
    let enumerator = ConvexEnumerator::new(n, false)?;
    let tally = enumerator.par_fold(
        CorpusTally::default,
        |t, p| {
            t.polygons += 1;
            let r = invariants(&p);
            for (target, fast) in [
                (Target::Square, r.ls_square),
                (Target::Simplex, r.ls_simplex),
            ] {
                let oracle = oracle_ls(&p, target).expect("two-dimensional polygon");
                if oracle != fast {
                    t.oracle_failures.push(format!(
                        "{p}: {target} oracle {} vs fast path {}",
                        fmt_q(&oracle),
                        fmt_q(&fast)
                    ));
                }
            }
            let violations = check_bounds(&p)
                .expect("two-dimensional polygon")
                .violations();
            if !violations.is_empty() {
                t.bound_failures
                    .push(format!("{p}: {}", violations.join("; ")));
            }
        },
        CorpusTally::merge,
    );
    let mut failed = false;
    emit!("polygons: {}", tally.polygons);
    emit!("oracle disagreements: {}", tally.oracle_failures.len());
    emit!("bound violations: {}", tally.bound_failures.len());
    for line in tally.oracle_failures.iter().chain(&tally.bound_failures) {
        eprintln!("{line}");
        failed = true;
    }
    for h in 1..=n {
        let report = verify_classification(h)?;
        emit!("{report}");
        if !report.matches() {
            failed = true;
        }
    }
    if failed {
        Err(Failure::Verification(format!(
            "corpus check over [0,{n}]^2 failed"
        )))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Outcome {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Input("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    match cli.command {
        Command::Invariants { file } => {
            print_json(invariants(&read_polygon(&file)?));
            Ok(())
        }
        Command::Oracle { file, target } => run_oracle(&file, target),
        Command::VerifyBounds { file } => run_verify_bounds(&file),
        Command::Canonical { file } => {
            let _ = write!(
                std::io::stdout().lock(),
                "{}",
                format_polygon(&canonical_form(&read_polygon(&file)?)?)
            );
            Ok(())
        }
        Command::Equivalent { first, second } => {
            emit!(
                "{}",
                equivalent(&read_polygon(&first)?, &read_polygon(&second)?)?
            );
            Ok(())
        }
        Command::Enumerate {
            n,
            classes,
            degenerate,
            sorted,
        } => run_enumerate(n, classes, degenerate, sorted),
        Command::Minimal { h, mode } => run_minimal(h, mode),
        Command::CorpusCheck { n } => run_corpus_check(n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
