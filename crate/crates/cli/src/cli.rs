//! Argument handling and subcommand dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use levelpers::{Error as ModelError, Rational, Scalar};

use crate::check::run_checks;
use crate::corpus::random_corpus;
use crate::input::parse_input;
use crate::report::{analyze, CheckRecord, ResultDocument, Sections};
use crate::svg::render_svg;
use crate::table::{bars_csv, checks_csv, numbers_csv};

/// Number of random complexes in the `check` suite.
pub const RANDOM_SUITE_SIZE: usize = 25;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "levelpers", version, about = "Level and sub-level persistence of simplicial maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sub-level bars, level bars, relevant numbers and invariant checks.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Also draw the barcodes to this SVG file.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Sub-level bars of the lower-star filtration.
    Sublevel(Common),
    /// Level bars.
    Level(Common),
    /// Relevant level persistence numbers on the full grid.
    Numbers(Common),
    /// Invariant checks on the input and on a seeded random corpus.
    Check {
        #[command(flatten)]
        common: Common,
        /// Seed of the random corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draws the level and sub-level barcodes as SVG.
    Svg(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Input document (JSON).
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Highest homology degree of the level computation; defaults to the
    /// dimension of the complex.
    #[arg(long, value_name = "N")]
    max_degree: Option<usize>,
    /// Use exact rational arithmetic instead of f64.
    #[arg(long)]
    exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Input(String),
    Check(String),
}

impl Failure {
    fn model(context: &Path, e: ModelError) -> Failure {
        // a negative count means an invariant broke, not that the input is bad
        match e {
            ModelError::Unrealizable { .. } => Failure::Check(format!("{}: {}", context.display(), e)),
            _ => Failure::Input(format!("{}: {}", context.display(), e)),
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code: 0 on success, 1 for unusable input or arguments, 2 when a check
/// fails.
pub fn run<I, A>(args: I) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let exact = match &cli.command {
        Command::Analyze { common, .. } | Command::Check { common, .. } => common.exact,
        Command::Sublevel(c) | Command::Level(c) | Command::Numbers(c) | Command::Svg(c) => c.exact,
    };
    let outcome = if exact { execute::<Rational>(&cli.command) } else { execute::<f64>(&cli.command) };
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            EXIT_INPUT
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {}", msg);
            EXIT_CHECK
        }
    }
}

/// Returns whether every reported check passed.
fn execute<T: Scalar>(command: &Command) -> Result<bool, Failure> {
    let common = match command {
        Command::Analyze { common, .. } | Command::Check { common, .. } => common,
        Command::Sublevel(c) | Command::Level(c) | Command::Numbers(c) | Command::Svg(c) => c,
    };
    let text = fs::read_to_string(&common.input)
        .map_err(|e| Failure::Input(format!("cannot read {}: {}", common.input.display(), e)))?;
    let parsed = parse_input::<T>(&text).map_err(|e| Failure::Input(format!("{}: {}", common.input.display(), e)))?;
    let f = &parsed.map;
    let analysis = analyze(f, common.max_degree).map_err(|e| Failure::model(&common.input, e))?;

    let doc = match command {
        Command::Analyze { svg, .. } => {
            let checks = run_checks(f, &analysis);
            let doc = ResultDocument::from_analysis(&analysis, Sections::ALL, Some(checks));
            if let Some(path) = svg {
                write_file(path, &render_svg(&doc))?;
            }
            doc
        }
        Command::Sublevel(_) => ResultDocument::from_analysis(&analysis, Sections { sublevel: true, ..Sections::NONE }, None),
        Command::Level(_) => ResultDocument::from_analysis(&analysis, Sections { level: true, ..Sections::NONE }, None),
        Command::Numbers(_) => ResultDocument::from_analysis(&analysis, Sections { numbers: true, ..Sections::NONE }, None),
        Command::Check { seed, .. } => {
            let mut checks = run_checks(f, &analysis);
            checks.push(random_suite::<T>(*seed));
            ResultDocument::from_analysis(&analysis, Sections::NONE, Some(checks))
        }
        Command::Svg(_) => {
            let doc = ResultDocument::from_analysis(&analysis, Sections { sublevel: true, level: true, numbers: false }, None);
            emit(common.output.as_deref(), &render_svg(&doc))?;
            return Ok(true);
        }
    };
    let body = match common.format {
        Format::Json => serde_json::to_string_pretty(&doc).map(|s| s + "\n").map_err(|e| Failure::Input(e.to_string()))?,
        Format::Csv => {
            let csv = match command {
                Command::Numbers(_) => numbers_csv(&doc),
                Command::Check { .. } => checks_csv(doc.checks.as_deref().unwrap_or_default()),
                _ => bars_csv(&doc),
            };
            csv.map_err(|e| Failure::Input(e.to_string()))?
        }
    };
    emit(common.output.as_deref(), &body)?;
    for c in doc.checks.iter().flatten().filter(|c| !c.passed) {
        eprintln!("check failed: {}: {}", c.name, c.detail);
    }
    Ok(doc.checks_passed())
}

/// Every check on a seeded random corpus, folded into one record.
fn random_suite<T: Scalar>(seed: u64) -> CheckRecord {
    let mut failures = Vec::new();
    for (k, f) in random_corpus::<T>(seed, RANDOM_SUITE_SIZE).iter().enumerate() {
        match analyze(f, None) {
            Ok(a) => failures.extend(
                run_checks(f, &a).into_iter().filter(|c| !c.passed).map(|c| format!("complex {}: {}: {}", k, c.name, c.detail)),
            ),
            Err(e) => failures.push(format!("complex {}: {}", k, e)),
        }
    }
    CheckRecord {
        name: "random_suite".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{} random complexes (seed {}), every check passes", RANDOM_SUITE_SIZE, seed)
        } else {
            failures.join("; ")
        },
    }
}

fn emit(path: Option<&Path>, body: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, body),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write to standard output: {}", e))),
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| Failure::Input(format!("cannot write {}: {}", path.display(), e)))
}
