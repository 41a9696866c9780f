//! Command-line interface: argument parsing and subcommand dispatch.
//!
//! The binary exposes three subcommands:
//!
//! * `rank` — read a decision problem (JSON or CSV), aggregate each
//!   alternative, and print the ranking as a table or JSON.
//! * `score` — print score, accuracy, and certainty of one number given as
//!   `"t+,i+,f+,t-,i-,f-"`.
//! * `setop` — apply `union`, `intersection`, or `complement` to sets read
//!   from JSON files.
//!
//! Exit codes: 0 on success, 1 for usage errors (bad flags, wrong operand
//! shape), 2 for data errors (unreadable files, malformed documents, values
//! out of range). Results go to stdout, diagnostics to stderr.
//!
//! [`run`] takes the argument list and both streams explicitly so tests can
//! drive the full interface in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::aggregate::AggregationOp;
use crate::bnn::Bnn;
use crate::io::{
    parse_problem_csv, parse_problem_json, parse_set_json, render_report, render_set_json,
    ReportStyle,
};
use crate::mcdm::DecisionProblem;
use crate::set::BnsSet;

#[derive(Parser)]
#[command(
    name = "bnsdm",
    version,
    about = "Bipolar neutrosophic decision-making: rank alternatives, score numbers, combine sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the alternatives of a decision problem
    Rank {
        /// Problem file, JSON or CSV (detected by extension, else sniffed)
        #[arg(long)]
        input: PathBuf,
        /// Aggregation operator
        #[arg(long, value_enum, default_value_t = OperatorArg::Avg)]
        operator: OperatorArg,
        /// Output style
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        output: OutputArg,
        /// Decimal places in the table (JSON is always full precision)
        #[arg(long, default_value_t = 3)]
        precision: usize,
        /// Rescale the weights to sum 1 instead of requiring it
        #[arg(long)]
        normalize_weights: bool,
    },
    /// Score a single number given as "t+,i+,f+,t-,i-,f-"
    Score {
        /// The six components, comma-separated
        #[arg(long)]
        bnn: String,
    },
    /// Combine sets: union, intersection, or complement
    Setop {
        /// Operation to apply
        #[arg(value_enum)]
        op: SetOpArg,
        /// First (or only) set file, JSON
        #[arg(long)]
        a: PathBuf,
        /// Second set file; required for union and intersection
        #[arg(long)]
        b: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorArg {
    /// Weighted average
    Avg,
    /// Weighted geometric mean
    Geo,
}

impl From<OperatorArg> for AggregationOp {
    fn from(arg: OperatorArg) -> Self {
        match arg {
            OperatorArg::Avg => AggregationOp::Average,
            OperatorArg::Geo => AggregationOp::Geometric,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetOpArg {
    Union,
    Intersection,
    Complement,
}

impl SetOpArg {
    fn name(self) -> &'static str {
        match self {
            SetOpArg::Union => "union",
            SetOpArg::Intersection => "intersection",
            SetOpArg::Complement => "complement",
        }
    }
}

const SETOP_SYNOPSIS: &str =
    "usage: bnsdm setop <union|intersection|complement> --a FILE [--b FILE]";

/// Parses `args` (the full argv, program name included), runs the selected
/// subcommand, and returns the process exit code. Results are written to
/// `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match cli.command {
        Command::Rank {
            input,
            operator,
            output,
            precision,
            normalize_weights,
        } => run_rank(
            &input,
            operator,
            output,
            precision,
            normalize_weights,
            out,
            err,
        ),
        Command::Score { bnn } => run_score(&bnn, out, err),
        Command::Setop { op, a, b } => run_setop(op, &a, b.as_deref(), out, err),
    }
}

fn run_rank(
    input: &Path,
    operator: OperatorArg,
    output: OutputArg,
    precision: usize,
    normalize_weights: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let problem = match load_problem(input, normalize_weights) {
        Ok(p) => p,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return 2;
        }
    };
    let report = problem.rank(operator.into());
    let style = match output {
        OutputArg::Table => ReportStyle::Table,
        OutputArg::Json => ReportStyle::Json,
    };
    let _ = write!(out, "{}", render_report(&report, style, precision));
    0
}

fn load_problem(path: &Path, normalize_weights: bool) -> Result<DecisionProblem, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let result = if looks_like_json(path, &bytes) {
        parse_problem_json(&bytes, normalize_weights)
    } else {
        parse_problem_csv(&bytes, normalize_weights)
    };
    result.map_err(|e| format!("{}: {e}", path.display()))
}

/// Chooses between the JSON and CSV parsers: the file extension decides when
/// it is `.json` or `.csv` (any case); otherwise a document whose first
/// non-whitespace byte is `{` is treated as JSON.
fn looks_like_json(path: &Path, bytes: &[u8]) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => true,
        Some(ext) if ext.eq_ignore_ascii_case("csv") => false,
        _ => bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{'),
    }
}

fn run_score(tuple: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parts: Vec<&str> = tuple.split(',').collect();
    if parts.len() != 6 {
        let _ = writeln!(
            err,
            "error: --bnn expects 6 comma-separated components \"t+,i+,f+,t-,i-,f-\", found {}",
            parts.len()
        );
        return 2;
    }
    let mut components = [0.0; 6];
    for (i, part) in parts.iter().enumerate() {
        components[i] = match part.trim().parse::<f64>() {
            Ok(v) => v,
            Err(_) => {
                let _ = writeln!(
                    err,
                    "error: component {} is not a number: {:?}",
                    i + 1,
                    part.trim()
                );
                return 2;
            }
        };
    }
    let [tp, ip, fp, tn, in_, fn_] = components;
    let value = match Bnn::new(tp, ip, fp, tn, in_, fn_) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let _ = writeln!(out, "score {:.6}", value.score());
    let _ = writeln!(out, "accuracy {:.6}", value.accuracy());
    let _ = writeln!(out, "certainty {:.6}", value.certainty());
    0
}

fn run_setop(
    op: SetOpArg,
    a: &Path,
    b: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match (op, b) {
        (SetOpArg::Complement, Some(_)) => {
            let _ = writeln!(err, "error: complement takes a single set; drop --b");
            let _ = writeln!(err, "{SETOP_SYNOPSIS}");
            return 1;
        }
        (SetOpArg::Union | SetOpArg::Intersection, None) => {
            let _ = writeln!(err, "error: {} requires two sets; pass --b FILE", op.name());
            let _ = writeln!(err, "{SETOP_SYNOPSIS}");
            return 1;
        }
        _ => {}
    }
    let set_a = match load_set(a) {
        Ok(s) => s,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return 2;
        }
    };
    let result = match op {
        SetOpArg::Complement => Ok(set_a.complement()),
        SetOpArg::Union | SetOpArg::Intersection => {
            let path = b.expect("checked above");
            match load_set(path) {
                Ok(set_b) => match op {
                    SetOpArg::Union => set_a.union(&set_b),
                    _ => set_a.intersection(&set_b),
                },
                Err(message) => {
                    let _ = writeln!(err, "error: {message}");
                    return 2;
                }
            }
        }
    };
    match result {
        Ok(set) => {
            let _ = write!(out, "{}", render_set_json(&set));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load_set(path: &Path) -> Result<BnsSet, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_set_json(&bytes).map_err(|e| format!("{}: {e}", path.display()))
}
