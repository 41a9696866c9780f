//! File formats and report rendering.
//!
//! Decision problems are read from JSON or a simple CSV dialect; sets are
//! read from JSON. Every parser has a matching renderer and the pair is an
//! exact round trip: components are written with enough digits to
//! reproduce the same double-precision values bit for bit.
//!
//! # JSON problem schema
//!
//! ```json
//! {
//!   "alternatives": ["A1", "A2"],
//!   "criteria": ["C1", "C2"],
//!   "weights": [0.5, 0.5],
//!   "matrix": [[[0.5, 0.7, 0.2, -0.7, -0.3, -0.6], …], …]
//! }
//! ```
//!
//! Each cell is a 6-tuple in the fixed order `[t+, i+, f+, t-, i-, f-]`.
//!
//! # CSV problem dialect
//!
//! ```csv
//! ,C1,C2
//! #weights,0.5,0.5
//! A1,0.5|0.7|0.2|-0.7|-0.3|-0.6,0.4|0.4|0.5|-0.7|-0.8|-0.4
//! ```
//!
//! The header row lists the criteria (first field ignored), the mandatory
//! `#weights` row carries one weight per criterion, and each data row is an
//! alternative label followed by one cell per criterion with the six
//! components joined by `|`. Cells keep `,` as the column separator so
//! ordinary CSV tooling still splits the file correctly. There is no
//! quoting: labels must not contain commas, pipes, or line breaks. Numbers
//! use the `.` decimal point regardless of locale.
//!
//! # Set schema
//!
//! ```json
//! {"universe": ["x1"], "membership": {"x1": [0.5, 0.3, 0.1, -0.6, -0.4, -0.01]}}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bnn::format_truncated;
use crate::mcdm::{DecisionProblem, ProblemError, RankingReport, RawProblem};
use crate::set::{BnsSet, SetError};

/// Errors raised while parsing or rendering documents.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    /// The document structure itself is broken; the message carries the
    /// position when one is known.
    #[error("malformed document: {0}")]
    Malformed(String),
    /// A matrix cell had the wrong number of components.
    #[error("cell ({alternative}, {criterion}): expected 6 components, found {found}")]
    TupleArity {
        alternative: String,
        criterion: String,
        found: usize,
    },
    /// A CSV cell had the wrong number of `|`-separated components.
    #[error("line {line}, column {column}: expected 6 components joined by '|', found {found}")]
    CsvTupleArity {
        line: usize,
        column: usize,
        found: usize,
    },
    /// A set membership entry had the wrong number of components.
    #[error("membership for {label:?}: expected 6 components, found {found}")]
    SetTupleArity { label: String, found: usize },
    /// A label cannot be represented in the CSV dialect.
    #[error("label {0:?} cannot be written as CSV (no commas, pipes, '#' prefix, or line breaks)")]
    UnsupportedLabel(String),
    /// Problem-level validation failed after parsing.
    #[error(transparent)]
    Problem(#[from] ProblemError),
    /// Set-level validation failed after parsing.
    #[error(transparent)]
    Set(#[from] SetError),
}

#[derive(Serialize, Deserialize)]
struct ProblemDoc {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    weights: Vec<f64>,
    matrix: Vec<Vec<Vec<f64>>>,
}

#[derive(Serialize, Deserialize)]
struct SetDoc {
    universe: Vec<String>,
    membership: BTreeMap<String, Vec<f64>>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    operator: &'a str,
    ordering: String,
    alternatives: Vec<ReportRowDoc>,
}

#[derive(Serialize)]
struct ReportRowDoc {
    label: String,
    aggregate: [f64; 6],
    score: f64,
    accuracy: f64,
    certainty: f64,
    rank: usize,
}

/// Parses a JSON problem document (schema in the module docs) and validates
/// it. `normalize_weights` rescales the weights to sum 1 instead of
/// requiring it.
pub fn parse_problem_json(
    bytes: &[u8],
    normalize_weights: bool,
) -> Result<DecisionProblem, ParseError> {
    let doc: ProblemDoc =
        serde_json::from_slice(bytes).map_err(|e| ParseError::Malformed(e.to_string()))?;
    let mut matrix = Vec::with_capacity(doc.matrix.len());
    for (i, row) in doc.matrix.into_iter().enumerate() {
        let mut cells = Vec::with_capacity(row.len());
        for (j, cell) in row.into_iter().enumerate() {
            let arity = cell.len();
            let cell: [f64; 6] = cell.try_into().map_err(|_| ParseError::TupleArity {
                alternative: label_or(&doc.alternatives, i, "row"),
                criterion: label_or(&doc.criteria, j, "column"),
                found: arity,
            })?;
            cells.push(cell);
        }
        matrix.push(cells);
    }
    let raw = RawProblem {
        alternatives: doc.alternatives,
        criteria: doc.criteria,
        weights: doc.weights,
        normalize_weights,
        matrix,
    };
    Ok(raw.validate()?)
}

/// Renders a problem as pretty-printed JSON (schema in the module docs).
/// Component values round-trip exactly through [`parse_problem_json`].
pub fn render_problem_json(problem: &DecisionProblem) -> String {
    let doc = ProblemDoc {
        alternatives: problem.alternatives().to_vec(),
        criteria: problem.criteria().to_vec(),
        weights: problem.weights().as_slice().to_vec(),
        matrix: problem
            .matrix()
            .iter()
            .map(|row| row.iter().map(|cell| cell.components().to_vec()).collect())
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("problem documents always serialize");
    text.push('\n');
    text
}

fn label_or(labels: &[String], index: usize, kind: &str) -> String {
    labels
        .get(index)
        .cloned()
        .unwrap_or_else(|| format!("{kind} {}", index + 1))
}

/// Parses the CSV dialect described in the module docs and validates the
/// problem. Line numbers in errors are 1-based over the raw input.
pub fn parse_problem_csv(
    bytes: &[u8],
    normalize_weights: bool,
) -> Result<DecisionProblem, ParseError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| ParseError::Malformed("input is not valid UTF-8".into()))?;

    // Keep 1-based line numbers while skipping blank lines.
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.strip_suffix('\r').unwrap_or(line)))
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(n, line)| (n, line.split(',').collect::<Vec<_>>()));

    let (_, header) = rows
        .next()
        .ok_or_else(|| ParseError::Malformed("empty document: missing header row".into()))?;
    if header.len() < 2 {
        return Err(ParseError::Malformed(
            "header row must name at least one criterion after the leading separator".into(),
        ));
    }
    let criteria: Vec<String> = header[1..].iter().map(|s| s.to_string()).collect();

    let (weights_line, weights_fields) = rows
        .next()
        .filter(|(_, fields)| fields.first() == Some(&"#weights"))
        .ok_or_else(|| ParseError::Malformed("missing '#weights' row after the header".into()))?;
    if weights_fields.len() != criteria.len() + 1 {
        return Err(ParseError::Malformed(format!(
            "line {weights_line}: expected {} weights, found {}",
            criteria.len(),
            weights_fields.len() - 1
        )));
    }
    let weights = weights_fields[1..]
        .iter()
        .enumerate()
        .map(|(i, field)| parse_number(field, weights_line, i + 2))
        .collect::<Result<Vec<_>, _>>()?;

    let mut alternatives = Vec::new();
    let mut matrix = Vec::new();
    for (line, fields) in rows {
        if fields.len() != criteria.len() + 1 {
            return Err(ParseError::Malformed(format!(
                "line {line}: expected {} fields (label plus one cell per criterion), found {}",
                criteria.len() + 1,
                fields.len()
            )));
        }
        alternatives.push(fields[0].to_string());
        let mut cells = Vec::with_capacity(criteria.len());
        for (j, field) in fields[1..].iter().enumerate() {
            let column = j + 2; // 1-based CSV column; the label is column 1
            let parts: Vec<&str> = field.split('|').collect();
            if parts.len() != 6 {
                return Err(ParseError::CsvTupleArity {
                    line,
                    column,
                    found: parts.len(),
                });
            }
            let mut cell = [0.0; 6];
            for (k, part) in parts.iter().enumerate() {
                cell[k] = parse_number(part, line, column)?;
            }
            cells.push(cell);
        }
        matrix.push(cells);
    }

    let raw = RawProblem {
        alternatives,
        criteria,
        weights,
        normalize_weights,
        matrix,
    };
    Ok(raw.validate()?)
}

fn parse_number(field: &str, line: usize, column: usize) -> Result<f64, ParseError> {
    let value: f64 = field.trim().parse().map_err(|_| {
        ParseError::Malformed(format!(
            "line {line}, column {column}: invalid number {field:?}"
        ))
    })?;
    if !value.is_finite() {
        return Err(ParseError::Malformed(format!(
            "line {line}, column {column}: number must be finite, got {field:?}"
        )));
    }
    Ok(value)
}

/// Renders a problem in the CSV dialect. Fails with
/// [`ParseError::UnsupportedLabel`] when a label cannot survive the
/// dialect's split rules; component values round-trip exactly.
pub fn render_problem_csv(problem: &DecisionProblem) -> Result<String, ParseError> {
    for label in problem.alternatives().iter().chain(problem.criteria()) {
        if label.contains([',', '|', '\r', '\n']) || label.starts_with('#') || label.is_empty() {
            return Err(ParseError::UnsupportedLabel(label.clone()));
        }
    }
    let mut out = String::new();
    out.push(',');
    out.push_str(&problem.criteria().join(","));
    out.push('\n');
    out.push_str("#weights,");
    let weights: Vec<String> = problem
        .weights()
        .as_slice()
        .iter()
        .map(|w| format_full(*w))
        .collect();
    out.push_str(&weights.join(","));
    out.push('\n');
    for (label, row) in problem.alternatives().iter().zip(problem.matrix()) {
        out.push_str(label);
        for cell in row {
            out.push(',');
            let parts: Vec<String> = cell.components().iter().map(|v| format_full(*v)).collect();
            out.push_str(&parts.join("|"));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Shortest decimal form that parses back to exactly the same double.
fn format_full(value: f64) -> String {
    format!("{value}")
}

/// Parses a JSON set document (schema in the module docs) and validates it.
pub fn parse_set_json(bytes: &[u8]) -> Result<BnsSet, ParseError> {
    let doc: SetDoc =
        serde_json::from_slice(bytes).map_err(|e| ParseError::Malformed(e.to_string()))?;
    let mut assignments = Vec::with_capacity(doc.membership.len());
    for (label, components) in doc.membership {
        let arity = components.len();
        let components: [f64; 6] =
            components
                .try_into()
                .map_err(|_| ParseError::SetTupleArity {
                    label: label.clone(),
                    found: arity,
                })?;
        assignments.push((label, components));
    }
    Ok(BnsSet::from_components(doc.universe, assignments)?)
}

/// Renders a set as pretty-printed JSON; the exact inverse of
/// [`parse_set_json`].
pub fn render_set_json(set: &BnsSet) -> String {
    let doc = SetDoc {
        universe: set.universe().to_vec(),
        membership: set
            .iter()
            .map(|(label, value)| (label.to_string(), value.components().to_vec()))
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("set documents always serialize");
    text.push('\n');
    text
}

/// How [`render_report`] lays out a ranking report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStyle {
    /// Human-readable columns followed by the one-line ordering.
    Table,
    /// Machine-readable JSON at full precision (`precision` is ignored).
    Json,
}

/// Renders a ranking report.
///
/// The table style prints one row per alternative — aggregate tuple, score,
/// accuracy, certainty, rank — with every number truncated toward zero to
/// `precision` decimals, and ends with the ordering line (e.g.
/// `A3 > A4 > A2 > A1`). The JSON style carries the same data at full
/// precision plus the ordering string.
pub fn render_report(report: &RankingReport, style: ReportStyle, precision: usize) -> String {
    match style {
        ReportStyle::Table => render_table(report, precision),
        ReportStyle::Json => render_json(report),
    }
}

fn render_json(report: &RankingReport) -> String {
    let doc = ReportDoc {
        operator: report.operator().name(),
        ordering: report.ordering(),
        alternatives: report
            .entries()
            .iter()
            .map(|e| ReportRowDoc {
                label: e.label.clone(),
                aggregate: e.aggregate.components(),
                score: e.score,
                accuracy: e.accuracy,
                certainty: e.certainty,
                rank: e.rank,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("reports always serialize");
    text.push('\n');
    text
}

fn render_table(report: &RankingReport, precision: usize) -> String {
    const HEADERS: [&str; 6] = [
        "alternative",
        "aggregate",
        "score",
        "accuracy",
        "certainty",
        "rank",
    ];
    let rows: Vec<[String; 6]> = report
        .entries()
        .iter()
        .map(|e| {
            [
                e.label.clone(),
                e.aggregate.render(precision),
                format_truncated(e.score, precision),
                format_truncated(e.accuracy, precision),
                format_truncated(e.certainty, precision),
                e.rank.to_string(),
            ]
        })
        .collect();

    let widths: Vec<usize> = HEADERS
        .iter()
        .enumerate()
        .map(|(col, header)| {
            rows.iter()
                .map(|row| row[col].chars().count())
                .chain([header.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = String::new();
    let render_row = |out: &mut String, cells: [&str; 6]| {
        for (col, cell) in cells.iter().enumerate() {
            let pad = widths[col] - cell.chars().count();
            let last = col + 1 == cells.len();
            if col > 0 {
                out.push_str("  ");
            }
            if col < 2 {
                // Left-align the two text columns.
                out.push_str(cell);
                if !last {
                    out.push_str(&" ".repeat(pad));
                }
            } else {
                out.push_str(&" ".repeat(pad));
                out.push_str(cell);
            }
        }
        out.push('\n');
    };

    render_row(&mut out, HEADERS);
    for row in &rows {
        render_row(
            &mut out,
            [&row[0], &row[1], &row[2], &row[3], &row[4], &row[5]],
        );
    }
    out.push('\n');
    out.push_str(&report.ordering());
    out.push('\n');
    out
}
