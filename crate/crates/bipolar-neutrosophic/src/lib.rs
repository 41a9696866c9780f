//! Bipolar neutrosophic numbers, sets, weighted aggregation, and
//! decision-matrix ranking.
//!
//! A bipolar neutrosophic number grades a statement along six channels:
//! positive truth, indeterminacy, and falsity in `[0, 1]`, and their
//! implicit-counter-property counterparts in `[-1, 0]`. This crate provides:
//!
//! * [`Bnn`] — the validated number type with its algebra (addition,
//!   multiplication, scalar scaling and powers, complement) and the
//!   score / accuracy / certainty summaries used for ranking.
//! * [`BnsSet`] — sets over a labelled universe with union, intersection,
//!   complement, and containment, plus lossless embeddings of bipolar fuzzy
//!   and single-valued neutrosophic data.
//! * [`weighted_average`] / [`weighted_geometric`] — weight-vector
//!   aggregation of a family of numbers into one.
//! * [`DecisionProblem`] — alternatives × criteria matrices that aggregate
//!   each row and rank alternatives by score, with ties broken by accuracy
//!   and certainty.
//! * [`io`] and [`cli`] — JSON/CSV problem files, JSON set files, report
//!   rendering, and the `bnsdm` command-line tool built from them.
//!
//! ```
//! use bipolar_neutrosophic::Bnn;
//!
//! let a = Bnn::new(0.5, 0.3, 0.1, -0.6, -0.4, -0.01)?;
//! let b = Bnn::new(0.4, 0.6, 0.3, -0.3, -0.5, -0.1)?;
//! let sum = a.add(b);
//! assert!(sum.score() > a.score().min(b.score()));
//! # Ok::<(), bipolar_neutrosophic::BnnError>(())
//! ```

pub mod aggregate;
pub mod bnn;
pub mod cli;
pub mod io;
pub mod mcdm;
pub mod set;

pub use aggregate::{
    weighted_average, weighted_geometric, AggregateError, AggregationOp, WeightError, WeightVector,
};
pub use bnn::{Bnn, BnnError, Component, RankOrdering, DEFAULT_COMPARE_TOLERANCE};
pub use mcdm::{DecisionProblem, ProblemError, RankedAlternative, RankingReport, RawProblem};
pub use set::{BipolarFuzzySet, BnsSet, SetError, SvnSet};
