//! Decision-matrix ranking.
//!
//! A [`DecisionProblem`] holds one row of bipolar neutrosophic judgements
//! per alternative, one column per weighted criterion. [`DecisionProblem::rank`]
//! aggregates each row with the chosen operator, summarizes every aggregate
//! by score/accuracy/certainty, and orders the alternatives by the
//! three-key comparison, reporting ties explicitly.

use std::collections::HashSet;

use crate::aggregate::{AggregationOp, WeightError, WeightVector};
use crate::bnn::{Bnn, BnnError, RankOrdering};

/// Errors raised when validating a decision problem.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ProblemError {
    /// The matrix must have one row per alternative.
    #[error("expected {expected} matrix rows (one per alternative), found {found}")]
    RowCountMismatch { expected: usize, found: usize },
    /// Every row must have one cell per criterion.
    #[error("row {alternative:?} has {found} cells, expected {expected}")]
    RowLengthMismatch {
        alternative: String,
        expected: usize,
        found: usize,
    },
    /// The weight vector must have one entry per criterion.
    #[error("{count} weights given for {criteria} criteria")]
    WeightCountMismatch { count: usize, criteria: usize },
    /// Alternative labels must be unique.
    #[error("duplicate alternative label {0:?}")]
    DuplicateAlternative(String),
    /// Criterion labels must be unique.
    #[error("duplicate criterion label {0:?}")]
    DuplicateCriterion(String),
    /// A matrix cell failed validation; coordinates are (alternative, criterion).
    #[error("cell ({alternative}, {criterion}): {source}")]
    Cell {
        alternative: String,
        criterion: String,
        source: BnnError,
    },
    /// The weight list itself failed validation.
    #[error(transparent)]
    Weights(#[from] WeightError),
}

/// An unvalidated decision problem, exactly as read from a file: raw
/// component tuples and raw weights. [`RawProblem::validate`] turns it into
/// a [`DecisionProblem`] or reports the offending cell.
#[derive(Debug, Clone, PartialEq)]
pub struct RawProblem {
    /// Alternative labels, one per matrix row.
    pub alternatives: Vec<String>,
    /// Criterion labels, one per matrix column.
    pub criteria: Vec<String>,
    /// Raw weights, one per criterion.
    pub weights: Vec<f64>,
    /// If set, the weights are proportions to be rescaled to sum 1;
    /// otherwise they must already sum to 1.
    pub normalize_weights: bool,
    /// Row-major component tuples in the order `[t+, i+, f+, t-, i-, f-]`.
    pub matrix: Vec<Vec<[f64; 6]>>,
}

impl RawProblem {
    /// Validates shape, labels, weights, and every cell.
    pub fn validate(self) -> Result<DecisionProblem, ProblemError> {
        check_distinct(&self.alternatives, ProblemError::DuplicateAlternative)?;
        check_distinct(&self.criteria, ProblemError::DuplicateCriterion)?;
        if self.weights.len() != self.criteria.len() {
            return Err(ProblemError::WeightCountMismatch {
                count: self.weights.len(),
                criteria: self.criteria.len(),
            });
        }
        if self.matrix.len() != self.alternatives.len() {
            return Err(ProblemError::RowCountMismatch {
                expected: self.alternatives.len(),
                found: self.matrix.len(),
            });
        }

        let weights = if self.normalize_weights {
            WeightVector::normalized(self.weights)?
        } else {
            WeightVector::new(self.weights)?
        };

        let mut matrix = Vec::with_capacity(self.matrix.len());
        for (alternative, row) in self.alternatives.iter().zip(self.matrix) {
            if row.len() != self.criteria.len() {
                return Err(ProblemError::RowLengthMismatch {
                    alternative: alternative.clone(),
                    expected: self.criteria.len(),
                    found: row.len(),
                });
            }
            let mut cells = Vec::with_capacity(row.len());
            for (criterion, c) in self.criteria.iter().zip(row) {
                let cell = Bnn::new(c[0], c[1], c[2], c[3], c[4], c[5]).map_err(|source| {
                    ProblemError::Cell {
                        alternative: alternative.clone(),
                        criterion: criterion.clone(),
                        source,
                    }
                })?;
                cells.push(cell);
            }
            matrix.push(cells);
        }

        DecisionProblem::new(self.alternatives, self.criteria, weights, matrix)
    }
}

fn check_distinct(
    labels: &[String],
    error: impl Fn(String) -> ProblemError,
) -> Result<(), ProblemError> {
    let mut seen = HashSet::new();
    for label in labels {
        if !seen.insert(label) {
            return Err(error(label.clone()));
        }
    }
    Ok(())
}

/// A validated decision problem: `m` alternatives judged against `n`
/// weighted criteria, every cell a valid [`Bnn`].
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    weights: WeightVector,
    matrix: Vec<Vec<Bnn>>,
}

impl DecisionProblem {
    /// Builds a problem from already-validated parts, checking shape and
    /// label uniqueness.
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<String>,
        weights: WeightVector,
        matrix: Vec<Vec<Bnn>>,
    ) -> Result<Self, ProblemError> {
        check_distinct(&alternatives, ProblemError::DuplicateAlternative)?;
        check_distinct(&criteria, ProblemError::DuplicateCriterion)?;
        if weights.len() != criteria.len() {
            return Err(ProblemError::WeightCountMismatch {
                count: weights.len(),
                criteria: criteria.len(),
            });
        }
        if matrix.len() != alternatives.len() {
            return Err(ProblemError::RowCountMismatch {
                expected: alternatives.len(),
                found: matrix.len(),
            });
        }
        for (alternative, row) in alternatives.iter().zip(&matrix) {
            if row.len() != criteria.len() {
                return Err(ProblemError::RowLengthMismatch {
                    alternative: alternative.clone(),
                    expected: criteria.len(),
                    found: row.len(),
                });
            }
            for cell in row {
                // Redundant given the component ranges, but part of the
                // type's stated contract.
                let c = cell.components();
                let sum = c[0] + c[1] + c[2] - c[3] - c[4] - c[5];
                assert!(
                    (0.0..=6.0).contains(&sum),
                    "component-sum bound violated: {sum}"
                );
            }
        }
        Ok(DecisionProblem {
            alternatives,
            criteria,
            weights,
            matrix,
        })
    }

    /// Alternative labels in input order.
    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    /// Criterion labels in input order.
    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    /// The validated criterion weights.
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// The judgement matrix, row-major in alternative order.
    pub fn matrix(&self) -> &[Vec<Bnn>] {
        &self.matrix
    }

    /// Aggregates every alternative's row into a single number with the
    /// chosen operator, preserving row order.
    pub fn aggregate_rows(&self, op: AggregationOp) -> Vec<Bnn> {
        self.matrix
            .iter()
            .map(|row| op.apply(row, &self.weights).expect("dimensions validated"))
            .collect()
    }

    /// Aggregates, summarizes, and ranks the alternatives.
    pub fn rank(&self, op: AggregationOp) -> RankingReport {
        let aggregates = self.aggregate_rows(op);

        // Sort indices best-first on the raw summary keys. Raw keys give
        // the stable sort a genuine total order (the tolerance-based
        // comparison does not); tolerance ties are regrouped below, and
        // the stable sort keeps exact ties in input order.
        let mut order: Vec<usize> = (0..aggregates.len()).collect();
        order.sort_by(|&i, &j| {
            let (a, b) = (&aggregates[i], &aggregates[j]);
            b.score()
                .total_cmp(&a.score())
                .then(b.accuracy().total_cmp(&a.accuracy()))
                .then(b.certainty().total_cmp(&a.certainty()))
        });

        // Group ties: a new group starts when the candidate differs from
        // the group's first member (comparing against the head avoids
        // letting near-tolerance ties drift across a long chain).
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for idx in order {
            match groups.last_mut() {
                Some(group)
                    if aggregates[group[0]].compare(&aggregates[idx]) == RankOrdering::Equal =>
                {
                    group.push(idx);
                }
                _ => groups.push(vec![idx]),
            }
        }

        // Competition ranking: tied entries share a rank, the next rank
        // skips the tied block (1, 2, 2, 4).
        let mut ranks = vec![0usize; aggregates.len()];
        let mut next_rank = 1;
        for group in &groups {
            for &idx in group {
                ranks[idx] = next_rank;
            }
            next_rank += group.len();
        }

        let entries = self
            .alternatives
            .iter()
            .zip(&aggregates)
            .zip(&ranks)
            .map(|((label, aggregate), &rank)| RankedAlternative {
                label: label.clone(),
                aggregate: *aggregate,
                score: aggregate.score(),
                accuracy: aggregate.accuracy(),
                certainty: aggregate.certainty(),
                rank,
            })
            .collect();

        let ordering_groups = groups
            .into_iter()
            .map(|group| {
                group
                    .into_iter()
                    .map(|i| self.alternatives[i].clone())
                    .collect()
            })
            .collect();

        RankingReport {
            operator: op,
            entries,
            ordering_groups,
        }
    }
}

/// One alternative's line in a [`RankingReport`].
#[derive(Debug, Clone, PartialEq)]
pub struct RankedAlternative {
    /// The alternative's label.
    pub label: String,
    /// The row aggregate the summaries are computed from (full precision).
    pub aggregate: Bnn,
    /// Score of the aggregate, in `[0, 1]`.
    pub score: f64,
    /// Accuracy of the aggregate, in `[-2, 2]`.
    pub accuracy: f64,
    /// Certainty of the aggregate, in `[0, 2]`.
    pub certainty: f64,
    /// Competition rank (1-based; tied alternatives share a rank and the
    /// following rank is skipped).
    pub rank: usize,
}

/// The outcome of ranking a decision problem: per-alternative summaries in
/// input order plus the best-first ordering with explicit ties.
#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport {
    operator: AggregationOp,
    entries: Vec<RankedAlternative>,
    ordering_groups: Vec<Vec<String>>,
}

impl RankingReport {
    /// The operator the rows were aggregated with.
    pub fn operator(&self) -> AggregationOp {
        self.operator
    }

    /// Per-alternative results in the problem's input order.
    pub fn entries(&self) -> &[RankedAlternative] {
        &self.entries
    }

    /// Labels grouped by rank, best first; groups with more than one label
    /// are ties.
    pub fn ordering_groups(&self) -> &[Vec<String>] {
        &self.ordering_groups
    }

    /// The ordering on one line, best first: `>` separates strictly ranked
    /// alternatives, `=` joins ties. Example: `A3 > A4 = A2 > A1`.
    pub fn ordering(&self) -> String {
        self.ordering_groups
            .iter()
            .map(|group| group.join(" = "))
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

#[cfg(test)]
// Golden constants are frozen at more digits than the shortest float
// representation so they can be checked against the generating computation.
#[allow(clippy::excessive_precision)]
mod tests {
    use std::cmp::Ordering;

    use super::*;

    fn demo_problem() -> DecisionProblem {
        demo_raw_problem()
            .validate()
            .expect("demo problem is valid")
    }

    /// The 4-alternative, 4-criterion demo problem used across the crate.
    fn demo_raw_problem() -> RawProblem {
        RawProblem {
            alternatives: ["A1", "A2", "A3", "A4"].map(String::from).to_vec(),
            criteria: ["C1", "C2", "C3", "C4"].map(String::from).to_vec(),
            weights: vec![0.5, 0.25, 0.125, 0.125],
            normalize_weights: false,
            matrix: vec![
                vec![
                    [0.5, 0.7, 0.2, -0.7, -0.3, -0.6],
                    [0.4, 0.4, 0.5, -0.7, -0.8, -0.4],
                    [0.7, 0.7, 0.5, -0.8, -0.7, -0.6],
                    [0.1, 0.5, 0.7, -0.5, -0.2, -0.8],
                ],
                vec![
                    [0.9, 0.7, 0.5, -0.7, -0.7, -0.1],
                    [0.7, 0.6, 0.8, -0.7, -0.5, -0.1],
                    [0.9, 0.4, 0.6, -0.1, -0.7, -0.5],
                    [0.5, 0.2, 0.7, -0.5, -0.1, -0.9],
                ],
                vec![
                    [0.3, 0.4, 0.2, -0.6, -0.3, -0.7],
                    [0.2, 0.2, 0.2, -0.4, -0.7, -0.4],
                    [0.9, 0.5, 0.5, -0.6, -0.5, -0.2],
                    [0.7, 0.5, 0.3, -0.4, -0.2, -0.2],
                ],
                vec![
                    [0.9, 0.7, 0.2, -0.8, -0.6, -0.1],
                    [0.3, 0.5, 0.2, -0.5, -0.5, -0.2],
                    [0.5, 0.4, 0.5, -0.1, -0.7, -0.2],
                    [0.4, 0.2, 0.8, -0.5, -0.5, -0.6],
                ],
            ],
        }
    }

    #[test]
    fn demo_problem_validates() {
        let p = demo_problem();
        assert_eq!(p.alternatives().len(), 4);
        assert_eq!(p.criteria().len(), 4);
        assert_eq!(p.weights().as_slice(), [0.5, 0.25, 0.125, 0.125]);
    }

    #[test]
    fn validation_rejects_wrong_weight_count() {
        let mut raw = demo_raw_problem();
        raw.weights.pop();
        assert_eq!(
            raw.validate().unwrap_err(),
            ProblemError::WeightCountMismatch {
                count: 3,
                criteria: 4
            }
        );
    }

    #[test]
    fn validation_rejects_ragged_rows() {
        let mut raw = demo_raw_problem();
        raw.matrix[2].pop();
        assert_eq!(
            raw.validate().unwrap_err(),
            ProblemError::RowLengthMismatch {
                alternative: "A3".into(),
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn validation_names_the_offending_cell() {
        let mut raw = demo_raw_problem();
        raw.matrix[0][1][0] = 1.5;
        match raw.validate().unwrap_err() {
            ProblemError::Cell {
                alternative,
                criterion,
                ..
            } => {
                assert_eq!(alternative, "A1");
                assert_eq!(criterion, "C2");
            }
            other => panic!("expected a cell error, got {other:?}"),
        }
    }

    #[test]
    fn validation_rejects_duplicate_labels() {
        let mut raw = demo_raw_problem();
        raw.alternatives[3] = "A1".into();
        assert_eq!(
            raw.validate().unwrap_err(),
            ProblemError::DuplicateAlternative("A1".into())
        );

        let mut raw = demo_raw_problem();
        raw.criteria[2] = "C1".into();
        assert_eq!(
            raw.validate().unwrap_err(),
            ProblemError::DuplicateCriterion("C1".into())
        );
    }

    #[test]
    fn average_aggregates_match_high_precision_reference() {
        // Reference values from a 50-digit evaluation of the same formulas.
        let expected = [
            [
                0.47162375362755956,
                0.58354254264251395,
                0.32981165927499853,
                -0.68246601404202532,
                -0.53190616196080918,
                -0.59406728203731912,
            ],
            [
                0.83906460724528768,
                0.53699851037688780,
                0.60001714506158141,
                -0.52625323741430960,
                -0.60895782575757758,
                -0.36459133549366080,
            ],
            [
                0.48954005000530366,
                0.35565588200778458,
                0.23593040006382140,
                -0.51536750065179428,
                -0.44781216762002043,
                -0.54409858860904444,
            ],
            [
                0.75116316614216289,
                0.51307135616407933,
                0.26670428643266482,
                -0.51720027261262037,
                -0.58044982736426065,
                -0.22189626720939420,
            ],
        ];
        let aggregates = demo_problem().aggregate_rows(AggregationOp::Average);
        for (row, (aggregate, want)) in aggregates.iter().zip(expected).enumerate() {
            for (i, (a, e)) in aggregate.components().iter().zip(want).enumerate() {
                assert!(
                    (a - e).abs() <= 1e-12,
                    "row {row} component {i}: {a} vs {e}"
                );
            }
        }
    }

    #[test]
    fn geometric_aggregates_match_high_precision_reference() {
        // Reference values from a 50-digit evaluation of the same formulas.
        let expected = [
            [
                0.40330838841980287,
                0.61971442913247769,
                0.40666645576256405,
                -0.69602284847832608,
                -0.40513440730711290,
                -0.56201224462514888,
            ],
            [
                0.78532121340732817,
                0.60259733071568440,
                0.63722265603369160,
                -0.63314663650184441,
                -0.50457854034777288,
                -0.16093539275471234,
            ],
            [
                0.34572890841222355,
                0.38398594235179543,
                0.25813309784027779,
                -0.53431289381564066,
                -0.37569475963405371,
                -0.44496055862540593,
            ],
            [
                0.57415654235898382,
                0.57979783748419055,
                0.36566672994510267,
                -0.65966308086129286,
                -0.57125055079289257,
                -0.16223896036109776,
            ],
        ];
        let aggregates = demo_problem().aggregate_rows(AggregationOp::Geometric);
        for (row, (aggregate, want)) in aggregates.iter().zip(expected).enumerate() {
            for (i, (a, e)) in aggregate.components().iter().zip(want).enumerate() {
                assert!(
                    (a - e).abs() <= 1e-12,
                    "row {row} component {i}: {a} vs {e}"
                );
            }
        }
    }

    #[test]
    fn average_ranking_reproduces_expected_order() {
        let report = demo_problem().rank(AggregationOp::Average);
        assert_eq!(report.ordering(), "A3 > A4 > A2 > A1");
        assert_eq!(report.operator(), AggregationOp::Average);

        let expected_scores = [
            0.50029616361102501,
            0.52489081260729121,
            0.56241617058516138,
            0.54275555758440887,
        ];
        let expected_ranks = [4, 3, 1, 2];
        for (entry, (score, rank)) in report
            .entries()
            .iter()
            .zip(expected_scores.into_iter().zip(expected_ranks))
        {
            assert!(
                (entry.score - score).abs() <= 1e-12,
                "{}: {} vs {score}",
                entry.label,
                entry.score
            );
            assert_eq!(entry.rank, rank, "{}", entry.label);
        }
    }

    #[test]
    fn single_criterion_rows_pass_through() {
        let raw = RawProblem {
            alternatives: vec!["A1".into(), "A2".into()],
            criteria: vec!["C1".into()],
            weights: vec![1.0],
            normalize_weights: false,
            matrix: vec![
                vec![[0.5, 0.3, 0.1, -0.6, -0.4, -0.01]],
                vec![[0.3, 0.2, 0.7, -0.02, -0.003, -0.5]],
            ],
        };
        let p = raw.validate().unwrap();
        let aggregates = p.aggregate_rows(AggregationOp::Average);
        for (aggregate, row) in aggregates.iter().zip(p.matrix()) {
            for (a, e) in aggregate.components().iter().zip(row[0].components()) {
                assert!((a - e).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn identical_rows_tie_and_share_a_rank() {
        let cell = [0.5, 0.3, 0.1, -0.6, -0.4, -0.01];
        let other = [0.9, 0.1, 0.1, -0.1, -0.8, -0.9];
        let raw = RawProblem {
            alternatives: vec!["A1".into(), "A2".into(), "A3".into()],
            criteria: vec!["C1".into()],
            weights: vec![1.0],
            normalize_weights: false,
            matrix: vec![vec![cell], vec![other], vec![cell]],
        };
        let report = raw.validate().unwrap().rank(AggregationOp::Average);
        assert_eq!(report.ordering(), "A2 > A1 = A3");
        let ranks: Vec<usize> = report.entries().iter().map(|e| e.rank).collect();
        assert_eq!(ranks, [2, 1, 2]);
    }

    #[test]
    fn score_ties_fall_back_to_accuracy() {
        // Aggregates tie on score (0.5 each) but differ on accuracy.
        let raw = RawProblem {
            alternatives: vec!["A1".into(), "A2".into()],
            criteria: vec!["C1".into()],
            weights: vec![1.0],
            normalize_weights: false,
            matrix: vec![
                vec![[0.5, 0.4, 0.6, -0.5, -0.5, -0.5]],
                vec![[0.5, 0.5, 0.5, -0.5, -0.5, -0.5]],
            ],
        };
        let report = raw.validate().unwrap().rank(AggregationOp::Average);
        assert_eq!(report.ordering(), "A2 > A1");
    }

    #[test]
    fn ranking_is_consistent_with_pairwise_comparison() {
        let p = demo_problem();
        let report = p.rank(AggregationOp::Geometric);
        let aggregates = p.aggregate_rows(AggregationOp::Geometric);
        for i in 0..aggregates.len() {
            for j in 0..aggregates.len() {
                let by_rank = report.entries()[i].rank.cmp(&report.entries()[j].rank);
                let by_compare = match aggregates[i].compare(&aggregates[j]) {
                    RankOrdering::Greater => Ordering::Less,
                    RankOrdering::Less => Ordering::Greater,
                    RankOrdering::Equal => Ordering::Equal,
                };
                assert_eq!(by_rank, by_compare, "pair ({i}, {j})");
            }
        }
    }

    #[test]
    fn zero_weight_criterion_can_be_deleted() {
        let mut raw = demo_raw_problem();
        raw.criteria.push("C5".into());
        raw.weights.push(0.0);
        for row in &mut raw.matrix {
            row.push([1.0, 0.0, 0.0, 0.0, -1.0, -1.0]);
        }
        let extended = raw.validate().unwrap().rank(AggregationOp::Average);
        let baseline = demo_problem().rank(AggregationOp::Average);
        assert_eq!(extended.ordering(), baseline.ordering());
        for (x, b) in extended.entries().iter().zip(baseline.entries()) {
            assert_eq!(x.aggregate, b.aggregate, "{}", x.label);
        }
    }
}
